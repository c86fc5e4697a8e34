"""Reference incidence data for PG(3,2), transcribed as literal rows.

``LINES`` maps each line id to (points, b, generator word, dual line id).
``POINTS`` lists, per point x: the lines through x, the points of the plane
x^perp, and the lines contained in x^perp. The data is checked against an
independent derivation in :func:`phantomcodes.pg32.verify_tables`.
"""

from __future__ import annotations

LINES: dict[int, tuple[tuple[str, str, str], str, str, int]] = {
    1: (('1000', '0100', '1100'), '10101010', 'Id', 20),
    2: (('1000', '0010', '1010'), '00110011', 'g23g32', 10),
    3: (('1000', '0110', '1110'), '01100110', 'g32', 28),
    4: (('1000', '0001', '1001'), '11110000', 'g34g23g43g32', 8),
    5: (('1000', '0101', '1101'), '01011010', 'g32g43g32', 22),
    6: (('1000', '0011', '1011'), '11000011', 'g23g43g32', 12),
    7: (('1000', '0111', '1111'), '01101001', 'g43g32', 30),
    8: (('0100', '0010', '0110'), '11010010', 'g12g23g21g32', 4),
    9: (('0100', '1010', '1110'), '10000111', 'g12g21g32', 24),
    10: (('0100', '0001', '0101'), '01100011', 'g12g34g23g21g43g32', 2),
    11: (('0100', '1001', '1101'), '00110110', 'g12g34g21g43g32', 21),
    12: (('0100', '0011', '0111'), '10110001', 'g12g23g21g43g32', 6),
    13: (('0100', '1011', '1111'), '00011011', 'g12g21g43g32', 25),
    14: (('1100', '0010', '1110'), '11100001', 'g23g21g32', 16),
    15: (('1100', '1010', '0110'), '01001011', 'g21g32', 32),
    16: (('1100', '0001', '1101'), '10010011', 'g34g23g21g43g32', 14),
    17: (('1100', '1001', '0101'), '00111001', 'g34g21g43g32', 23),
    18: (('1100', '0011', '1111'), '01110010', 'g23g21g43g32', 18),
    19: (('1100', '1011', '0111'), '00100111', 'g21g43g32', 35),
    20: (('0010', '0001', '0011'), '10100110', 'g23g12g34g32g23g21g43g32', 1),
    21: (('0010', '1001', '1011'), '01101010', 'g23g43g34g32g21g43g32', 11),
    22: (('0010', '0101', '0111'), '01110100', 'g23g12g32g23g21g43g32', 5),
    23: (('0010', '1101', '1111'), '01000111', 'g43g32g23g21g43g32', 17),
    24: (('1010', '0001', '1011'), '10101001', 'g34g23g34g32g21g43g32', 9),
    25: (('1010', '1001', '0011'), '01100101', 'g23g34g32g21g43g32', 13),
    26: (('1010', '0101', '1111'), '11010001', 'g43g32g21g43g32', 26),
    27: (('1010', '1101', '0111'), '11100010', 'g34g43g32g21g43g32', 34),
    28: (('0110', '0001', '0111'), '00111010', 'g12g34g32g23g21g43g32', 3),
    29: (('0110', '1001', '1111'), '10100011', 'g43g34g32g21g43g32', 29),
    30: (('0110', '0101', '0011'), '00010111', 'g12g32g23g21g43g32', 7),
    31: (('0110', '1101', '1011'), '01110001', 'g12g32g21g43g32', 33),
    32: (('1110', '0001', '1111'), '00110101', 'g34g32g23g21g43g32', 15),
    33: (('1110', '1001', '0111'), '01010011', 'g34g32g21g43g32', 31),
    34: (('1110', '0101', '1011'), '10110010', 'g32g21g43g32', 27),
    35: (('1110', '1101', '0011'), '00101011', 'g32g23g21g43g32', 19),
}

POINTS: list[tuple[str, tuple[int, ...], tuple[str, ...], tuple[int, ...]]] = [
    ('1000', (1, 2, 3, 4, 5, 6, 7), ('0100', '0010', '0110', '0001', '0101', '0011', '0111'), (8, 10, 12, 20, 22, 28, 30)),
    ('0100', (1, 8, 9, 10, 11, 12, 13), ('1000', '0010', '1010', '0001', '1001', '0011', '1011'), (2, 4, 6, 20, 21, 24, 25)),
    ('1100', (1, 14, 15, 16, 17, 18, 19), ('1100', '0010', '1110', '0001', '1101', '0011', '1111'), (14, 16, 18, 20, 23, 32, 35)),
    ('0010', (2, 8, 14, 20, 21, 22, 23), ('1000', '0100', '1100', '0001', '1001', '0101', '1101'), (1, 4, 5, 10, 11, 16, 17)),
    ('1010', (2, 9, 15, 24, 25, 26, 27), ('0100', '1010', '1110', '0001', '0101', '1011', '1111'), (9, 10, 13, 24, 26, 32, 34)),
    ('0110', (3, 8, 15, 28, 29, 30, 31), ('1000', '0110', '1110', '0001', '1001', '0111', '1111'), (3, 4, 7, 28, 29, 32, 33)),
    ('1110', (3, 9, 14, 32, 33, 34, 35), ('1100', '1010', '0110', '0001', '1101', '1011', '0111'), (15, 16, 19, 24, 27, 28, 31)),
    ('0001', (4, 10, 16, 20, 24, 28, 32), ('1000', '0100', '1100', '0010', '1010', '0110', '1110'), (1, 2, 3, 8, 9, 14, 15)),
    ('1001', (4, 11, 17, 21, 25, 29, 33), ('0100', '0010', '0110', '1001', '1101', '1011', '1111'), (8, 11, 13, 21, 23, 29, 31)),
    ('0101', (5, 10, 17, 22, 26, 30, 34), ('1000', '0010', '1010', '0101', '1101', '0111', '1111'), (2, 5, 7, 22, 23, 26, 27)),
    ('1101', (5, 11, 16, 23, 27, 31, 35), ('1100', '0010', '1110', '1001', '0101', '1011', '0111'), (14, 17, 19, 21, 22, 33, 34)),
    ('0011', (6, 12, 18, 20, 25, 30, 35), ('1000', '0100', '1100', '0011', '1011', '0111', '1111'), (1, 6, 7, 12, 13, 18, 19)),
    ('1011', (6, 13, 19, 21, 24, 31, 34), ('0100', '1010', '1110', '1001', '1101', '0011', '0111'), (9, 11, 12, 25, 27, 33, 35)),
    ('0111', (7, 12, 19, 22, 27, 28, 33), ('1000', '0110', '1110', '0101', '1101', '0011', '1011'), (3, 5, 6, 30, 31, 34, 35)),
    ('1111', (7, 13, 18, 23, 26, 29, 32), ('1100', '1010', '0110', '1001', '0101', '0011', '1111'), (15, 17, 18, 25, 26, 29, 30)),
]
