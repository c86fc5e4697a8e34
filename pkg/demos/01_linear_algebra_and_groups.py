"""
Binary linear algebra and the GL_4(F_2) -> A_8 isomorphism
==========================================================

Run with ``python3 demos/01_linear_algebra_and_groups.py``.
"""

# %%
# Codes over F_2 are stored as packed rows in reduced echelon form.
from __future__ import annotations

from phantomcodes.gf2 import ClassicalCode, min_weight
from phantomcodes.gl import gl4_words, gl_order, phi, phi_generators, transvection
from phantomcodes.permgroup import PermGroup

hamming = ClassicalCode(7, [0b1110000, 0b1001100, 0b0101010, 0b1101001])
print("Hamming code:", hamming.n, hamming.dim, min_weight(hamming))
print("dual dimension:", hamming.dual().dim, "dual contained in the code:", hamming.dual().issubcode(hamming))

# %%
# The six adjacent transvections map to products of four disjoint transpositions.
for g, s in zip(["g12", "g23", "g34", "g21", "g32", "g43"], phi_generators()):
    print(g, "->", s.cycle_string())

a8 = PermGroup(phi_generators())
print("closure order:", a8.order, "=", gl_order(4))

# %%
# phi extends to the whole group; a composite transvection gets its image by a word.
g13 = transvection(1, 3, 4)
print("phi(g13) =", phi(g13).cycle_string())
print("images are distinct:", len({phi(g) for g in gl4_words()}) == 20160)
