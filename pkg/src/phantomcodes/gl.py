"""GL_k(F_2) through elementary transvections, and the isomorphism GL_4(F_2) -> A_8.

Matrices act on column vectors. A vector x in F_2^k is packed as an integer
with coordinate 1 in the most significant bit, so ``0b1000`` is e_1 in k=4.
Words in transvections are read as ordinary matrix products in written
order: the word ``g34 g23`` means the matrix ``g34 @ g23``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .gf2 import Gf2Matrix, parity, rank_rows
from .permgroup import Permutation, bfs_closure


@dataclass(frozen=True)
class GlElement:
    """An invertible k x k binary matrix stored as packed rows."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        if k < 1:
            raise ValueError("dimension must be positive")
        if any(r < 0 or r >> k for r in self.rows):
            raise ValueError("row does not fit in k bits")
        if rank_rows(self.rows) != k:
            raise ValueError("matrix is not invertible over F_2")

    @classmethod
    def _unchecked(cls, rows: tuple[int, ...]) -> GlElement:
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        return obj

    @classmethod
    def from_matrix(cls, m: Gf2Matrix | Sequence[Sequence[int]] | np.ndarray) -> GlElement:
        m = m if isinstance(m, Gf2Matrix) else Gf2Matrix(m)
        if m.rows != m.cols:
            raise ValueError("matrix must be square")
        return cls(tuple(m.packed_rows()))

    @classmethod
    def identity(cls, k: int) -> GlElement:
        return cls._unchecked(tuple(1 << (k - 1 - i) for i in range(k)))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> Gf2Matrix:
        return Gf2Matrix.from_packed(self.rows, self.k)

    def entry(self, i: int, j: int) -> int:
        """Entry (i, j), 1-based."""
        return (self.rows[i - 1] >> (self.k - j)) & 1

    def __mul__(self, other: GlElement) -> GlElement:
        k = self.k
        if other.k != k:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for j in range(k):
                if (r >> (k - 1 - j)) & 1:
                    acc ^= other.rows[j]
            out.append(acc)
        return GlElement._unchecked(tuple(out))

    __matmul__ = __mul__

    def apply(self, x: int) -> int:
        """Matrix times column vector, on packed vectors."""
        k = self.k
        out = 0
        for r in self.rows:
            out = (out << 1) | parity(r & x)
        return out & ((1 << k) - 1)

    def transpose(self) -> GlElement:
        k = self.k
        cols = []
        for j in range(k):
            c = 0
            for r in self.rows:
                c = (c << 1) | ((r >> (k - 1 - j)) & 1)
            cols.append(c)
        return GlElement._unchecked(tuple(cols))

    @property
    def T(self) -> GlElement:
        return self.transpose()

    def inverse(self) -> GlElement:
        return GlElement._unchecked(tuple(self.matrix.inverse().packed_rows()))

    def is_identity(self) -> bool:
        return self == GlElement.identity(self.k)

    def __repr__(self) -> str:
        body = "; ".join(format(r, f"0{self.k}b") for r in self.rows)
        return f"GlElement([{body}])"


def transvection(i: int, j: int, k: int) -> GlElement:
    """The elementary transvection g_ij = 1 + E_ij."""
    if not (1 <= i <= k and 1 <= j <= k):
        raise IndexError(f"indices ({i}, {j}) out of range 1..{k}")
    if i == j:
        raise IndexError("transvection needs i != j")
    rows = list(GlElement.identity(k).rows)
    rows[i - 1] |= 1 << (k - j)
    return GlElement._unchecked(tuple(rows))


def commutator(a: GlElement, b: GlElement) -> GlElement:
    return a * b * a.inverse() * b.inverse()


def gl_order(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    out = 1
    for l in range(k):
        out *= 2**k - 2**l
    return out


def dual_element(g: GlElement) -> GlElement:
    """Inverse transpose g^{-T}."""
    return g.inverse().transpose()


def elementary_transvections(k: int) -> list[tuple[int, int]]:
    """All k(k-1) index pairs (i, j), i != j, in lexicographic order."""
    return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j]


# ---------------------------------------------------------------------------
# words


_LETTER = re.compile(r"g_?\{?(\d)(\d)\}?")


def parse_word(text: str) -> list[tuple[int, int]]:
    """Parse a word such as ``"g34g23g43g32"``; ``"Id"`` is the empty word."""
    s = text.replace(" ", "").replace("·", "")
    if s in ("", "Id", "id", "1", "e"):
        return []
    letters = []
    pos = 0
    for m in _LETTER.finditer(s):
        if m.start() != pos:
            raise ValueError(f"malformed transvection word: {text!r}")
        letters.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if pos != len(s):
        raise ValueError(f"malformed transvection word: {text!r}")
    return letters


def format_word(letters: Iterable[tuple[int, int]]) -> str:
    s = "".join(f"g{i}{j}" for i, j in letters)
    return s or "Id"


def evaluate_word(letters: Iterable[tuple[int, int]], k: int) -> GlElement:
    out = GlElement.identity(k)
    for i, j in letters:
        out = out * transvection(i, j, k)
    return out


# ---------------------------------------------------------------------------
# phi : GL_4(F_2) -> A_8

ADJACENT = ((1, 2), (2, 3), (3, 4), (2, 1), (3, 2), (4, 3))

PHI_GENERATOR_IMAGES = {
    (1, 2): "(1 2)(3 4)(5 6)(7 8)",
    (2, 3): "(1 5)(2 8)(3 7)(4 6)",
    (3, 4): "(1 2)(3 8)(4 7)(5 6)",
    (2, 1): "(1 4)(2 7)(3 8)(5 6)",
    (3, 2): "(1 6)(2 5)(3 7)(4 8)",
    (4, 3): "(1 4)(2 3)(5 6)(7 8)",
}

TAU_C = "(2 4)(3 7)(5 6)"


def phi_generators() -> list[Permutation]:
    return [Permutation.from_cycles(PHI_GENERATOR_IMAGES[p], 8) for p in ADJACENT]


def adjacent_transvections() -> list[GlElement]:
    return [transvection(i, j, 4) for i, j in ADJACENT]


def tau_c() -> Permutation:
    return Permutation.from_cycles(TAU_C, 8)


@lru_cache(maxsize=None)
def gl4_words() -> dict[GlElement, tuple[int, ...]]:
    """Every element of GL_4(F_2) with one word in the six adjacent transvections."""
    return bfs_closure(adjacent_transvections(), GlElement.__mul__, GlElement.identity(4))


@lru_cache(maxsize=None)
def _phi_table() -> dict[GlElement, Permutation]:
    """phi on every element, evaluated along the BFS words of :func:`gl4_words`."""
    gens = adjacent_transvections()
    imgs = phi_generators()
    table = {GlElement.identity(4): Permutation.identity(8)}
    queue = deque(table)
    while queue:
        x = queue.popleft()
        px = table[x]
        for g, p in zip(gens, imgs):
            y = x * g
            if y not in table:
                table[y] = px * p
                queue.append(y)
    return table


def evaluate_adjacent(word: Sequence[int]) -> GlElement:
    gens = adjacent_transvections()
    out = GlElement.identity(4)
    for i in word:
        out = out * gens[i]
    return out


def phi(g: GlElement) -> Permutation:
    """Image of g under the homomorphism fixed by the six generator images."""
    if g.k != 4:
        raise ValueError("phi is defined on GL_4(F_2)")
    return _phi_table()[g]


def phi_of_word(letters: Iterable[tuple[int, int]]) -> Permutation:
    """Map a transvection word letter by letter (any g_ij, not only adjacent ones)."""
    out = Permutation.identity(8)
    for i, j in letters:
        out = out * phi(transvection(i, j, 4))
    return out


# ---------------------------------------------------------------------------
# CNOT circuits


def cnot_circuit_unitary(g: GlElement, k: int | None = None) -> np.ndarray:
    """Permutation matrix U_g with U_g|x> = |g x>; qubit 1 is the leading bit of the index."""
    k = g.k if k is None else k
    if k != g.k:
        raise ValueError("dimension mismatch")
    dim = 1 << k
    u = np.zeros((dim, dim), dtype=np.int8)
    for x in range(dim):
        u[g.apply(x), x] = 1
    return u


def transvection_as_cnot(i: int, j: int) -> tuple[int, int]:
    """(control, target) of the CNOT implementing g_ij: x_i += x_j."""
    return (j, i)


class GlGroup:
    """An enumerated subgroup of GL_k(F_2) with one generator word per element."""

    def __init__(self, generators: Sequence[GlElement], k: int | None = None):
        gens = list(generators)
        if k is None:
            if not gens:
                raise ValueError("dimension required for the trivial group")
            k = gens[0].k
        self.k = k
        self.generators = gens
        self.element_words = bfs_closure(gens, GlElement.__mul__, GlElement.identity(k))

    @property
    def order(self) -> int:
        return len(self.element_words)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.element_words)

    def __contains__(self, g: GlElement) -> bool:
        return g in self.element_words


def gl_group(k: int) -> GlGroup:
    """GL_k(F_2) enumerated from its elementary transvections."""
    return GlGroup([transvection(i, j, k) for i, j in elementary_transvections(k)], k)
