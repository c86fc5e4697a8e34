"""Exact linear algebra over F_2.

Bit vectors are packed into Python integers with position 1 as the most
significant bit, so that the string ``"10101010"`` and ``int("10101010", 2)``
denote the same vector. All code lengths in this package are at most 64, so a
row always fits in a single machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_EXHAUSTIVE_DIM = 24


class DimensionTooLargeError(ValueError):
    """Raised when an exhaustive sweep would exceed ``MAX_EXHAUSTIVE_DIM``."""


class EmptyDifferenceError(ValueError):
    """Raised when a minimum weight is requested over an empty set."""


# ---------------------------------------------------------------------------
# packed-row primitives


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


def bit_at(value: int, i: int, n: int) -> int:
    """Bit ``i`` (1-based, leftmost = 1) of a packed length-``n`` vector."""
    return (value >> (n - i)) & 1


def pivot_table(rows: Iterable[int]) -> dict[int, int]:
    """Echelon basis keyed by leading bit position (``int.bit_length() - 1``)."""
    table: dict[int, int] = {}
    for r in rows:
        while r:
            p = r.bit_length() - 1
            if p in table:
                r ^= table[p]
            else:
                table[p] = r
                break
    return table


def reduce_by(x: int, table: dict[int, int]) -> int:
    """Remainder of ``x`` after elimination against an echelon pivot table."""
    while x:
        p = x.bit_length() - 1
        if p not in table:
            # bit p survives; keep reducing the lower bits
            rest = x & ((1 << p) - 1)
            return (1 << p) | reduce_by(rest, table)
        x ^= table[p]
    return 0


def rref_rows(rows: Iterable[int]) -> list[int]:
    """Nonzero rows of the reduced row-echelon form, leftmost pivot first."""
    table = pivot_table(rows)
    pivots = sorted(table, reverse=True)
    for p in pivots:
        r = table[p]
        for q in pivots:
            if q != p and (table[q] >> p) & 1:
                table[q] ^= r
    return [table[p] for p in pivots]


def rank_rows(rows: Iterable[int]) -> int:
    return len(pivot_table(rows))


def in_span(x: int, table: dict[int, int]) -> bool:
    while x:
        p = x.bit_length() - 1
        if p not in table:
            return False
        x ^= table[p]
    return True


def nullspace_rows(rows: Sequence[int], n: int) -> list[int]:
    """Basis of ``{v : v.r = 0 for all r in rows}`` in reduced echelon form."""
    reduced = rref_rows(rows)
    pivots = {r.bit_length() - 1: r for r in reduced}
    basis = []
    for f in range(n):
        if f in pivots:
            continue
        v = 1 << f
        for p, r in pivots.items():
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return rref_rows(basis)


def span_elements(rows: Sequence[int]) -> np.ndarray:
    """All ``2**len(rows)`` combinations of ``rows`` as an int64 array."""
    if len(rows) > MAX_EXHAUSTIVE_DIM:
        raise DimensionTooLargeError(
            f"exhaustive enumeration capped at dim {MAX_EXHAUSTIVE_DIM}, got {len(rows)}"
        )
    words = np.zeros(1, dtype=np.int64)
    for r in rows:
        words = np.concatenate([words, words ^ np.int64(r)])
    return words


# ---------------------------------------------------------------------------
# bit vectors


@dataclass(frozen=True)
class BitVector:
    """A binary vector of fixed length, 1-based, leftmost bit first."""

    value: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("length must be positive")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls(int(s, 2), len(s))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        bits = [int(b) & 1 for b in bits]
        value = 0
        for b in bits:
            value = (value << 1) | b
        return cls(value, len(bits))

    @classmethod
    def from_support(cls, support: Iterable[int], length: int) -> BitVector:
        value = 0
        for i in support:
            if not 1 <= i <= length:
                raise IndexError(f"position {i} out of range 1..{length}")
            value |= 1 << (length - i)
        return cls(value, length)

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls((1 << length) - 1, length)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BitVector('{self}')"

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} out of range 1..{self.length}")
        return bit_at(self.value, i, self.length)

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(1, self.length + 1))

    def _check(self, other: BitVector) -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __add__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.value ^ other.value, self.length)

    __xor__ = __add__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.value & other.value, self.length)

    def dot(self, other: BitVector) -> int:
        self._check(other)
        return parity(self.value & other.value)

    @property
    def weight(self) -> int:
        return popcount(self.value)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.length + 1) if self[i])

    def complement(self) -> BitVector:
        return BitVector(self.value ^ ((1 << self.length) - 1), self.length)

    def to_array(self) -> np.ndarray:
        return np.array(list(self), dtype=np.uint8)


def as_bitvector(v: BitVector | str | Sequence[int], length: int | None = None) -> BitVector:
    if isinstance(v, BitVector):
        out = v
    elif isinstance(v, str):
        out = BitVector.from_str(v)
    else:
        out = BitVector.from_bits(v)
    if length is not None and out.length != length:
        raise ValueError(f"expected length {length}, got {out.length}")
    return out


# ---------------------------------------------------------------------------
# matrices


class Gf2Matrix:
    """Immutable binary matrix backed by a read-only ``uint8`` array."""

    __slots__ = ("_a",)

    def __init__(self, data) -> None:
        if isinstance(data, Gf2Matrix):
            a = data._a
        else:
            a = np.array(data, dtype=np.int64)
            if a.ndim == 1 and a.size == 0:
                a = a.reshape(0, 0)
            if a.ndim != 2:
                raise ValueError("matrix data must be two-dimensional")
            a = (a & 1).astype(np.uint8)
        a = a.copy()
        a.flags.writeable = False
        self._a = a

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector | str | Sequence[int]], cols: int | None = None) -> Gf2Matrix:
        vecs = [as_bitvector(r) for r in rows]
        if not vecs:
            return cls(np.zeros((0, cols or 0), dtype=np.uint8))
        return cls([v.to_array() for v in vecs])

    @classmethod
    def from_packed(cls, rows: Sequence[int], cols: int) -> Gf2Matrix:
        a = np.zeros((len(rows), cols), dtype=np.uint8)
        for i, r in enumerate(rows):
            for j in range(cols):
                a[i, j] = (r >> (cols - 1 - j)) & 1
        return cls(a)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape  # type: ignore[return-value]

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    def to_array(self) -> np.ndarray:
        return self._a.copy()

    def __array__(self, dtype=None, copy=None):
        return self._a.astype(dtype) if dtype is not None else self._a.copy()

    def packed_rows(self) -> list[int]:
        weights = 1 << np.arange(self.cols - 1, -1, -1, dtype=object)
        return [int(np.dot(row.astype(object), weights)) if self.cols else 0 for row in self._a]

    def row_vectors(self) -> list[BitVector]:
        return [BitVector(r, self.cols) for r in self.packed_rows()]

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join("".join(map(str, row)) for row in self._a)
        return f"Gf2Matrix([{body}])"

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        return Gf2Matrix(self._a ^ other._a)

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Gf2Matrix((self._a.astype(np.int64) @ other._a.astype(np.int64)) & 1)

    @property
    def T(self) -> Gf2Matrix:
        return Gf2Matrix(self._a.T)

    def rank(self) -> int:
        return rank_rows(self.packed_rows())

    def rref(self) -> Gf2Matrix:
        """Reduced row-echelon form; same shape, zero rows at the bottom."""
        reduced = rref_rows(self.packed_rows())
        reduced += [0] * (self.rows - len(reduced))
        return Gf2Matrix.from_packed(reduced, self.cols)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> Gf2Matrix:
        if not self.is_invertible():
            raise ValueError("matrix is singular over F_2")
        n = self.rows
        aug = np.concatenate([self._a, np.eye(n, dtype=np.uint8)], axis=1)
        reduced = Gf2Matrix(aug).rref()
        return Gf2Matrix(reduced._a[:, n:])

    def nullspace(self) -> Gf2Matrix:
        """Right kernel ``{x : M x = 0}`` as rows in reduced echelon form."""
        rows = nullspace_rows(self.packed_rows(), self.cols)
        return Gf2Matrix.from_packed(rows, self.cols)


def rref(m: Gf2Matrix) -> Gf2Matrix:
    return Gf2Matrix(m).rref()


# ---------------------------------------------------------------------------
# classical codes


class ClassicalCode:
    """A binary linear code stored as its canonical (RREF) generator rows."""

    __slots__ = ("n", "_rows", "_table")

    def __init__(self, n: int, rows: Iterable[int] = ()) -> None:
        self.n = n
        rows = list(rows)
        for r in rows:
            if r < 0 or r >> n:
                raise ValueError(f"generator row does not fit in length {n}")
        self._rows: tuple[int, ...] = tuple(rref_rows(rows))
        self._table: dict[int, int] | None = None

    @classmethod
    def from_generator(cls, generator: Gf2Matrix | Sequence[BitVector | str | Sequence[int]]) -> ClassicalCode:
        m = generator if isinstance(generator, Gf2Matrix) else Gf2Matrix.from_rows(generator)
        return cls(m.cols, m.packed_rows())

    @classmethod
    def from_vectors(cls, vectors: Iterable[BitVector], n: int) -> ClassicalCode:
        return cls(n, [as_bitvector(v, n).value for v in vectors])

    @classmethod
    def zero(cls, n: int) -> ClassicalCode:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> ClassicalCode:
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def repetition(cls, n: int) -> ClassicalCode:
        return cls(n, [(1 << n) - 1])

    @classmethod
    def even_weight(cls, n: int) -> ClassicalCode:
        return cls.repetition(n).dual()

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def generator(self) -> Gf2Matrix:
        return Gf2Matrix.from_packed(self._rows, self.n)

    def basis(self) -> list[BitVector]:
        return [BitVector(r, self.n) for r in self._rows]

    def _pivots(self) -> dict[int, int]:
        if self._table is None:
            self._table = {r.bit_length() - 1: r for r in self._rows}
        return self._table

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassicalCode):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"ClassicalCode(n={self.n}, k={self.dim})"

    def __contains__(self, v: BitVector | int | str) -> bool:
        x = v if isinstance(v, int) else as_bitvector(v, self.n).value
        return in_span(x, self._pivots())

    def reduce(self, x: int) -> int:
        """Canonical coset representative of ``x`` modulo this code."""
        return reduce_by(x, self._pivots())

    def issubcode(self, other: ClassicalCode) -> bool:
        """True if ``self`` is contained in ``other``."""
        self._check(other)
        return all(r in other for r in self._rows)

    __le__ = issubcode

    def __lt__(self, other: ClassicalCode) -> bool:
        return self.issubcode(other) and self.dim < other.dim

    def __add__(self, other: ClassicalCode) -> ClassicalCode:
        self._check(other)
        return ClassicalCode(self.n, self._rows + other._rows)

    def intersection(self, other: ClassicalCode) -> ClassicalCode:
        self._check(other)
        return (self.dual() + other.dual()).dual()

    def _check(self, other: ClassicalCode) -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def dual(self) -> ClassicalCode:
        return ClassicalCode(self.n, nullspace_rows(self._rows, self.n))

    def codewords(self) -> np.ndarray:
        return span_elements(self._rows)

    def permuted(self, images: Sequence[int]) -> ClassicalCode:
        """Image under the coordinate map sending position p to ``images[p-1]``."""
        return ClassicalCode(self.n, [permute_bits(r, images, self.n) for r in self._rows])

    def is_invariant(self, images: Sequence[int]) -> bool:
        return all(permute_bits(r, images, self.n) in self for r in self._rows)


def permute_bits(x: int, images: Sequence[int], n: int) -> int:
    """Move the bit at position p to position ``images[p-1]`` (1-based)."""
    out = 0
    for p in range(1, n + 1):
        if (x >> (n - p)) & 1:
            out |= 1 << (n - images[p - 1])
    return out


def dual_code(code: ClassicalCode) -> ClassicalCode:
    return code.dual()


def min_weight(code: ClassicalCode, exclude: ClassicalCode | None = None) -> int:
    """Minimum Hamming weight over the nonzero words of ``code``.

    With ``exclude`` given, the minimum is taken over ``code \\ exclude``
    instead, which is how CSS distances are defined.
    """
    if code.dim > MAX_EXHAUSTIVE_DIM:
        raise DimensionTooLargeError(
            f"exhaustive enumeration capped at dim {MAX_EXHAUSTIVE_DIM}, got {code.dim}"
        )
    if exclude is None:
        if code.dim == 0:
            raise EmptyDifferenceError("the zero code has no nonzero words")
        words = code.codewords()[1:]
    else:
        if not exclude.issubcode(code):
            raise ValueError("exclude must be a subcode of code")
        if exclude.dim == code.dim:
            raise EmptyDifferenceError("code \\ exclude is empty")
        words = code.codewords()
        checks = exclude.dual().rows
        outside = np.zeros(words.shape, dtype=bool)
        for h in checks:
            outside |= (np.bitwise_count(words & np.int64(h)) & 1).astype(bool)
        words = words[outside]
    return int(np.bitwise_count(words).min())
