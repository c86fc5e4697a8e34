"""Permutations on {1..n}, enumerated group closures, orbits and stabilisers."""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .gf2 import BitVector

CLOSURE_LIMIT = 10**6

T = TypeVar("T", bound=Hashable)


class ClosureBlowupError(RuntimeError):
    """Raised when a closure enumeration exceeds its element budget."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} in 1-based one-line notation.

    Composition follows functions: ``(s * t)(x) == s(t(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str | Sequence[Sequence[int]], n: int) -> Permutation:
        """Parse cycle notation such as ``"(2 4)(3 7)(5 6)"``; fixed points may be omitted."""
        if isinstance(text, str):
            stripped = text.strip()
            if stripped in ("", "()", "e", "id", "Id"):
                cycles: list[list[int]] = []
            else:
                if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\)\s*)+", stripped):
                    raise ValueError(f"malformed cycle notation: {text!r}")
                cycles = [[int(x) for x in c.split()] for c in re.findall(r"\(([^)]*)\)", stripped)]
        else:
            cycles = [list(c) for c in text]
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} out of range 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} appears twice")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        imgs = self.images
        return Permutation._unchecked(tuple(imgs[j - 1] for j in other.images))

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> Permutation:
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation._unchecked(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation.from_cycles('{self.cycle_string()}', {self.degree})"

    @property
    def sign(self) -> int:
        transpositions = sum(len(c) - 1 for c in self.cycles())
        return -1 if transpositions % 2 else 1

    def is_even(self) -> bool:
        return self.sign == 1

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1


def act_on_bitvector(sigma: Permutation, v: BitVector) -> BitVector:
    """Move the set bit at position p to position ``sigma(p)``."""
    if sigma.degree != v.length:
        raise ValueError(f"degree {sigma.degree} does not match length {v.length}")
    n = v.length
    out = 0
    for p in range(1, n + 1):
        if (v.value >> (n - p)) & 1:
            out |= 1 << (n - sigma(p))
    return BitVector(out, n)


# ---------------------------------------------------------------------------
# generic closure


def bfs_closure(
    gens: Sequence[T],
    mul: Callable[[T, T], T],
    identity: T,
    limit: int = CLOSURE_LIMIT,
) -> dict[T, tuple[int, ...]]:
    """Enumerate the monoid generated by ``gens`` (a group when finite).

    Returns a map from element to one word ``(i0, i1, ...)`` with the element
    equal to ``gens[i0] * gens[i1] * ...`` (identity has the empty word).
    """
    words: dict[T, tuple[int, ...]] = {identity: ()}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        wx = words[x]
        for i, g in enumerate(gens):
            y = mul(x, g)
            if y not in words:
                words[y] = wx + (i,)
                if len(words) > limit:
                    raise ClosureBlowupError(f"closure exceeded {limit} elements")
                queue.append(y)
    return words


class PermGroup:
    """A permutation group, fully enumerated with one generator word per element."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None, limit: int = CLOSURE_LIMIT):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("all generators must share one degree")
        self.degree = degree
        self.generators = gens
        self.element_words = bfs_closure(gens, Permutation.__mul__, Permutation.identity(degree), limit)

    @property
    def order(self) -> int:
        return len(self.element_words)

    def __len__(self) -> int:
        return self.order

    @property
    def elements(self) -> list[Permutation]:
        return list(self.element_words)

    def __iter__(self):
        return iter(self.element_words)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_words

    def word(self, g: Permutation) -> tuple[int, ...]:
        return self.element_words[g]

    def evaluate(self, word: Iterable[int]) -> Permutation:
        out = Permutation.identity(self.degree)
        for i in word:
            out = out * self.generators[i]
        return out

    def orbit(self, x: T, act: Callable[[Permutation, T], T]) -> set[T]:
        return orbit_of(self.generators, x, act)

    def orbit_and_stabilizer(self, x: T, act: Callable[[Permutation, T], T]) -> tuple[set[T], int]:
        return orbit_and_stabilizer(self, x, act)


def closure(gens: Sequence[Permutation], limit: int = CLOSURE_LIMIT) -> PermGroup:
    return PermGroup(gens, limit=limit)


def orbit_of(gens: Sequence, x: T, act: Callable) -> set[T]:
    """Orbit of ``x`` under the group generated by ``gens`` (finite groups only)."""
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g in gens:
            z = act(g, y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


def orbit_and_stabilizer(group, x: T, act: Callable) -> tuple[set[T], int]:
    """Orbit by transitive closure and stabiliser order ``|G| / |orbit|``.

    ``group`` needs ``generators`` and ``order``; works for any enumerated group.
    """
    orb = orbit_of(group.generators, x, act)
    order = group.order
    if order % len(orb):
        raise ArithmeticError("orbit size does not divide the group order")
    return orb, order // len(orb)


def lagrange_embedding_obstruction(group_order: int, m: int) -> bool:
    """True when ``group_order`` divides ``m!`` (no Lagrange obstruction to a degree-m action)."""
    if group_order < 1 or m < 1:
        raise ValueError("group_order and m must be positive")
    return math.factorial(m) % group_order == 0


def symmetric_group_generators(n: int) -> list[Permutation]:
    """Adjacent transpositions (i i+1), i = 1..n-1."""
    return [Permutation.from_cycles([(i, i + 1)], n) for i in range(1, n)]


def alternating_group_generators(n: int) -> list[Permutation]:
    """3-cycles (1 2 i), i = 3..n."""
    return [Permutation.from_cycles([(1, 2, i)], n) for i in range(3, n + 1)]
