"""Reed-Muller codes by monomial evaluation, and invariant-subcode classification.

Coordinates of RM(r, m) are the points of F_2^m in numeral order (origin
first, coordinate 1 of a point is its leading bit). The punctured and
shortened variants drop the origin, so coordinate p of a length 2^m - 1 code
is the point whose numeral is p.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Literal, Mapping, Sequence

from .gf2 import BitVector, ClassicalCode, permute_bits
from .permgroup import Permutation

Variant = Literal["full", "punctured", "shortened"]

MAX_CLASSIFY_LENGTH = 15


def monomials(r: int, m: int) -> list[tuple[int, ...]]:
    """Squarefree monomials of degree <= r as sorted index tuples (1-based)."""
    return [s for d in range(0, r + 1) for s in combinations(range(1, m + 1), d)]


def evaluate_monomial(s: Iterable[int], m: int, punctured: bool = False) -> int:
    """Packed evaluation vector of prod_{i in s} x_i over the point order."""
    mask = 0
    for i in s:
        mask |= 1 << (m - i)
    points = range(1, 2**m) if punctured else range(2**m)
    out = 0
    for a in points:
        out = (out << 1) | ((a & mask) == mask)
    return out


def rm_code(r: int, m: int, variant: Variant = "full") -> ClassicalCode:
    if m < 1:
        raise ValueError("m must be positive")
    if variant == "full":
        if not -1 <= r <= m:
            raise ValueError(f"RM(r, m) needs -1 <= r <= m, got r={r}")
        if r < 0:
            return ClassicalCode.zero(2**m)
        return ClassicalCode(2**m, [evaluate_monomial(s, m) for s in monomials(r, m)])
    if variant not in ("punctured", "shortened"):
        raise ValueError(f"unknown variant {variant!r}")
    if not 0 <= r <= m - 1:
        raise ValueError(f"{variant} RM(r, m) needs 0 <= r <= m-1, got r={r}")
    n = 2**m - 1
    mons = monomials(r, m)
    if variant == "shortened":
        # the codewords vanishing at the origin: drop the constant monomial
        mons = [s for s in mons if s]
    return ClassicalCode(n, [evaluate_monomial(s, m, punctured=True) for s in mons])


def rm_parameters(r: int, m: int, variant: Variant = "full") -> tuple[int, int, int]:
    """Textbook [n, k, d] for the three variants."""
    if variant == "full":
        return 2**m, sum(comb(m, s) for s in range(r + 1)), 2 ** (m - r)
    if variant == "punctured":
        return 2**m - 1, sum(comb(m, s) for s in range(r + 1)), 2 ** (m - r) - 1
    return 2**m - 1, sum(comb(m, s) for s in range(1, r + 1)), 2 ** (m - r)


def subcube_indicator(
    s: Sequence[int], b: Sequence[int] | Mapping[int, int], m: int, punctured: bool = False
) -> BitVector:
    """Indicator of the coordinate-aligned subcube {x : x_i = b_i for i in S}."""
    s = list(s)
    bits = dict(b) if isinstance(b, Mapping) else dict(zip(s, b))
    if set(bits) != set(s):
        raise ValueError("b must assign one bit to each index of S")
    points = range(1, 2**m) if punctured else range(2**m)
    out = 0
    for a in points:
        inside = all(((a >> (m - i)) & 1) == (bits[i] & 1) for i in s)
        out = (out << 1) | inside
    return BitVector(out, len(points))


def verify_rm_duality(r: int, m: int) -> bool:
    """RM*(r, m)^perp == RM_*(m-1-r, m), and the symmetric statement."""
    p = rm_code(r, m, "punctured")
    s = rm_code(m - 1 - r, m, "shortened")
    return p.dual() == s and s.dual() == p


def rm_chain(m: int, variant: Variant) -> list[ClassicalCode]:
    return [rm_code(r, m, variant) for r in range(0, m)]


def point_permutation(apply, m: int) -> Permutation:
    """Permutation of the 2^m - 1 nonzero points induced by a linear map ``apply``."""
    return Permutation(tuple(apply(a) for a in range(1, 2**m)))


# ---------------------------------------------------------------------------
# invariant subcodes


def _orbit_representatives(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(1 << n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in range(1, 1 << n):
        rv = find(v)
        for g in gens:
            w = find(permute_bits(v, g, n))
            if w != rv:
                parent[w] = rv
    return sorted({find(v) for v in range(1, 1 << n)})


def cyclic_submodule(v: int, gens: Sequence[Sequence[int]], n: int) -> ClassicalCode:
    """Smallest invariant code containing ``v``."""
    code = ClassicalCode(n, [v])
    while True:
        images = [permute_bits(r, g, n) for r in code.rows for g in gens]
        bigger = ClassicalCode(n, list(code.rows) + images)
        if bigger == code:
            return code
        code = bigger


def invariant_codes(action_generators: Sequence[Permutation], n: int | None = None) -> list[ClassicalCode]:
    """Every linear code of length n invariant under the given coordinate permutations.

    Each invariant code is a sum of cyclic submodules, and the cyclic
    submodule of v depends only on the orbit of v. So it suffices to take one
    seed per orbit and close the resulting family under sums.
    """
    if n is None:
        if not action_generators:
            raise ValueError("n is required when there are no generators")
        n = action_generators[0].degree
    if n > MAX_CLASSIFY_LENGTH:
        raise ValueError(f"classification capped at length {MAX_CLASSIFY_LENGTH}, got {n}")
    gens = [g.images for g in action_generators]
    seeds = _orbit_representatives(n, gens)
    family = {cyclic_submodule(v, gens, n) for v in seeds}
    frontier = set(family)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(family):
                c = a + b
                if c not in family and c not in new:
                    new.add(c)
        family |= new
        frontier = new
    family.add(ClassicalCode.zero(n))
    return sorted(family, key=lambda c: (c.dim, c.rows))


def gl_point_generators(m: int) -> list[Permutation]:
    """GL_m(F_2) elementary transvections as permutations of the nonzero points."""
    from .gl import elementary_transvections, transvection

    return [point_permutation(transvection(i, j, m).apply, m) for i, j in elementary_transvections(m)]


def classify_gl_invariant(m: int) -> list[ClassicalCode]:
    """GL_m(F_2)-invariant codes of length 2^m - 1 (m = 4 takes a while)."""
    return invariant_codes(gl_point_generators(m), 2**m - 1)


def rm_family(m: int) -> list[ClassicalCode]:
    """{0}, F_2^n and all punctured and shortened RM(r, m)."""
    n = 2**m - 1
    codes = {ClassicalCode.zero(n), ClassicalCode.full(n)}
    for r in range(m):
        codes.add(rm_code(r, m, "punctured"))
        codes.add(rm_code(r, m, "shortened"))
    return sorted(codes, key=lambda c: (c.dim, c.rows))
