"""The projective space PG(3,2) and its line/bipartition correspondence.

Points are the nonzero vectors of F_2^4, packed as 4-bit integers with
coordinate 1 leading (``0b1000`` is e_1). A projective subspace is stored as
the frozenset of its nonzero vectors, so points, lines and planes share one
representation and one duality map.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import _tables
from .gf2 import BitVector, parity
from .gl import (
    GlElement,
    adjacent_transvections,
    dual_element,
    evaluate_word,
    parse_word,
    phi,
    phi_of_word,
    tau_c,
)
from .permgroup import Permutation, act_on_bitvector

B0 = BitVector.from_str("10101010")
REFERENCE_LINE = frozenset({0b1000, 0b0100, 0b1100})

Subspace = frozenset  # frozenset[int] of nonzero packed vectors


def point_str(x: int) -> str:
    return format(x, "04b")


def parse_point(s: str) -> int:
    v = BitVector.from_str(s)
    if v.length != 4 or v.value == 0:
        raise ValueError(f"not a point of PG(3,2): {s!r}")
    return v.value


@dataclass(frozen=True)
class ProjPoint:
    vector: BitVector

    def __post_init__(self) -> None:
        if self.vector.length != 4 or self.vector.value == 0:
            raise ValueError("a point is a nonzero vector of length 4")

    @classmethod
    def from_str(cls, s: str) -> ProjPoint:
        return cls(BitVector.from_str(s))

    @property
    def value(self) -> int:
        return self.vector.value

    def __str__(self) -> str:
        return str(self.vector)


@dataclass(frozen=True)
class ProjLine:
    """A line {u, v, u+v}; ``id`` follows the reference table ordering."""

    points: frozenset[int]
    id: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        pts = frozenset(self.points)
        if len(pts) != 3 or 0 in pts:
            raise ValueError("a line has exactly three nonzero points")
        a, b, c = sorted(pts)
        if a ^ b != c:
            raise ValueError("points are not closed under addition")
        object.__setattr__(self, "points", pts)

    def point_strings(self) -> list[str]:
        return [point_str(p) for p in sorted(self.points, reverse=True)]


@dataclass(frozen=True)
class Bipartition:
    """An unordered 4-4 split {b, complement(b)}, stored by the member with bit 1 set."""

    representative: BitVector

    def __post_init__(self) -> None:
        b = self.representative
        if b.length != 8 or b.weight != 4:
            raise ValueError("a bipartition is a weight-4 string of length 8")
        if b[1] == 0:
            object.__setattr__(self, "representative", b.complement())

    @classmethod
    def of(cls, b: BitVector | str) -> Bipartition:
        return cls(BitVector.from_str(b) if isinstance(b, str) else b)

    def members(self) -> tuple[BitVector, BitVector]:
        return (self.representative, self.representative.complement())

    def act(self, sigma: Permutation) -> Bipartition:
        return Bipartition(act_on_bitvector(sigma, self.representative))

    def __str__(self) -> str:
        return str(self.representative)


# ---------------------------------------------------------------------------
# subspaces


def all_points() -> list[int]:
    return list(range(1, 16))


def span(vectors: Iterable[int]) -> Subspace:
    out = {0}
    for v in vectors:
        out |= {v ^ w for w in out}
    out.discard(0)
    return frozenset(out)


def dot(x: int, y: int) -> int:
    return parity(x & y)


def dual_subspace(s: Iterable[int]) -> Subspace:
    """Orthogonal complement under the standard bilinear form (point <-> plane, line <-> line)."""
    s = frozenset(s)
    return frozenset(x for x in range(1, 16) if all(dot(x, y) == 0 for y in s))


def apply_to_subspace(g: GlElement, s: Iterable[int]) -> Subspace:
    return frozenset(g.apply(x) for x in s)


def projective_dimension(s: Iterable[int]) -> int:
    return {1: 0, 3: 1, 7: 2, 15: 3}[len(frozenset(s))]


@lru_cache(maxsize=None)
def _derived_line_sets() -> tuple[Subspace, ...]:
    return tuple(sorted({span(pair) for pair in combinations(range(1, 16), 2)}, key=sorted))


@lru_cache(maxsize=None)
def _line_ids() -> dict[Subspace, int]:
    return {frozenset(parse_point(p) for p in row[0]): i for i, row in _tables.LINES.items()}


def all_lines() -> list[ProjLine]:
    """The 35 lines, built from point pairs and numbered by the reference table."""
    ids = _line_ids()
    lines = [ProjLine(s, ids.get(s, 0)) for s in _derived_line_sets()]
    return sorted(lines, key=lambda l: l.id)


def line(line_id: int) -> ProjLine:
    pts = _tables.LINES[line_id][0]
    return ProjLine(frozenset(parse_point(p) for p in pts), line_id)


def line_id(points: Iterable[int]) -> int:
    return _line_ids()[frozenset(points)]


def all_planes() -> list[Subspace]:
    """Planes x^perp, listed in point order x = 1..15."""
    return [dual_subspace([x]) for x in range(1, 16)]


def all_subspaces() -> list[Subspace]:
    """All 65 proper nonempty projective subspaces."""
    return [frozenset([x]) for x in range(1, 16)] + list(_derived_line_sets()) + all_planes()


def lines_through(x: int) -> list[ProjLine]:
    return [l for l in all_lines() if x in l.points]


def lines_in(plane: Iterable[int]) -> list[ProjLine]:
    plane = frozenset(plane)
    return [l for l in all_lines() if l.points <= plane]


def isotropic_points() -> list[int]:
    return [x for x in range(1, 16) if dot(x, x) == 0]


# ---------------------------------------------------------------------------
# lines <-> bipartitions


def line_word(l: ProjLine | int) -> list[tuple[int, int]]:
    lid = l if isinstance(l, int) else l.id
    return parse_word(_tables.LINES[lid][2])


def line_element(l: ProjLine | int) -> GlElement:
    return evaluate_word(line_word(l), 4)


def line_representative(l: ProjLine | int) -> BitVector:
    """b(l) = phi(g_l) . 10101010 for the stored generator word g_l."""
    return act_on_bitvector(phi_of_word(line_word(l)), B0)


def bipartition_of_line(l: ProjLine | int) -> Bipartition:
    return Bipartition(line_representative(l))


@lru_cache(maxsize=None)
def line_to_bipartition() -> dict[Subspace, Bipartition]:
    """The equivariant bijection built by orbit transport from l_0 -> {b_0, complement}.

    Independent of the table words: each line is reached by a BFS over the six
    adjacent transvections and receives the image of the reference class.
    """
    gens = adjacent_transvections()
    images = [phi(g) for g in gens]
    out = {REFERENCE_LINE: Bipartition(B0)}
    frontier = [REFERENCE_LINE]
    while frontier:
        nxt = []
        for s in frontier:
            for g, p in zip(gens, images):
                t = apply_to_subspace(g, s)
                w = out[s].act(p)
                if t not in out:
                    out[t] = w
                    nxt.append(t)
                elif out[t] != w:
                    raise AssertionError("line/bipartition map is not well defined")
        frontier = nxt
    return out


# ---------------------------------------------------------------------------
# table verification


@dataclass(frozen=True)
class Mismatch:
    table: int
    row: str
    column: str
    expected: str
    derived: str

    def __str__(self) -> str:
        return f"table {self.table} row {self.row} column {self.column}: expected {self.expected}, derived {self.derived}"


@dataclass
class TableReport:
    mismatches: list[Mismatch]
    rows_checked: int
    duality_ok: bool
    duality_failures: list[int]

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.duality_ok

    def rows_with_mismatch(self) -> list[str]:
        return sorted({m.row for m in self.mismatches}, key=lambda r: (len(r), r))


def verify_tables(lines_fixture=None, points_fixture=None) -> TableReport:
    """Recompute every column of the two reference tables and report differences.

    The fixture is compared against quantities derived from first principles.
    The duality relation b(l^perp) = tau_c . b(l) is checked on the derived
    strings, so a corrupted fixture cell produces exactly one mismatch.
    """
    lines_fixture = _tables.LINES if lines_fixture is None else lines_fixture
    points_fixture = _tables.POINTS if points_fixture is None else points_fixture
    mismatches: list[Mismatch] = []
    derived_lines = set(_derived_line_sets())
    fixture_sets = {}

    for lid, (pts, b, word, dual_id) in lines_fixture.items():
        row = str(lid)
        pset = frozenset(parse_point(p) for p in pts)
        fixture_sets[lid] = pset
        if pset not in derived_lines:
            mismatches.append(Mismatch(1, row, "points", ",".join(pts), "not a line"))
        g = evaluate_word(parse_word(word), 4)
        image = apply_to_subspace(g, REFERENCE_LINE)
        if image != pset:
            mismatches.append(Mismatch(1, row, "word", word, ",".join(point_str(x) for x in sorted(image, reverse=True))))
        derived_b = act_on_bitvector(phi_of_word(parse_word(word)), B0)
        if str(derived_b) != b:
            mismatches.append(Mismatch(1, row, "b", b, str(derived_b)))

    ids = {s: i for i, s in fixture_sets.items()}
    if len(ids) != len(fixture_sets) or set(ids) != derived_lines:
        mismatches.append(Mismatch(1, "*", "points", "35 distinct lines", f"{len(ids)} distinct"))

    for lid, (pts, b, word, dual_id) in lines_fixture.items():
        d = dual_subspace(fixture_sets[lid])
        derived = ids.get(d, 0)
        if derived != dual_id:
            mismatches.append(Mismatch(1, str(lid), "dual", str(dual_id), str(derived)))

    # duality on derived strings
    tc = tau_c()
    duality_failures = []
    for lid in lines_fixture:
        d = ids.get(dual_subspace(fixture_sets[lid]))
        if d is None:
            duality_failures.append(lid)
            continue
        bl = act_on_bitvector(phi_of_word(parse_word(lines_fixture[lid][2])), B0)
        bd = act_on_bitvector(phi_of_word(parse_word(lines_fixture[d][2])), B0)
        if act_on_bitvector(tc, bl) != bd:
            duality_failures.append(lid)

    def fmt_ids(xs):
        return ",".join(map(str, sorted(xs)))

    for x_str, through, plane_pts, plane_lines in points_fixture:
        x = parse_point(x_str)
        plane = dual_subspace([x])
        got_through = {ids[s] for s in ids if x in s}
        if got_through != set(through):
            mismatches.append(Mismatch(2, x_str, "lines through x", fmt_ids(through), fmt_ids(got_through)))
        fixture_plane = {parse_point(p) for p in plane_pts}
        if fixture_plane != plane:
            mismatches.append(
                Mismatch(2, x_str, "points of x^perp", ",".join(sorted(plane_pts)), ",".join(sorted(map(point_str, plane))))
            )
        got_in = {ids[s] for s in ids if s <= plane}
        if got_in != set(plane_lines):
            mismatches.append(Mismatch(2, x_str, "lines in x^perp", fmt_ids(plane_lines), fmt_ids(got_in)))

    return TableReport(
        mismatches=mismatches,
        rows_checked=len(lines_fixture) + len(points_fixture),
        duality_ok=not duality_failures,
        duality_failures=duality_failures,
    )


# ---------------------------------------------------------------------------
# CSV emission


def table1_rows() -> list[dict[str, str]]:
    rows = []
    for lid in range(1, 36):
        pts, _, word, _ = _tables.LINES[lid]
        s = frozenset(parse_point(p) for p in pts)
        rows.append(
            {
                "line": str(lid),
                "points": " ".join(pts),
                "b": str(line_representative(lid)),
                "word": word,
                "dual": str(line_id(dual_subspace(s))),
            }
        )
    return rows


def table2_rows() -> list[dict[str, str]]:
    rows = []
    for x_str, *_ in _tables.POINTS:
        x = parse_point(x_str)
        plane = dual_subspace([x])
        rows.append(
            {
                "point": x_str,
                "lines_through": " ".join(str(l.id) for l in lines_through(x)),
                "plane_points": " ".join(point_str(y) for y in _plane_order(plane)),
                "plane_lines": " ".join(str(l.id) for l in lines_in(plane)),
            }
        )
    return rows


def _plane_order(plane: Iterable[int]) -> list[int]:
    # reference ordering reads the point with coordinate 1 as least significant
    return sorted(plane, key=lambda y: int(point_str(y)[::-1], 2))


def _to_csv(rows: list[dict[str, str]]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def table1_csv() -> str:
    return _to_csv(table1_rows())


def table2_csv() -> str:
    return _to_csv(table2_rows())


def dual_line(l: ProjLine | int) -> ProjLine:
    s = line(l).points if isinstance(l, int) else l.points
    d = dual_subspace(s)
    return ProjLine(d, line_id(d))


def contragredient_holds(g: GlElement, s: Iterable[int]) -> bool:
    """dual(g . S) == g^{-T} . dual(S)."""
    return dual_subspace(apply_to_subspace(g, s)) == apply_to_subspace(dual_element(g), dual_subspace(s))
