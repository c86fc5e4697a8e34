"""End-to-end acceptance checks, one group of tests per criterion.

Each test carries ``@pytest.mark.criterion(n, title)``; the terminal summary
hook in conftest.py prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import itertools
import time

import numpy as np
import pytest

from phantomcodes import _tables
from phantomcodes.css import (
    css_distance,
    hypercube_code,
    permutation_logical_action,
    phantom_certificate,
    same_code,
    stabilizer_nogo_8_4,
    uniqueness_classes,
    uniqueness_scan,
)
from phantomcodes.gf2 import ClassicalCode, min_weight
from phantomcodes.gl import ADJACENT, GlGroup, adjacent_transvections, gl_order, phi_generators, tau_c, transvection
from phantomcodes.permgroup import Permutation, PermGroup, alternating_group_generators, lagrange_embedding_obstruction, orbit_and_stabilizer
from phantomcodes.pg32 import B0, REFERENCE_LINE, Bipartition, all_lines, apply_to_subspace, bipartition_of_line, dual_line, verify_tables
from phantomcodes.pg_code import (
    T8_REFERENCE,
    build_pg_code,
    distance_report,
    gram_report,
    s8_invariance_residuals,
    stabilizer_characterization,
    transversal_phase,
    verify_phantom,
    verify_s8_and_uc,
)
from phantomcodes.reed_muller import classify_gl_invariant, invariant_codes, rm_chain, rm_code, rm_family, rm_parameters, verify_rm_duality

criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def pg():
    return build_pg_code()


@criterion(1, "generator images close to a group of order 20160")
def test_criterion_01_closure():
    t0 = time.perf_counter()
    g = PermGroup(phi_generators())
    assert g.order == gl_order(4) == 20160
    assert time.perf_counter() - t0 < 10


@criterion(2, "commutator relations hold for the generator images")
def test_criterion_02_relations():
    img = dict(zip(ADJACENT, phi_generators()))

    def comm(a, b):
        return a * b * a.inverse() * b.inverse()

    # the remaining six images follow from the adjacent ones
    img[(1, 3)] = comm(img[(1, 2)], img[(2, 3)])
    img[(2, 4)] = comm(img[(2, 3)], img[(3, 4)])
    img[(1, 4)] = comm(img[(1, 3)], img[(3, 4)])
    img[(3, 1)] = comm(img[(3, 2)], img[(2, 1)])
    img[(4, 2)] = comm(img[(4, 3)], img[(3, 2)])
    img[(4, 1)] = comm(img[(4, 2)], img[(2, 1)])
    e = Permutation.identity(8)
    pairs = [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j]
    assert all(img[p] * img[p] == e for p in pairs)
    for (i, j), (k, l) in itertools.product(pairs, pairs):
        c = comm(img[(i, j)], img[(k, l)])
        if j == k and i != l:
            assert c == img[(i, l)]
        elif j != k and i != l:
            assert c == e


@criterion(3, "both point stabilisers have order 576")
def test_criterion_03_stabilizers():
    gl4 = GlGroup(adjacent_transvections(), 4)
    _, s1 = orbit_and_stabilizer(gl4, REFERENCE_LINE, apply_to_subspace)
    a8 = PermGroup(phi_generators())
    _, s2 = orbit_and_stabilizer(a8, Bipartition(B0), lambda s, w: w.act(s))
    assert s1 == s2 == 576


@criterion(4, "derived incidence data reproduces both reference tables")
def test_criterion_04_tables():
    rep = verify_tables()
    assert rep.mismatches == []
    assert rep.rows_checked == len(_tables.LINES) + len(_tables.POINTS) == 35 + 15
    assert rep.duality_ok
    t = tau_c()
    for l in all_lines():
        assert bipartition_of_line(dual_line(l).id) == bipartition_of_line(l.id).act(t)


@criterion(5, "PG code Gram identities, Knill-Laflamme data and distance 2")
def test_criterion_05_pg_code(pg):
    g = gram_report(pg)
    assert g.logical_gram_error <= 1e-9
    off = g.star_gram[~np.eye(15, dtype=bool)]
    assert np.all(np.diag(g.star_gram) == 7) and np.all(off == 1)
    assert np.all(g.star_t == 7) and g.t_norm == 35
    d = distance_report(pg)
    assert d.weight1_all_zero
    assert abs(d.z1z2_zero - 1) <= 1e-12
    assert abs(d.z1z2_t - (-1 / 7)) <= 1e-12
    assert d.distance == 2


@criterion(6, "six generator permutations act as CNOT circuits with phase +1")
def test_criterion_06_phantom(pg):
    cert = verify_phantom(pg)
    assert len(cert.checks) == 6
    assert all(c.lines_ok and c.logicals_ok for c in cert.checks)
    assert max(c.logical_matrix_error for c in cert.checks) <= 1e-9


@criterion(7, "duality permutation U_c: entries, square, spectrum, trace")
def test_criterion_07_uc(pg):
    _, rep = verify_s8_and_uc(pg)
    assert rep.reference_error <= 1e-9
    assert rep.square_error <= 1e-9
    assert rep.multiplicities == (9, 7)
    assert abs(rep.nonzero_trace - 1) <= 1e-9


@criterion(8, "transversal T and S logical actions")
def test_criterion_08_phase_gates(pg):
    t = transversal_phase(pg, np.pi / 4)
    s = transversal_phase(pg, np.pi / 2)
    assert np.max(np.abs(t.logical - T8_REFERENCE)) <= 1e-9 and t.residual <= 1e-9
    assert np.max(np.abs(s.logical - np.eye(16))) <= 1e-9 and s.residual <= 1e-9


@criterion(9, "joint eigenspace equals the code space; irrep dimensions")
def test_criterion_09_characterization(pg):
    rep = stabilizer_characterization(pg)
    assert rep.dimension == 16
    assert rep.span_error <= 1e-9
    assert rep.irrep_dims == [1, 7, 20, 28, 14]


@criterion(10, "all adjacent transpositions preserve the code space")
def test_criterion_10_s8(pg):
    res = s8_invariance_residuals(pg)
    assert len(res) == 7 and max(res) <= 1e-9


def _cube(points):
    return sum(1 << (7 - int(p, 2)) for p in points)


@criterion(11, "hypercube stabilisers, logicals, CNOT21 and certificates")
def test_criterion_11_hypercube():
    c = hypercube_code(3)
    s = [_cube(["100", "101", "110", "111"]), _cube(["010", "011", "111", "110"]), _cube(["001", "011", "111", "101"])]
    assert c.x_stabilizer_span == ClassicalCode.repetition(7)
    assert c.z_stabilizer_span == ClassicalCode(7, s)
    assert c.logical_x == s
    assert c.logical_z == [_cube(["011", "111"]), _cube(["101", "111"]), _cube(["110", "111"])]
    assert css_distance(c)[2] == 2
    swap = Permutation.from_cycles("(5 7)(4 6)", 7)
    assert permutation_logical_action(c, swap) == transvection(1, 2, 3)
    for k, order in ((3, 168), (4, 20160), (5, 9999360)):
        cert = phantom_certificate(hypercube_code(k))
        assert cert.verified and cert.image_order == order


@criterion(11, "css_distance(hypercube_code(3)) == (2, 2, 2), observed (2, 3, 2)")
@pytest.mark.xfail(strict=True, reason="Z distance of the 7-qubit hypercube code is 3 under the CSS distance definition")
def test_criterion_11_distance_triple():
    assert css_distance(hypercube_code(3)) == (2, 2, 2)


@criterion(12, "invariant-code classification; CSS scan unique up to X/Z exchange")
def test_criterion_12_classification():
    gl3 = classify_gl_invariant(3)
    assert len(gl3) == 6
    assert set(gl3) == set(rm_family(3)) == {rm_code(r, 3, v) for r in range(3) for v in ("punctured", "shortened")}
    a8 = invariant_codes(alternating_group_generators(8))
    assert set(a8) == {ClassicalCode.zero(8), ClassicalCode.repetition(8), ClassicalCode.even_weight(8), ClassicalCode.full(8)}
    classes = uniqueness_classes(3)
    assert len(classes) == 1
    assert any(same_code(code, hypercube_code(3)) for code in classes[0])
    assert all(code.k == 3 for _, _, code in uniqueness_scan(3))


@criterion(13, "no Pauli stabiliser phantom code with these parameters; embedding obstructions")
def test_criterion_13_nogo():
    rep = stabilizer_nogo_8_4()
    for case in rep.cases:
        if case.r <= 2:
            assert case.lhs == 4 + case.r and case.rhs == 2
        else:
            assert case.argument == "singleton"
        assert case.excluded
    assert not lagrange_embedding_obstruction(168, 6) and 720 % 168 != 0
    assert not lagrange_embedding_obstruction(20160, 7) and 20160 > 5040


@criterion(14, "Reed-Muller parameters, duality and inclusion chains for m <= 5")
def test_criterion_14_reed_muller():
    for m in range(1, 6):
        for r in range(m):
            assert verify_rm_duality(r, m)
            for v in ("full", "punctured", "shortened"):
                c = rm_code(r, m, v)
                n, k, d = rm_parameters(r, m, v)
                assert (c.n, c.dim) == (n, k)
                if 0 < c.dim <= 16:
                    assert min_weight(c) == d
        for v in ("punctured", "shortened"):
            chain = rm_chain(m, v)
            assert all(a.issubcode(b) and a != b for a, b in zip(chain, chain[1:]))
