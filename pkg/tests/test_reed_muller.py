from __future__ import annotations

import itertools
from math import comb

import numpy as np
import pytest

from phantomcodes.gf2 import ClassicalCode, min_weight, permute_bits
from phantomcodes.permgroup import alternating_group_generators
from phantomcodes.reed_muller import (
    classify_gl_invariant,
    evaluate_monomial,
    gl_point_generators,
    invariant_codes,
    monomials,
    rm_chain,
    rm_code,
    rm_family,
    rm_parameters,
    subcube_indicator,
    verify_rm_duality,
)

CASES = [(r, m) for m in range(1, 6) for r in range(m)]


def test_monomial_evaluation():
    assert format(evaluate_monomial((1,), 3), "08b") == "00001111"
    assert format(evaluate_monomial((), 2), "04b") == "1111"
    assert format(evaluate_monomial((2, 3), 3, punctured=True), "07b") == "0010001"
    assert len(monomials(2, 4)) == 1 + 4 + 6


def naive_rm(r, m):
    """Evaluation vectors of all polynomials of degree <= r, by direct evaluation."""
    pts = list(itertools.product((0, 1), repeat=m))
    rows = []
    for d in range(r + 1):
        for s in itertools.combinations(range(m), d):
            rows.append(int("".join(str(int(all(p[i] for i in s))) for p in pts), 2))
    return ClassicalCode(2**m, rows)


@pytest.mark.parametrize("r,m", [(0, 3), (1, 3), (2, 4), (1, 5)])
def test_full_code_matches_naive(r, m):
    assert rm_code(r, m) == naive_rm(r, m)


@pytest.mark.parametrize("r,m", CASES)
def test_parameter_formulas(r, m):
    for variant in ("full", "punctured", "shortened"):
        c = rm_code(r, m, variant)
        n, k, d = rm_parameters(r, m, variant)
        assert (c.n, c.dim) == (n, k)
        if 0 < c.dim <= 20:
            assert min_weight(c) == d


def test_parameter_formula_values():
    assert rm_parameters(1, 3, "punctured") == (7, 4, 3)
    assert rm_parameters(1, 3, "shortened") == (7, 3, 4)
    assert rm_parameters(1, 5) == (32, 6, 16)
    assert rm_parameters(2, 4, "shortened")[1] == comb(4, 1) + comb(4, 2)


@pytest.mark.parametrize("r,m", CASES)
def test_duality(r, m):
    assert verify_rm_duality(r, m)
    assert rm_code(r, m).dual() == rm_code(m - 1 - r, m)


def test_punctured_is_shortened_plus_repetition():
    for m in range(2, 6):
        for r in range(m):
            assert rm_code(r, m, "punctured") == rm_code(r, m, "shortened") + ClassicalCode.repetition(2**m - 1)


@pytest.mark.parametrize("m", range(2, 6))
def test_inclusion_chains(m):
    for variant in ("punctured", "shortened"):
        chain = rm_chain(m, variant)
        assert all(a.issubcode(b) and a != b for a, b in zip(chain, chain[1:]))
    for r in range(m):
        assert rm_code(r, m, "shortened").issubcode(rm_code(r, m, "punctured"))


def test_invalid_parameters():
    with pytest.raises(ValueError):
        rm_code(3, 3, "punctured")
    with pytest.raises(ValueError):
        rm_code(0, 3, "bogus")
    with pytest.raises(ValueError):
        rm_code(4, 3)


def test_subcube_indicator():
    assert str(subcube_indicator([1], [1], 3, punctured=True)) == "0001111"
    assert str(subcube_indicator([2, 3], [1, 1], 3, punctured=True)) == "0010001"
    v = subcube_indicator([1, 3], {1: 0, 3: 1}, 3)
    assert str(v) == "01010000"
    with pytest.raises(ValueError):
        subcube_indicator([1, 2], [1], 3)


@pytest.mark.parametrize("m", [3, 4])
def test_codimension_r_subcubes_span_rm(m):
    for r in range(m + 1):
        rows = [
            subcube_indicator(s, b, m).value
            for s in itertools.combinations(range(1, m + 1), r)
            for b in itertools.product((0, 1), repeat=r)
        ]
        assert ClassicalCode(2**m, rows) == rm_code(r, m)


def test_gl_generators_preserve_rm():
    for m in (3, 4, 5):
        for g in gl_point_generators(m):
            for r in range(m):
                assert rm_code(r, m, "punctured").is_invariant(g.images)
                assert rm_code(r, m, "shortened").is_invariant(g.images)


def all_subspaces(n):
    """Every subspace of F_2^n, from its reduced row echelon basis."""
    yield ClassicalCode.zero(n)
    for d in range(1, n + 1):
        for pivots in itertools.combinations(range(n), d):
            free = [(i, c) for i in range(d) for c in range(pivots[i] + 1, n) if c not in pivots]
            for bits in itertools.product((0, 1), repeat=len(free)):
                rows = [1 << (n - 1 - p) for p in pivots]
                for (i, c), b in zip(free, bits):
                    if b:
                        rows[i] |= 1 << (n - 1 - c)
                yield ClassicalCode(n, rows)


def test_gl3_classification_against_full_enumeration():
    gens = [g.images for g in gl_point_generators(3)]
    subspaces = list(all_subspaces(7))
    assert len(subspaces) == 29212
    invariant = {c for c in subspaces if all(c.is_invariant(g) for g in gens)}
    found = classify_gl_invariant(3)
    assert set(found) == invariant
    assert len(found) == 6
    assert set(found) == set(rm_family(3))


def test_a8_invariant_codes():
    codes = invariant_codes(alternating_group_generators(8))
    assert [c.dim for c in codes] == [0, 1, 7, 8]
    assert set(codes) == {
        ClassicalCode.zero(8),
        ClassicalCode.repetition(8),
        ClassicalCode.even_weight(8),
        ClassicalCode.full(8),
    }


def test_gl4_classification():
    codes = classify_gl_invariant(4)
    assert len(codes) == 8
    assert set(codes) == set(rm_family(4))


def test_trivial_group_gives_every_subspace():
    assert len(invariant_codes([], 3)) == 1 + 7 + 7 + 1


def test_classification_size_cap():
    from phantomcodes.permgroup import Permutation

    with pytest.raises(ValueError):
        invariant_codes([Permutation.identity(16)])


def test_permutation_orbit_sum_is_invariant():
    rng = np.random.default_rng(0)
    gens = [g.images for g in gl_point_generators(3)]
    for v in rng.integers(1, 128, size=10):
        orbit = {int(v)}
        frontier = [int(v)]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = permute_bits(x, g, 7)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        assert ClassicalCode(7, orbit) in set(rm_family(3))
