from __future__ import annotations

from functools import reduce

import numpy as np
import pytest

from phantomcodes.css import hypercube_code
from phantomcodes.permgroup import Permutation
from phantomcodes.statevector import (
    CodeSpace,
    StateVector,
    apply_diagonal_phase_all,
    apply_local,
    apply_pauli,
    apply_permutation,
    casimir_matrix,
    collective_casimir_apply,
    css_codewords,
    hook_length_dimension,
    knill_laflamme_check,
    phase_gate,
    two_row_dimensions,
)

X = np.array([[0, 1], [1, 0]])
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1, -1])


def kron_all(ops):
    return reduce(np.kron, ops)


def test_basis_indexing():
    psi = StateVector.basis("100")
    assert psi["100"] == 1 and psi.amplitudes[4] == 1
    with pytest.raises(ValueError):
        StateVector(np.zeros(6))


def test_permutation_moves_bits():
    sigma = Permutation.from_cycles("(1 3)", 3)
    assert apply_permutation(StateVector.basis("100"), sigma).allclose(StateVector.basis("001"))
    rho = Permutation.from_cycles("(1 2 3)", 3)
    out = apply_permutation(StateVector.basis("100"), rho)
    assert out.allclose(StateVector.basis("010"))


def test_permutation_composition():
    rng = np.random.default_rng(0)
    psi = StateVector(rng.normal(size=16) + 1j * rng.normal(size=16))
    s = Permutation.from_cycles("(1 2 4)", 4)
    t = Permutation.from_cycles("(2 3)", 4)
    a = apply_permutation(apply_permutation(psi, t), s)
    assert a.allclose(apply_permutation(psi, s * t))


def test_pauli_matches_kronecker_products():
    rng = np.random.default_rng(1)
    psi = StateVector(rng.normal(size=8) + 1j * rng.normal(size=8))
    for label in ["XII", "IZI", "ZZX", "XXX", "ZIZ"]:
        m = kron_all([{"I": np.eye(2), "X": X, "Z": Z}[c] for c in label])
        assert np.allclose(apply_pauli(psi, label).amplitudes, m @ psi.amplitudes)


def test_y_is_x_times_z():
    psi = StateVector.basis("0") + StateVector.basis("1") * 2
    out = apply_pauli(psi, "Y")
    assert np.allclose(out.amplitudes, X @ Z @ psi.amplitudes)
    assert np.allclose(out.amplitudes, -1j * (Y @ psi.amplitudes))


def test_local_gates():
    psi = StateVector.basis("01")
    out = apply_local(psi, X, [1])
    assert out.allclose(StateVector.basis("11"))
    rng = np.random.default_rng(2)
    phi = StateVector(rng.normal(size=8))
    theta = 0.3
    a = apply_local(phi, phase_gate(theta))
    assert a.allclose(apply_diagonal_phase_all(phi, theta))


def dense_casimir(n):
    def total(p):
        return sum(kron_all([p if i == j else np.eye(2) for i in range(n)]) for j in range(n)) / 2

    jx, jy, jz = total(X), total(Y), total(Z)
    return (jx @ jx + jy @ jy + jz @ jz).real


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_casimir_against_dense_construction(n):
    assert np.allclose(casimir_matrix(n), dense_casimir(n))


def test_casimir_on_states():
    up = StateVector.basis("0000")
    assert collective_casimir_apply(up).allclose(up * 6.0)
    singlet = (StateVector.basis("01") - StateVector.basis("10")) * (1 / np.sqrt(2))
    assert collective_casimir_apply(singlet).norm() < 1e-12


def test_casimir_spectrum_multiplicities():
    evals = np.round(np.linalg.eigvalsh(casimir_matrix(8)), 8)
    dims = two_row_dimensions(8)
    for j, d in enumerate(dims):
        spin = (8 - 2 * j) / 2
        assert np.sum(evals == spin * (spin + 1)) == d * (2 * spin + 1)


def test_hook_lengths():
    assert two_row_dimensions(8) == [1, 7, 20, 28, 14]
    assert hook_length_dimension((2, 1)) == 2
    assert hook_length_dimension((3, 2, 1)) == 16


def test_css_codewords_are_orthonormal_with_positive_phase():
    q = css_codewords(hypercube_code(3))
    assert q.dim == 8 and q.is_orthonormal()
    for b in q.basis:
        amps = b.amplitudes[np.abs(b.amplitudes) > 1e-12]
        assert np.allclose(amps, amps[0]) and amps[0].real > 0


def test_knill_laflamme_hypercube():
    q = css_codewords(hypercube_code(3))
    rep = knill_laflamme_check(q, 2)
    assert rep.distance == 2
    assert all(e.scalar for e in rep.entries if sum(c != "I" for c in e.label) <= 1)


def test_knill_laflamme_repetition_code():
    q = CodeSpace(3, [StateVector.basis("000"), StateVector.basis("111")])
    rep = knill_laflamme_check(q, 1)
    assert rep.distance == 1
    assert not rep.entry("ZII").scalar
    assert rep.entry("XII").scalar


def test_codespace_residual():
    q = CodeSpace(2, [StateVector.basis("00")])
    assert q.residual(StateVector.basis("00")) == 0
    assert abs(q.residual(StateVector.basis("01")) - 1) < 1e-12
