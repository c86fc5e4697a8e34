"""The ((8, 16, 2)) nonstabiliser phantom code built from PG(3,2).

Logical basis order: |0bar> first, then |xbar> for the points x = 0001 .. 1111
in numeral order, so logical index equals the numeral of x and matches the
indexing of :func:`phantomcodes.gl.cnot_circuit_unitary`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg

from .gl import GlElement, adjacent_transvections, cnot_circuit_unitary, phi, tau_c
from .permgroup import Permutation, symmetric_group_generators
from .pg32 import (
    all_lines,
    all_planes,
    apply_to_subspace,
    dual_subspace,
    isotropic_points,
    line_id,
    line_representative,
    point_str,
    verify_tables,
)
from .statevector import (
    TOL,
    CodeSpace,
    StateVector,
    apply_diagonal_phase_all,
    apply_pauli,
    apply_permutation,
    casimir_matrix,
    knill_laflamme_check,
    two_row_dimensions,
)

N = 8
ALPHA = 1 / np.sqrt(6)
BETA = -(1 / 5) * (1 / np.sqrt(6) - 1 / np.sqrt(21))


class CertificationFailure(RuntimeError):
    pass


@dataclass
class PgCode:
    line_ids: list[int]
    line_strings: dict[int, str]
    line_states: dict[int, StateVector]
    # integer coefficients over the line basis (columns ordered by line id)
    point_star_coeffs: np.ndarray
    t_coeffs: np.ndarray
    logical_basis: CodeSpace

    @property
    def zero(self) -> StateVector:
        return self.logical_basis.basis[0]

    def logical(self, x: int) -> StateVector:
        return self.logical_basis.basis[x]

    def lines_matrix(self) -> np.ndarray:
        """256 x 35 matrix whose columns are the normalized line states."""
        return np.stack([self.line_states[i].amplitudes for i in self.line_ids], axis=1)

    def state_from_line_coeffs(self, c: np.ndarray) -> StateVector:
        return StateVector(self.lines_matrix() @ c, N)

    def point_star(self, x: int) -> StateVector:
        return self.state_from_line_coeffs(self.point_star_coeffs[x - 1])

    @property
    def t(self) -> StateVector:
        return self.state_from_line_coeffs(self.t_coeffs)

    def plane_coeffs(self, plane) -> np.ndarray:
        out = np.zeros(len(self.line_ids), dtype=np.int64)
        for l in all_lines():
            if l.points <= plane:
                out[l.id - 1] = 1
        return out


def _line_state(b: str) -> StateVector:
    a = np.zeros(1 << N, dtype=complex)
    v = int(b, 2)
    a[v] = a[v ^ 0xFF] = 1 / np.sqrt(2)
    return StateVector(a, N)


@lru_cache(maxsize=None)
def build_pg_code() -> PgCode:
    report = verify_tables()
    if not report.ok:
        raise RuntimeError("reference tables failed verification: " + "; ".join(map(str, report.mismatches)))
    lines = all_lines()
    ids = [l.id for l in lines]
    strings = {l.id: str(line_representative(l.id)) for l in lines}
    states = {i: _line_state(strings[i]) for i in ids}
    stars = np.zeros((15, 35), dtype=np.int64)
    for l in lines:
        for x in l.points:
            stars[x - 1, l.id - 1] = 1
    t = np.ones(35, dtype=np.int64)
    lines_mat = np.stack([states[i].amplitudes for i in ids], axis=1)
    zero = np.zeros(1 << N, dtype=complex)
    zero[0] = zero[0xFF] = 1 / np.sqrt(2)
    basis = [StateVector(zero, N)]
    for x in range(1, 16):
        basis.append(StateVector(lines_mat @ (ALPHA * stars[x - 1] + BETA * t), N))
    return PgCode(ids, strings, states, stars, t, CodeSpace(N, basis))


# ---------------------------------------------------------------------------
# exact identities


@dataclass
class GramReport:
    star_gram: np.ndarray
    star_t: np.ndarray
    t_norm: int
    star_sum_is_3t: bool
    planes_ok: bool
    lines_orthonormal: bool
    logical_gram_error: float

    @property
    def ok(self) -> bool:
        off = self.star_gram[~np.eye(15, dtype=bool)]
        return (
            bool(np.all(np.diag(self.star_gram) == 7))
            and bool(np.all(off == 1))
            and bool(np.all(self.star_t == 7))
            and self.t_norm == 35
            and self.star_sum_is_3t
            and self.planes_ok
            and self.lines_orthonormal
            and self.logical_gram_error <= TOL
        )


def gram_report(code: PgCode) -> GramReport:
    s = code.point_star_coeffs
    t = code.t_coeffs
    # line states have disjoint supports and unit norm, so line-basis integer
    # coefficients give exact inner products
    lm = code.lines_matrix()
    line_gram = lm.conj().T @ lm
    planes_ok = True
    for plane in all_planes():
        lhs = 2 * code.plane_coeffs(plane)
        rhs = sum(s[x - 1] for x in plane) - t
        planes_ok &= bool(np.array_equal(lhs, rhs))
    return GramReport(
        star_gram=s @ s.T,
        star_t=s @ t,
        t_norm=int(t @ t),
        star_sum_is_3t=bool(np.array_equal(s.sum(axis=0), 3 * t)),
        planes_ok=planes_ok,
        lines_orthonormal=float(np.max(np.abs(line_gram - np.eye(35)))) <= 1e-12,
        logical_gram_error=float(np.max(np.abs(code.logical_basis.gram() - np.eye(16)))),
    )


# ---------------------------------------------------------------------------
# phantom property


@dataclass
class GeneratorCheck:
    generator: tuple[int, int]
    permutation: Permutation
    lines_ok: bool
    logicals_ok: bool
    logical_matrix_error: float

    @property
    def ok(self) -> bool:
        return self.lines_ok and self.logicals_ok and self.logical_matrix_error <= TOL


@dataclass
class PgCertificate:
    checks: list[GeneratorCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_phantom(code: PgCode, tol: float = 1e-12) -> PgCertificate:
    """sigma_g |l> = |g.l> and sigma_g |xbar> = |(g x)bar> exactly, for the six generators."""
    from .gl import ADJACENT

    cert = PgCertificate()
    for (i, j), g in zip(ADJACENT, adjacent_transvections()):
        sigma = phi(g)
        lines_ok = True
        for l in all_lines():
            img = apply_permutation(code.line_states[l.id], sigma)
            target = code.line_states[line_id(apply_to_subspace(g, l.points))]
            if not img.allclose(target, tol):
                raise CertificationFailure(f"g{i}{j} does not map line {l.id} to its image")
        logicals_ok = True
        for x in range(16):
            img = apply_permutation(code.logical(x), sigma)
            if not img.allclose(code.logical(g.apply(x)), tol):
                raise CertificationFailure(f"g{i}{j} does not map logical {format(x, '04b')} to its image")
        m = code.logical_basis.logical_matrix(lambda psi: apply_permutation(psi, sigma))
        err = float(np.max(np.abs(m - cnot_circuit_unitary(g))))
        cert.checks.append(GeneratorCheck((i, j), sigma, lines_ok, logicals_ok, err))
    return cert


# ---------------------------------------------------------------------------
# duality permutation, T and S


def reference_uc() -> np.ndarray:
    u = np.zeros((16, 16))
    u[0, 0] = 1
    for x in range(1, 16):
        perp = dual_subspace([x])
        for y in range(1, 16):
            u[y, x] = 1 / 3 if y in perp else -1 / 6
    return u


@dataclass
class UcReport:
    uc: np.ndarray
    residual: float
    reference_error: float
    square_error: float
    multiplicities: tuple[int, int]
    nonzero_trace: float

    @property
    def ok(self) -> bool:
        return (
            self.residual <= TOL
            and self.reference_error <= TOL
            and self.square_error <= TOL
            and self.multiplicities == (9, 7)
            and abs(self.nonzero_trace - 1) <= TOL
        )


def verify_s8_and_uc(code: PgCode) -> tuple[np.ndarray, UcReport]:
    sigma = tau_c()
    op = lambda psi: apply_permutation(psi, sigma)  # noqa: E731
    q = code.logical_basis
    uc = q.logical_matrix(op)
    ref = reference_uc()
    evals = np.linalg.eigvalsh((uc + uc.conj().T) / 2)
    plus = int(np.sum(np.abs(evals - 1) <= 1e-6))
    minus = int(np.sum(np.abs(evals + 1) <= 1e-6))
    report = UcReport(
        uc=uc,
        residual=q.max_residual(op),
        reference_error=float(np.max(np.abs(uc - ref))),
        square_error=float(np.max(np.abs(uc @ uc - np.eye(16)))),
        multiplicities=(plus, minus),
        nonzero_trace=float(np.trace(uc[1:, 1:]).real),
    )
    return uc, report


def s8_invariance_residuals(code: PgCode) -> list[float]:
    """Max residual of the permuted logical basis, per adjacent transposition (i i+1)."""
    q = code.logical_basis
    return [q.max_residual(lambda psi, s=s: apply_permutation(psi, s)) for s in symmetric_group_generators(N)]


@dataclass
class PhaseReport:
    theta: float
    logical: np.ndarray
    residual: float


def transversal_phase(code: PgCode, theta: float) -> PhaseReport:
    q = code.logical_basis
    op = lambda psi: apply_diagonal_phase_all(psi, theta)  # noqa: E731
    return PhaseReport(theta, q.logical_matrix(op), q.max_residual(op))


def verify_t8(code: PgCode) -> np.ndarray:
    return transversal_phase(code, np.pi / 4).logical


T8_REFERENCE = np.diag([1.0] + [-1.0] * 15)


# ---------------------------------------------------------------------------
# stabiliser characterisation


@dataclass
class CharacterizationReport:
    dimension: int
    span_error: float
    code_residual: float
    casimir_kernel_dim: int
    irrep_dims: list[int]

    @property
    def ok(self) -> bool:
        return self.dimension == 16 and self.span_error <= TOL and self.code_residual <= TOL


def stabilizer_characterization(code: PgCode) -> CharacterizationReport:
    """Intersect ker J^2(J^2 - 20), the +1 space of S^{x8} and the +1 space of X^{x8}."""
    dim = 1 << N
    j2 = casimir_matrix(N)
    evals, evecs = np.linalg.eigh(j2)
    keep = (np.abs(evals) <= 1e-8) | (np.abs(evals - 20) <= 1e-8)
    v = evecs[:, keep]
    p_casimir = v @ v.T
    weights = np.bitwise_count(np.arange(dim))
    p_s = np.diag((weights % 4 == 0).astype(float))
    flip = np.zeros((dim, dim))
    flip[np.arange(dim) ^ 0xFF, np.arange(dim)] = 1
    p_x = (np.eye(dim) + flip) / 2
    stacked = np.vstack([np.eye(dim) - p for p in (p_casimir, p_s, p_x)])
    basis = scipy.linalg.null_space(stacked, rcond=1e-10)
    p_int = basis @ basis.T
    p_code = code.logical_basis.projector()
    return CharacterizationReport(
        dimension=basis.shape[1],
        span_error=float(np.max(np.abs(p_int - p_code))),
        code_residual=float(np.max(np.abs((np.eye(dim) - p_int) @ code.logical_basis.matrix()))),
        casimir_kernel_dim=int(keep.sum()),
        irrep_dims=two_row_dimensions(N),
    )


# ---------------------------------------------------------------------------
# distance


@dataclass
class DistanceReport:
    weight1_all_zero: bool
    weight1_count: int
    z1z2_zero: complex
    z1z2_t: complex
    z1z2_scalar: bool
    distance: int | None


def distance_report(code: PgCode) -> DistanceReport:
    q = code.logical_basis
    kl = knill_laflamme_check(q, 2)
    w1 = [e for e in kl.entries if sum(c != "I" for c in e.label) == 1]
    z1z2 = "ZZ" + "I" * (N - 2)
    t = code.t
    return DistanceReport(
        weight1_all_zero=all(e.scalar and abs(e.value) <= TOL for e in w1),
        weight1_count=len(w1),
        z1z2_zero=code.zero.inner(apply_pauli(code.zero, z1z2)),
        z1z2_t=t.inner(apply_pauli(t, z1z2)) / 35,
        z1z2_scalar=kl.entry(z1z2).scalar,
        distance=kl.distance,
    )


# ---------------------------------------------------------------------------
# serialization


def to_dict(code: PgCode) -> dict:
    uc, _ = verify_s8_and_uc(code)
    t8 = verify_t8(code)

    def mat(m):
        return [[[float(np.real(z)), float(np.imag(z))] for z in row] for row in m]

    return {
        "n": N,
        "K": 16,
        "logical_labels": ["0000"] + [point_str(x) for x in range(1, 16)],
        "codewords": [
            {s: [a.real, a.imag] for s, a in b.support().items()} for b in code.logical_basis.basis
        ],
        "U_c": mat(uc),
        "T8": mat(t8),
    }


def codewords_from_dict(data: dict) -> CodeSpace:
    basis = [StateVector.from_sparse({s: complex(re, im) for s, (re, im) in cw.items()}, data["n"]) for cw in data["codewords"]]
    return CodeSpace(data["n"], basis)


def isotropic_diagonal(code: PgCode) -> dict[str, float]:
    uc, _ = verify_s8_and_uc(code)
    iso = set(isotropic_points())
    return {point_str(x): float(uc[x, x].real) for x in range(1, 16) if x in iso or x == 0b1000}
