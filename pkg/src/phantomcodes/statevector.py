"""Dense state vectors on a few qubits.

Basis index ``s`` is the integer whose binary expansion (qubit 1 leading) is
the bit string, so ``|10101010>`` has index ``int("10101010", 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .gf2 import BitVector
from .permgroup import Permutation

MAX_QUBITS = 12
TOL = 1e-9


def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def permutation_index_map(sigma: Permutation) -> np.ndarray:
    """Array ``m`` with ``m[s]`` the index of sigma . s (bit at p moves to sigma(p))."""
    n = sigma.degree
    idx = _indices(n)
    out = np.zeros_like(idx)
    for p in range(1, n + 1):
        out |= ((idx >> (n - p)) & 1) << (n - sigma(p))
    return out


class StateVector:
    """An immutable complex amplitude vector on n qubits."""

    __slots__ = ("n", "_a")

    def __init__(self, amplitudes, n: int | None = None):
        a = np.array(amplitudes, dtype=complex).reshape(-1)
        if n is None:
            n = int(a.size).bit_length() - 1
        if a.size != 1 << n:
            raise ValueError(f"expected {1 << n} amplitudes, got {a.size}")
        if n > MAX_QUBITS:
            raise ValueError(f"at most {MAX_QUBITS} qubits supported")
        a.flags.writeable = False
        self.n = n
        self._a = a

    @classmethod
    def zeros(cls, n: int) -> StateVector:
        return cls(np.zeros(1 << n), n)

    @classmethod
    def basis(cls, bits: str | BitVector) -> StateVector:
        v = BitVector.from_str(bits) if isinstance(bits, str) else bits
        a = np.zeros(1 << v.length, dtype=complex)
        a[v.value] = 1
        return cls(a, v.length)

    @classmethod
    def from_sparse(cls, amps: dict[str, complex], n: int | None = None) -> StateVector:
        if n is None:
            n = len(next(iter(amps)))
        a = np.zeros(1 << n, dtype=complex)
        for s, c in amps.items():
            if len(s) != n:
                raise ValueError("inconsistent bit string length")
            a[int(s, 2)] += c
        return cls(a, n)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._a

    def __array__(self, dtype=None, copy=None):
        return self._a.astype(dtype) if dtype is not None else self._a.copy()

    def __getitem__(self, bits: str | int) -> complex:
        return complex(self._a[int(bits, 2) if isinstance(bits, str) else bits])

    def __add__(self, other: StateVector) -> StateVector:
        return StateVector(self._a + other._a, self.n)

    def __sub__(self, other: StateVector) -> StateVector:
        return StateVector(self._a - other._a, self.n)

    def __mul__(self, c: complex) -> StateVector:
        return StateVector(self._a * c, self.n)

    __rmul__ = __mul__

    def __neg__(self) -> StateVector:
        return StateVector(-self._a, self.n)

    def inner(self, other: StateVector) -> complex:
        """<self|other>."""
        return complex(np.vdot(self._a, other._a))

    def norm(self) -> float:
        return float(np.linalg.norm(self._a))

    def normalized(self) -> StateVector:
        return StateVector(self._a / self.norm(), self.n)

    def allclose(self, other: StateVector, tol: float = TOL) -> bool:
        return self.n == other.n and float(np.max(np.abs(self._a - other._a))) <= tol

    def support(self, tol: float = 1e-12) -> dict[str, complex]:
        nz = np.nonzero(np.abs(self._a) > tol)[0]
        return {format(int(i), f"0{self.n}b"): complex(self._a[i]) for i in nz}

    def __repr__(self) -> str:
        return f"StateVector(n={self.n}, nnz={len(self.support())})"


def apply_permutation(psi: StateVector, sigma: Permutation) -> StateVector:
    """|s> -> |sigma . s>, so the output amplitude at s is the input at sigma^{-1} . s."""
    if sigma.degree != psi.n:
        raise ValueError(f"degree {sigma.degree} does not match {psi.n} qubits")
    out = np.zeros_like(psi.amplitudes)
    out[permutation_index_map(sigma)] = psi.amplitudes
    return StateVector(out, psi.n)


def apply_pauli(psi: StateVector, label) -> StateVector:
    """Apply Z on the z support, then X on the x support (no factors of i)."""
    from .css import PauliLabel

    p = label if isinstance(label, PauliLabel) else PauliLabel.from_str(label)
    if p.n != psi.n:
        raise ValueError("label length does not match qubit count")
    idx = _indices(psi.n)
    sign = 1 - 2 * (np.bitwise_count(idx & p.z.value) & 1).astype(np.int64)
    a = psi.amplitudes * sign
    out = np.empty_like(a)
    out[idx ^ p.x.value] = a
    return StateVector(out, psi.n)


def apply_local(psi: StateVector, u: np.ndarray, qubits: Iterable[int] | None = None) -> StateVector:
    """Apply the single-qubit unitary ``u`` on each listed qubit (default: all)."""
    n = psi.n
    qubits = range(1, n + 1) if qubits is None else qubits
    t = psi.amplitudes.reshape([2] * n)
    for q in qubits:
        t = np.moveaxis(np.tensordot(u, t, axes=([1], [q - 1])), 0, q - 1)
    return StateVector(t.reshape(-1), n)


def phase_gate(theta: float) -> np.ndarray:
    return np.diag([1, np.exp(1j * theta)])


def apply_diagonal_phase_all(psi: StateVector, theta: float) -> StateVector:
    """diag(1, e^{i theta}) on every qubit; the phase depends only on Hamming weight."""
    w = np.bitwise_count(_indices(psi.n))
    return StateVector(psi.amplitudes * np.exp(1j * theta * w), psi.n)


# ---------------------------------------------------------------------------
# code spaces


@dataclass
class CodeSpace:
    n: int
    basis: list[StateVector]

    def __post_init__(self) -> None:
        if any(b.n != self.n for b in self.basis):
            raise ValueError("basis states must live on n qubits")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        """Columns are the basis states."""
        return np.stack([b.amplitudes for b in self.basis], axis=1)

    def gram(self) -> np.ndarray:
        v = self.matrix()
        return v.conj().T @ v

    def is_orthonormal(self, tol: float = TOL) -> bool:
        return float(np.max(np.abs(self.gram() - np.eye(self.dim)))) <= tol

    def projector(self) -> np.ndarray:
        v = self.matrix()
        return v @ v.conj().T

    def residual(self, psi: StateVector) -> float:
        """Norm of the component of psi outside the code space."""
        v = self.matrix()
        a = psi.amplitudes
        return float(np.linalg.norm(a - v @ (v.conj().T @ a)))

    def logical_matrix(self, op) -> np.ndarray:
        """K x K matrix <i| op |j> for ``op`` a function StateVector -> StateVector."""
        images = np.stack([op(b).amplitudes for b in self.basis], axis=1)
        return self.matrix().conj().T @ images

    def max_residual(self, op) -> float:
        return max(self.residual(op(b)) for b in self.basis)


def pauli_labels(n: int, max_weight: int) -> list:
    from .css import PauliLabel

    out = [PauliLabel(BitVector.zeros(n), BitVector.zeros(n))]
    for w in range(1, max_weight + 1):
        for support in combinations(range(1, n + 1), w):
            for kinds in product("XYZ", repeat=w):
                s = ["I"] * n
                for q, c in zip(support, kinds):
                    s[q - 1] = c
                out.append(PauliLabel.from_str("".join(s)))
    return out


@dataclass
class KLEntry:
    label: str
    scalar: bool
    value: complex
    deviation: float


@dataclass
class KLReport:
    max_weight: int
    entries: list[KLEntry] = field(default_factory=list)

    @property
    def violations(self) -> list[KLEntry]:
        return [e for e in self.entries if not e.scalar]

    @property
    def distance(self) -> int | None:
        """Smallest weight of a violating error, or None when no violation up to max_weight."""
        ws = [sum(c != "I" for c in e.label) for e in self.violations]
        return min(ws) if ws else None

    def entry(self, label: str) -> KLEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)


def knill_laflamme_check(q: CodeSpace, max_weight: int, tol: float = TOL) -> KLReport:
    """Classify V^dag E V as scalar or not for every Pauli E of weight <= max_weight."""
    if max_weight > q.n:
        raise ValueError("max_weight exceeds n")
    v = q.matrix()
    k = q.dim
    report = KLReport(max_weight)
    for p in pauli_labels(q.n, max_weight):
        ev = np.stack([apply_pauli(b, p).amplitudes for b in q.basis], axis=1)
        m = v.conj().T @ ev
        c = np.trace(m) / k
        dev = float(np.linalg.norm(m - c * np.eye(k)))
        report.entries.append(KLEntry(str(p), dev <= tol, complex(c), dev))
    return report


# ---------------------------------------------------------------------------
# collective spin


def _casimir_columns(a: np.ndarray, n: int) -> np.ndarray:
    """J^2 applied to each column of ``a`` (shape 2^n x m); |0> is spin up."""
    idx = _indices(n)
    w = np.bitwise_count(idx).astype(float)
    jz = (n - 2 * w) / 2
    out = (jz**2)[:, None] * a

    def lower(x):  # J-: set one 0 bit to 1
        y = np.zeros_like(x)
        for p in range(n):
            bit = 1 << p
            src = idx[(idx & bit) == 0]
            y[src | bit] += x[src]
        return y

    def raise_(x):  # J+: clear one 1 bit
        y = np.zeros_like(x)
        for p in range(n):
            bit = 1 << p
            src = idx[(idx & bit) != 0]
            y[src ^ bit] += x[src]
        return y

    out = out + 0.5 * (raise_(lower(a)) + lower(raise_(a)))
    return out


def collective_casimir_apply(psi: StateVector) -> StateVector:
    """J^2 = J_z^2 + (J+ J- + J- J+)/2 with J_a = (1/2) sum_i sigma_a^(i)."""
    return StateVector(_casimir_columns(psi.amplitudes[:, None], psi.n)[:, 0], psi.n)


def casimir_matrix(n: int) -> np.ndarray:
    return _casimir_columns(np.eye(1 << n, dtype=complex), n).real


def hook_length_dimension(partition: Sequence[int]) -> int:
    """Dimension of the symmetric-group irrep labelled by ``partition``."""
    parts = [p for p in partition if p > 0]
    total = sum(parts)
    cols = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    hooks = 1
    for i, row in enumerate(parts):
        for j in range(row):
            hooks *= (row - j - 1) + (cols[j] - i - 1) + 1
    return factorial(total) // hooks


def two_row_dimensions(n: int) -> list[int]:
    """Irrep dimensions for the two-row partitions (n - j, j), j = 0..n//2."""
    return [hook_length_dimension((n - j, j)) for j in range(n // 2 + 1)]


# ---------------------------------------------------------------------------
# CSS codewords


def css_codewords(code) -> CodeSpace:
    """|x> proportional to the sum over the X-stabiliser span of |sum_j x_j Lx_j + s>."""
    n = code.n
    if n > MAX_QUBITS:
        raise ValueError(f"state-level codewords limited to {MAX_QUBITS} qubits")
    stab = code.x_stabilizer_span.codewords()
    basis = []
    for x in range(1 << code.k):
        v = 0
        for j in range(code.k):
            if (x >> (code.k - 1 - j)) & 1:
                v ^= code.logical_x[j]
        a = np.zeros(1 << n, dtype=complex)
        a[stab ^ v] = 1 / np.sqrt(len(stab))
        basis.append(StateVector(a, n))
    return CodeSpace(n, basis)
