"""CSS codes in the binary symplectic picture, and phantom certificates.

Rows are packed integers as in :mod:`phantomcodes.gf2`. For the punctured
hypercube family, qubit p carries the nonzero point of F_2^k whose numeral is
p, matching :mod:`phantomcodes.reed_muller`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .gf2 import (
    MAX_EXHAUSTIVE_DIM,
    BitVector,
    ClassicalCode,
    Gf2Matrix,
    in_span,
    min_weight,
    parity,
    permute_bits,
    pivot_table,
)
from .gl import GlElement, GlGroup, dual_element, elementary_transvections, gl_order, transvection
from .permgroup import Permutation
from .reed_muller import gl_point_generators, invariant_codes, point_permutation, rm_code


class CssViolationError(ValueError):
    """dual(c_x) is not contained in c_z; ``witness`` is a vector of the difference."""

    def __init__(self, witness: BitVector):
        super().__init__(f"CSS condition fails: {witness} lies in dual(c_x) but not in c_z")
        self.witness = witness


class CertificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class PauliLabel:
    """A Pauli operator up to phase, as the symplectic pair (x | z)."""

    x: BitVector
    z: BitVector

    def __post_init__(self) -> None:
        if self.x.length != self.z.length:
            raise ValueError("x and z parts must have equal length")

    @classmethod
    def from_str(cls, s: str) -> PauliLabel:
        """Parse a string over I, X, Y, Z."""
        xs = [1 if c in "XY" else 0 for c in s]
        zs = [1 if c in "ZY" else 0 for c in s]
        if set(s) - set("IXYZ"):
            raise ValueError(f"not a Pauli string: {s!r}")
        return cls(BitVector.from_bits(xs), BitVector.from_bits(zs))

    @property
    def n(self) -> int:
        return self.x.length

    @property
    def weight(self) -> int:
        return (self.x.value | self.z.value).bit_count()

    def commutes_with(self, other: PauliLabel) -> bool:
        return (self.x.dot(other.z) + other.x.dot(self.z)) % 2 == 0

    def __str__(self) -> str:
        return "".join("IZXY"[2 * a + b] for a, b in zip(self.x, self.z))


def symplectic_form(a: PauliLabel, b: PauliLabel) -> int:
    return 0 if a.commutes_with(b) else 1


@dataclass
class CssCode:
    n: int
    c_x: ClassicalCode
    c_z: ClassicalCode
    logical_x: list[int]
    logical_z: list[int]

    @property
    def k(self) -> int:
        return self.c_x.dim - self.c_z.dual().dim

    @property
    def x_stabilizer_span(self) -> ClassicalCode:
        return self.c_x.dual()

    @property
    def z_stabilizer_span(self) -> ClassicalCode:
        return self.c_z.dual()

    @property
    def stabilizer_x(self) -> list[BitVector]:
        return self.x_stabilizer_span.basis()

    @property
    def stabilizer_z(self) -> list[BitVector]:
        return self.z_stabilizer_span.basis()

    @property
    def logical_x_reps(self) -> list[BitVector]:
        return [BitVector(v, self.n) for v in self.logical_x]

    @property
    def logical_z_reps(self) -> list[BitVector]:
        return [BitVector(v, self.n) for v in self.logical_z]

    def pairing_matrix(self) -> Gf2Matrix:
        return Gf2Matrix([[parity(a & b) for b in self.logical_z] for a in self.logical_x])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "stabilizer_x": [str(v) for v in self.stabilizer_x],
            "stabilizer_z": [str(v) for v in self.stabilizer_z],
            "logical_x": [str(v) for v in self.logical_x_reps],
            "logical_z": [str(v) for v in self.logical_z_reps],
        }

    def __repr__(self) -> str:
        return f"CssCode([[{self.n}, {self.k}]])"


def _complete(sub: ClassicalCode, sup: ClassicalCode) -> list[int]:
    """Rows of rref(sup) that extend rref(sub) to a basis of sup."""
    table = pivot_table(sub.rows)
    extra = []
    for r in sup.rows:
        if not in_span(r, table):
            extra.append(r)
            table = pivot_table(list(table.values()) + [r])
    return extra


def _pair_to_identity(lx: list[int], lz: list[int]) -> list[int]:
    """Replace lz by P^{-T} lz so that the pairing lx . lz^T is the identity."""
    k = len(lx)
    if k == 0:
        return []
    p = GlElement.from_matrix([[parity(a & b) for b in lz] for a in lx])
    m = dual_element(p)
    out = []
    for i in range(k):
        acc = 0
        for j in range(k):
            if m.entry(i + 1, j + 1):
                acc ^= lz[j]
        out.append(acc)
    return out


def css_from_pair(
    c_x: ClassicalCode,
    c_z: ClassicalCode,
    logical_x: Sequence[int] | None = None,
    logical_z: Sequence[int] | None = None,
) -> CssCode:
    """Build the CSS code with X stabilisers dual(c_x) and Z stabilisers dual(c_z).

    Without explicit representatives the logical operators are canonical:
    X reps extend rref(dual(c_x)) inside rref(c_z), Z reps extend rref(dual(c_z))
    inside rref(c_x), and the Z reps are then re-paired to the identity.
    """
    if c_x.n != c_z.n:
        raise ValueError("codes must share a length")
    sx = c_x.dual()
    for r in sx.rows:
        if r not in c_z:
            raise CssViolationError(BitVector(r, c_x.n))
    if logical_x is None or logical_z is None:
        lx = _complete(sx, c_z)
        lz = _pair_to_identity(lx, _complete(c_z.dual(), c_x))
    else:
        lx, lz = list(logical_x), list(logical_z)
        code = CssCode(c_x.n, c_x, c_z, lx, lz)
        if len(lx) != code.k or len(lz) != code.k:
            raise ValueError("wrong number of logical representatives")
        if any(v not in c_z for v in lx) or any(v not in c_x for v in lz):
            raise ValueError("logical representatives must lie in the normaliser")
        if code.pairing_matrix() != Gf2Matrix.identity(code.k):
            raise ValueError("logical representatives must pair to the identity")
    return CssCode(c_x.n, c_x, c_z, lx, lz)


# ---------------------------------------------------------------------------
# hypercube family


def hypercube_code(k: int) -> CssCode:
    """The [[2^k - 1, k, 2]] punctured hypercube code.

    Logical X_i is the half-cube x_i = 1 and logical Z_i is the edge joining
    the all-ones vertex to the vertex with x_i = 0; they pair to the identity.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = 2**k - 1
    c_x = rm_code(k - 1, k, "shortened")
    c_z = rm_code(1, k, "punctured")
    lx = []
    lz = []
    for i in range(1, k + 1):
        bit = 1 << (k - i)
        lx.append(sum(1 << (n - p) for p in range(1, n + 1) if p & bit))
        lz.append((1 << (n - n)) | (1 << (n - (n ^ bit))))
    return css_from_pair(c_x, c_z, lx, lz)


def qrm_code(r: int, s: int, k: int) -> CssCode:
    """The CSS code with c_x = RM_*(r, k) and c_z = RM*(s, k).

    ``qrm_code(k - 1, 1, k)`` is the punctured hypercube code (with canonical
    rather than geometric logical representatives).
    """
    return css_from_pair(rm_code(r, k, "shortened"), rm_code(s, k, "punctured"))


def _min_weight_outside(code: ClassicalCode, exclude: ClassicalCode) -> int:
    if code.dim <= MAX_EXHAUSTIVE_DIM:
        return min_weight(code, exclude)
    return _min_weight_by_weight(code, exclude)


def _min_weight_by_weight(code: ClassicalCode, exclude: ClassicalCode, budget: int = 5 * 10**6) -> int:
    """Weight-ordered search: test every vector of weight 1, 2, ... for membership."""
    from itertools import combinations

    n = code.n
    spent = 0
    for w in range(1, n + 1):
        spent += comb(n, w)
        if spent > budget:
            raise ValueError("weight-ordered search exceeded its budget")
        for s in combinations(range(n), w):
            v = sum(1 << i for i in s)
            if v in code and v not in exclude:
                return w
    raise ValueError("code \\ exclude is empty")


def css_distance(code: CssCode) -> tuple[int, int, int]:
    """(d_x, d_z, d) with d_z over c_z minus dual(c_x) and d_x over c_x minus dual(c_z)."""
    if code.k < 1:
        raise ValueError("distance needs k >= 1")
    d_z = _min_weight_outside(code.c_z, code.c_x.dual())
    d_x = _min_weight_outside(code.c_x, code.c_z.dual())
    return d_x, d_z, min(d_x, d_z)


# ---------------------------------------------------------------------------
# logical action of permutations


@dataclass(frozen=True)
class Rejection:
    """A permutation that does not preserve the stabiliser group."""

    space: str
    witness: BitVector

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        name = {"x": "X stabiliser space", "z": "Z stabiliser space"}[self.space]
        return f"permutation does not preserve the {name}: image of {self.witness} leaves it"


def permutation_logical_action(code: CssCode, sigma: Permutation) -> GlElement | Rejection:
    """Matrix A with sigma(Xbar_j) = prod_i Xbar_i^{A_ij} modulo stabilisers."""
    n = code.n
    if sigma.degree != n:
        raise ValueError(f"permutation degree {sigma.degree} does not match n={n}")
    imgs = sigma.images
    for space, stab in (("x", code.x_stabilizer_span), ("z", code.z_stabilizer_span)):
        for r in stab.rows:
            if permute_bits(r, imgs, n) not in stab:
                return Rejection(space, BitVector(r, n))
    k = code.k
    if k == 0:
        raise ValueError("code has no logical qubits")
    sx = [permute_bits(v, imgs, n) for v in code.logical_x]
    sz = [permute_bits(v, imgs, n) for v in code.logical_z]
    a = GlElement.from_matrix([[parity(sx[j] & code.logical_z[i]) for j in range(k)] for i in range(k)])
    b = GlElement.from_matrix([[parity(sz[j] & code.logical_x[i]) for j in range(k)] for i in range(k)])
    if b != dual_element(a):
        raise AssertionError("Z action is not the inverse transpose of the X action")
    return a


def geometric_automorphism(a: GlElement, k: int | None = None) -> Permutation:
    """Permutation v -> A v of the 2^k - 1 nonzero points (qubit p = point numeral p)."""
    k = a.k if k is None else k
    if k != a.k:
        raise ValueError("dimension mismatch")
    return point_permutation(a.apply, k)


def permutation_for_circuit(g: GlElement) -> Permutation:
    """The hypercube-code qubit permutation implementing the logical CNOT circuit g.

    Logical X_j is the half-cube x_j = 1, a hyperplane with normal e_j, and
    v -> M v sends it to the hyperplane with normal M^{-T} e_j. So the
    permutation realising g is v -> g^{-T} v.
    """
    return geometric_automorphism(dual_element(g))


GEOMETRIC_CONVENTION = "sigma_g = geometric_automorphism(g^{-T}); qubit p is the point with numeral p"


@dataclass
class CertificateEntry:
    generator: tuple[int, int]
    permutation: Permutation
    logical_action: GlElement | None
    verified: bool

    def to_dict(self) -> dict:
        i, j = self.generator
        return {
            "generator": f"g{i}{j}",
            "cnot": {"control": j, "target": i},
            "permutation": self.permutation.cycle_string(),
            "verified": self.verified,
        }


@dataclass
class PhantomCertificate:
    k: int
    n: int
    entries: list[CertificateEntry]
    image_order: int
    image_order_method: str
    convention: str = GEOMETRIC_CONVENTION

    @property
    def verified(self) -> bool:
        return all(e.verified for e in self.entries) and self.image_order == gl_order(self.k)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "convention": self.convention,
            "generators": [e.to_dict() for e in self.entries],
            "image_order": self.image_order,
            "image_order_method": self.image_order_method,
            "gl_order": gl_order(self.k),
            "verified": self.verified,
        }


CLOSURE_MAX_K = 4


def phantom_certificate(code: CssCode, k: int | None = None) -> PhantomCertificate:
    """Certify that every logical CNOT circuit of a hypercube code is a qubit permutation.

    For each elementary transvection g_ij the permutation sigma_g is checked to
    act on logical operators exactly as g. The g_ij generate GL_k(F_2), so the
    map from permutations to logical circuits is onto. The image group is also
    enumerated for k <= 4; for larger k its order is the GL_k(F_2) formula,
    which holds because every generator was verified.
    """
    k = code.k if k is None else k
    if code.n != 2**k - 1 or code.k != k:
        raise ValueError("certificate expects a hypercube code on 2^k - 1 qubits")
    entries = []
    for i, j in elementary_transvections(k):
        g = transvection(i, j, k)
        sigma = permutation_for_circuit(g)
        act = permutation_logical_action(code, sigma)
        ok = isinstance(act, GlElement) and act == g
        entries.append(CertificateEntry((i, j), sigma, act if isinstance(act, GlElement) else None, ok))
        if not ok:
            raise CertificationError(f"generator g{i}{j}: permutation {sigma} acts as {act}, expected {g}")
    if k <= CLOSURE_MAX_K:
        order = GlGroup([e.logical_action for e in entries], k).order
        method = "closure"
    else:
        order = gl_order(k)
        method = "formula"
    return PhantomCertificate(k, code.n, entries, order, method)


# ---------------------------------------------------------------------------
# classification and no-go


def uniqueness_scan(m: int = 3) -> list[tuple[ClassicalCode, ClassicalCode, CssCode]]:
    """All CSS codes from GL_m-invariant pairs with k = m and d > 1."""
    family = invariant_codes(gl_point_generators(m), 2**m - 1)
    found = []
    for c_x in family:
        for c_z in family:
            if not c_x.dual().issubcode(c_z):
                continue
            code = css_from_pair(c_x, c_z)
            if code.k != m:
                continue
            if css_distance(code)[2] > 1:
                found.append((c_x, c_z, code))
    return found


def uniqueness_classes(m: int = 3) -> list[list[CssCode]]:
    """Codes from :func:`uniqueness_scan` grouped up to exchanging the X and Z roles."""
    classes: list[list[CssCode]] = []
    for c_x, c_z, code in uniqueness_scan(m):
        for cls in classes:
            rep = cls[0]
            if (rep.c_x, rep.c_z) in ((c_x, c_z), (c_z, c_x)):
                cls.append(code)
                break
        else:
            classes.append([code])
    return classes


def same_code(a: CssCode, b: CssCode) -> bool:
    """Equal stabiliser groups (the logical basis choice is ignored)."""
    return a.c_x == b.c_x and a.c_z == b.c_z


def css_from_dict(data: dict) -> CssCode:
    """Inverse of :meth:`CssCode.to_dict`."""
    n = int(data["n"])
    sx = ClassicalCode(n, [int(v, 2) for v in data["stabilizer_x"]])
    sz = ClassicalCode(n, [int(v, 2) for v in data["stabilizer_z"]])
    return css_from_pair(
        sx.dual(),
        sz.dual(),
        [int(v, 2) for v in data["logical_x"]],
        [int(v, 2) for v in data["logical_z"]],
    )


@dataclass
class NoGoCase:
    r: int
    argument: str
    lhs: int
    rhs: int
    detail: str

    @property
    def excluded(self) -> bool:
        return self.lhs > self.rhs


@dataclass
class NoGoReport:
    n: int
    k: int
    d: int
    invariant_dims: list[int]
    cases: list[NoGoCase] = field(default_factory=list)

    @property
    def impossible(self) -> bool:
        return all(c.excluded for c in self.cases)

    def lines(self) -> list[str]:
        return [f"r={c.r}: {c.argument}: {c.detail}" for c in self.cases]


def stabilizer_nogo_8_4(max_r: int = 4) -> NoGoReport:
    """No Pauli stabiliser subsystem code on 8 qubits, 4 logical qubits, distance 2 is phantom.

    A phantom code would need an A_8-invariant gauge structure. With r gauge
    qubits, dim Gamma = k + r. For r >= 3 the subsystem Singleton bound fails.
    For r <= 2 the X and Z projections of Gamma are A_8-invariant codes of
    dimension at most k + r <= 6, leaving only dims 0 and 1, so
    k + r <= dim Gamma_X + dim Gamma_Z <= 2, a contradiction.
    """
    from .permgroup import alternating_group_generators

    n, k, d = 8, 4, 2
    dims = sorted({c.dim for c in invariant_codes(alternating_group_generators(n))})
    report = NoGoReport(n, k, d, dims)
    singleton = n - 2 * d + 2
    for r in range(0, max_r + 1):
        if k + r > singleton:
            report.cases.append(
                NoGoCase(r, "singleton", k + r, singleton, f"k+r = {k + r} > n-2d+2 = {singleton}")
            )
        else:
            allowed = [x for x in dims if x <= k + r]
            bound = 2 * max(allowed)
            report.cases.append(
                NoGoCase(
                    r,
                    "invariant projections",
                    k + r,
                    bound,
                    f"allowed dims {allowed}; {k + r} = dim Gamma <= dim Gamma_X + dim Gamma_Z <= {bound}",
                )
            )
    return report


def certificate_json(code: CssCode, certificate: PhantomCertificate | None) -> dict:
    out = code.to_dict()
    out["certificate"] = [] if certificate is None else [e.to_dict() for e in certificate.entries]
    if certificate is not None:
        out["certificate_summary"] = {
            k: v for k, v in certificate.to_dict().items() if k != "generators"
        }
    return out
