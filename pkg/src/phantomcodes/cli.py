"""Command-line entry point: verification suites, code emission and tables.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np


@dataclass
class Check:
    id: str
    description: str
    status: str
    witness: str | None = None


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def add(self, cid: str, description: str, passed: bool, witness: object = None) -> None:
        self.checks.append(
            Check(cid, description, "pass" if passed else "fail", None if witness is None else str(witness))
        )

    def render(self) -> str:
        lines = [f"== {self.suite} =="]
        for c in self.checks:
            tail = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"{c.status.upper():4}  {c.id:<24} {c.description}{tail}")
        n_pass = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{self.suite}: {n_pass}/{len(self.checks)} checks passed in {self.elapsed_ms:.0f} ms")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "elapsed_ms": self.elapsed_ms, "checks": [asdict(c) for c in self.checks]}


def _timed(suite: str, body: Callable[[VerificationReport], None]) -> VerificationReport:
    report = VerificationReport(suite)
    t0 = time.perf_counter()
    body(report)
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


# ---------------------------------------------------------------------------
# suites


def suite_tables(seed: int) -> VerificationReport:
    from .gl import GlGroup, adjacent_transvections, dual_element, gl4_words, gl_order, phi, phi_generators
    from .permgroup import PermGroup, act_on_bitvector, orbit_and_stabilizer
    from .pg32 import (
        REFERENCE_LINE,
        B0,
        Bipartition,
        all_lines,
        all_planes,
        all_subspaces,
        apply_to_subspace,
        bipartition_of_line,
        contragredient_holds,
        isotropic_points,
        line_to_bipartition,
        lines_in,
        lines_through,
        verify_tables,
    )

    def body(r: VerificationReport) -> None:
        rng = np.random.default_rng(seed)
        a8 = PermGroup(phi_generators())
        r.add("phi.closure", "six generator images close to a group of order 20160", a8.order == gl_order(4) == 20160, a8.order)
        elems = list(gl4_words())
        idx = rng.integers(0, len(elems), size=(200, 2))
        hom = all(phi(elems[i] * elems[j]) == phi(elems[i]) * phi(elems[j]) for i, j in idx)
        r.add("phi.homomorphism", "phi(gh) = phi(g)phi(h) on 200 sampled pairs", hom)
        r.add("phi.even", "all generator images are even", all(p.is_even() for p in phi_generators()))
        gl4 = GlGroup(adjacent_transvections(), 4)
        _, st_line = orbit_and_stabilizer(gl4, REFERENCE_LINE, apply_to_subspace)
        _, st_w = orbit_and_stabilizer(a8, Bipartition(B0), lambda s, w: w.act(s))
        r.add("stab.order", "Stab(l0) in GL4 and Stab(w0) in A8 have order 576", st_line == st_w == 576, (st_line, st_w))
        rep = verify_tables()
        r.add("tables.fixture", "reference tables match derived data", not rep.mismatches, "; ".join(map(str, rep.mismatches)) or None)
        r.add("tables.duality", "b(l^perp) = tau_c . b(l) for all 35 lines", rep.duality_ok, rep.duality_failures or None)
        lines = all_lines()
        r.add("incidence.lines", "35 lines of 3 points", len(lines) == 35 and all(len(l.points) == 3 for l in lines))
        r.add("incidence.points", "every point lies on 7 lines", all(len(lines_through(x)) == 7 for x in range(1, 16)))
        planes = all_planes()
        r.add(
            "incidence.planes",
            "15 planes of 7 points and 7 lines; each line in 3 planes",
            len(set(planes)) == 15
            and all(len(p) == 7 and len(lines_in(p)) == 7 for p in planes)
            and all(sum(l.points <= p for p in planes) == 3 for l in lines),
        )
        iso = isotropic_points()
        r.add("incidence.isotropic", "7 isotropic points, all of even weight", len(iso) == 7 and all(bin(x).count("1") % 2 == 0 for x in iso))
        w = line_to_bipartition()
        r.add("bijection", "lines <-> bipartitions is a bijection agreeing with the table strings",
              len(set(w.values())) == 35 and all(w[l.points] == bipartition_of_line(l.id) for l in lines))
        gens = adjacent_transvections()
        r.add(
            "contragredient",
            "dual(g S) = g^{-T} dual(S) on all 65 subspaces and six generators",
            all(contragredient_holds(g, s) for g in gens for s in all_subspaces()),
        )

    return _timed("tables", body)


def suite_pg832(seed: int) -> VerificationReport:
    from .pg_code import (
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

    def body(r: VerificationReport) -> None:
        code = build_pg_code()
        g = gram_report(code)
        off = g.star_gram[~np.eye(15, dtype=bool)]
        r.add("lines.orthonormal", "35 line states are orthonormal", g.lines_orthonormal)
        r.add("gram.stars", "<a_x|a_y> = 7 if x = y else 1 (exact)", bool(np.all(np.diag(g.star_gram) == 7) and np.all(off == 1)))
        r.add("gram.star_t", "<a_x|t> = 7 and <t|t> = 35 (exact)", bool(np.all(g.star_t == 7)) and g.t_norm == 35)
        r.add("gram.sum", "sum_x |a_x> = 3|t> (exact)", g.star_sum_is_3t)
        r.add("planes", "|p_P> = (sum_{x in P} |a_x> - |t>)/2 for all 15 planes (exact)", g.planes_ok)
        r.add("logical.gram", "logical basis is orthonormal", g.logical_gram_error <= 1e-9, f"{g.logical_gram_error:.1e}")
        cert = verify_phantom(code)
        r.add("phantom.states", "sigma_g maps |l> and |xbar> to their images, phase +1", all(c.lines_ok and c.logicals_ok for c in cert.checks))
        r.add("phantom.matrix", "logical action equals the CNOT circuit unitary for six generators",
              all(c.logical_matrix_error <= 1e-9 for c in cert.checks))
        _, uc = verify_s8_and_uc(code)
        r.add("uc.entries", "U_c has 1/3 on x^perp and -1/6 off it; U_c|0000> = |0000>", uc.reference_error <= 1e-9 and uc.residual <= 1e-9)
        r.add("uc.square", "U_c^2 = I", uc.square_error <= 1e-9)
        r.add("uc.spectrum", "eigenvalue multiplicities (+1: 9, -1: 7)", uc.multiplicities == (9, 7), uc.multiplicities)
        r.add("uc.trace", "trace over nonzero logicals is 1", abs(uc.nonzero_trace - 1) <= 1e-9, f"{uc.nonzero_trace:.12f}")
        t8 = transversal_phase(code, np.pi / 4)
        r.add("t8", "T^{x8} acts as diag(1, -1 x15)", t8.residual <= 1e-9 and float(np.max(np.abs(t8.logical - T8_REFERENCE))) <= 1e-9)
        s8 = transversal_phase(code, np.pi / 2)
        r.add("s8", "S^{x8} acts as the logical identity", s8.residual <= 1e-9 and float(np.max(np.abs(s8.logical - np.eye(16)))) <= 1e-9)
        res = s8_invariance_residuals(code)
        r.add("sym8", "all 7 adjacent transpositions preserve the code space", max(res) <= 1e-9, f"{max(res):.1e}")
        ch = stabilizer_characterization(code)
        r.add("stabilisers.dim", "J^2(J^2-20), S^{x8}, X^{x8} joint eigenspace has dimension 16", ch.dimension == 16, ch.dimension)
        r.add("stabilisers.span", "joint eigenspace equals the code space", ch.span_error <= 1e-9, f"{ch.span_error:.1e}")
        r.add("hooks", "two-row irrep dimensions (1, 7, 20, 28, 14)", ch.irrep_dims == [1, 7, 20, 28, 14], ch.irrep_dims)
        d = distance_report(code)
        r.add("kl.weight1", "all 24 weight-1 Paulis act as zero on the code", d.weight1_all_zero and d.weight1_count == 24)
        r.add(
            "kl.z1z2",
            "<0bar|Z1Z2|0bar> = 1 and <t|Z1Z2|t>/35 = -1/7",
            abs(d.z1z2_zero - 1) <= 1e-12 and abs(d.z1z2_t + 1 / 7) <= 1e-12,
            f"{d.z1z2_zero.real:.12f}, {d.z1z2_t.real:.12f}",
        )
        r.add("distance", "code distance is exactly 2", d.distance == 2 and not d.z1z2_scalar, d.distance)

    return _timed("pg832", body)


def suite_hypercube(k: int, seed: int) -> VerificationReport:
    from .css import (
        css_distance,
        hypercube_code,
        permutation_for_circuit,
        permutation_logical_action,
        phantom_certificate,
    )
    from .gf2 import Gf2Matrix, parity
    from .gl import cnot_circuit_unitary, gl_order
    from .statevector import MAX_QUBITS, apply_permutation, css_codewords, knill_laflamme_check

    def body(r: VerificationReport) -> None:
        code = hypercube_code(k)
        n = code.n
        r.add("parameters", f"[[{n}, {k}]] with 1 X stabiliser and {n - k - 1} Z stabilisers",
              code.k == k and len(code.stabilizer_x) == 1 and len(code.stabilizer_z) == n - k - 1)
        r.add("pairing", "logical X and Z representatives pair to the identity", code.pairing_matrix() == Gf2Matrix.identity(k))
        commute = all(parity(a.value & b.value) == 0 for a in code.stabilizer_x for b in code.stabilizer_z)
        commute &= all(parity(a.value & z) == 0 for a in code.stabilizer_x for z in code.logical_z)
        commute &= all(parity(b.value & x) == 0 for b in code.stabilizer_z for x in code.logical_x)
        r.add("commutation", "stabilisers commute with each other and with logicals", commute)
        dx, dz, d = css_distance(code)
        r.add("distance", "code distance is 2", d == 2, f"d_x={dx}, d_z={dz}")
        cert = phantom_certificate(code)
        r.add("certificate", f"{len(cert.entries)} transvection generators realised by permutations", all(e.verified for e in cert.entries))
        r.add("image", f"logical image group has order |GL_{k}(F_2)| = {gl_order(k)}", cert.image_order == gl_order(k),
              f"{cert.image_order} ({cert.image_order_method})")
        rng = np.random.default_rng(seed)
        gens = [e.permutation for e in cert.entries]
        words = [rng.integers(0, len(gens), size=6) for _ in range(50)]
        ok = True
        for w in words:
            sigma = gens[w[0]]
            g = cert.entries[w[0]].logical_action
            for i in w[1:]:
                sigma = sigma * gens[i]
                g = g * cert.entries[i].logical_action
            ok &= permutation_logical_action(code, sigma) == g
        r.add("composition", "products of certified permutations act as products of circuits (50 words)", ok)
        if n <= MAX_QUBITS:
            q = css_codewords(code)
            kl = knill_laflamme_check(q, 2)
            r.add("kl.distance", "state-level Knill-Laflamme distance is 2", kl.distance == 2, kl.distance)
            phase_ok = True
            for e in cert.entries:
                m = q.logical_matrix(lambda psi, s=e.permutation: apply_permutation(psi, s))
                phase_ok &= float(np.max(np.abs(m - cnot_circuit_unitary(e.logical_action)))) <= 1e-9
            r.add("state.phase", "permutations act on codewords as CNOT circuits with phase +1", phase_ok)

    return _timed(f"hypercube {k}", body)


def suite_classify(seed: int) -> VerificationReport:
    from .css import hypercube_code, same_code, uniqueness_classes, uniqueness_scan
    from .permgroup import alternating_group_generators
    from .reed_muller import classify_gl_invariant, invariant_codes, rm_family

    def body(r: VerificationReport) -> None:
        gl3 = classify_gl_invariant(3)
        r.add("gl3", "GL_3(F_2)-invariant codes of length 7 are the 6 punctured/shortened RM codes",
              gl3 == rm_family(3), [c.dim for c in gl3])
        a8 = invariant_codes(alternating_group_generators(8))
        r.add("a8", "A_8-invariant codes of length 8: zero, repetition, even weight, full", [c.dim for c in a8] == [0, 1, 7, 8],
              [c.dim for c in a8])
        r.add("closed.dual", "both lists are closed under duality", all(c.dual() in gl3 for c in gl3) and all(c.dual() in a8 for c in a8))
        scan = uniqueness_scan(3)
        classes = uniqueness_classes(3)
        h = hypercube_code(3)
        unique = len(classes) == 1 and any(same_code(c, h) for c in classes[0])
        r.add("unique", "the only [[7,3,d>1]] CSS code from invariant pairs is the hypercube code (up to X/Z exchange)",
              unique, f"{len(scan)} ordered pairs, {len(classes)} class")

    return _timed("classify", body)


def suite_nogo(seed: int) -> VerificationReport:
    from .css import stabilizer_nogo_8_4
    from .gl import gl_order
    from .permgroup import lagrange_embedding_obstruction

    def body(r: VerificationReport) -> None:
        rep = stabilizer_nogo_8_4()
        r.add("invariant.dims", "A_8-invariant code dimensions are {0, 1, 7, 8}", rep.invariant_dims == [0, 1, 7, 8], rep.invariant_dims)
        for c in rep.cases:
            r.add(f"r={c.r}", c.argument, c.excluded, c.detail)
        r.add("mu.gl3", "no faithful action of GL_3(F_2) on 6 points (168 does not divide 720)",
              not lagrange_embedding_obstruction(gl_order(3), 6))
        r.add("mu.a8", "no faithful action of A_8 on 7 points (20160 > 5040)", not lagrange_embedding_obstruction(gl_order(4), 7))

    return _timed("nogo", body)


# ---------------------------------------------------------------------------
# emitters


def emit_hypercube(k: int, fmt: str) -> str:
    from .css import certificate_json, hypercube_code, phantom_certificate

    code = hypercube_code(k)
    if fmt == "json":
        return json.dumps(certificate_json(code, phantom_certificate(code)), indent=2)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "index", "bits"])
    d = code.to_dict()
    for kind in ("stabilizer_x", "stabilizer_z", "logical_x", "logical_z"):
        for i, bits in enumerate(d[kind], start=1):
            w.writerow([kind, i, bits])
    return buf.getvalue()


def emit_pg832(fmt: str) -> str:
    from .pg_code import build_pg_code, to_dict

    data = to_dict(build_pg_code())
    if fmt == "json":
        return json.dumps(data, indent=2)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["logical", "bits", "re", "im"])
    for label, cw in zip(data["logical_labels"], data["codewords"]):
        for bits, (re, im) in sorted(cw.items()):
            w.writerow([label, bits, repr(re), repr(im)])
    return buf.getvalue()


def emit_tables() -> str:
    from .pg32 import table1_csv, table2_csv

    return table1_csv() + "\n" + table2_csv()


# ---------------------------------------------------------------------------
# argument handling


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 2 with usage, as argparse does, but to stderr only
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="phantomcodes", description="Construct and verify phantom quantum codes.")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("target", choices=["all", "pg832", "hypercube", "tables", "classify", "nogo"])
    v.add_argument("k", nargs="?", type=int)
    v.add_argument("--json", action="store_true", help="machine-readable report")

    e = sub.add_parser("emit-code", help="print code data")
    e.add_argument("family", choices=["pg832", "hypercube"])
    e.add_argument("k", nargs="?", type=int)
    e.add_argument("--format", choices=["json", "csv"], default="json")

    t = sub.add_parser("tables", help="print the PG(3,2) line and point tables")
    t.add_argument("--format", choices=["csv"], default="csv")

    d = sub.add_parser("distance", help="CSS distances")
    d.add_argument("family", choices=["hypercube"])
    d.add_argument("k", type=int)
    return p


def _need_k(parser: argparse.ArgumentParser, k: int | None, lo: int = 2) -> int:
    if k is None:
        parser.error("hypercube needs a dimension k")
    if k < lo:
        parser.error(f"k must be at least {lo}")
    return k


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            if args.target == "hypercube":
                k = _need_k(parser, args.k)
                reports = [suite_hypercube(k, args.seed)]
            elif args.k is not None:
                parser.error(f"verify {args.target} takes no dimension")
            elif args.target == "all":
                reports = [
                    suite_tables(args.seed),
                    suite_pg832(args.seed),
                    *(suite_hypercube(k, args.seed) for k in (3, 4, 5)),
                    suite_classify(args.seed),
                    suite_nogo(args.seed),
                ]
            else:
                reports = [{"pg832": suite_pg832, "tables": suite_tables, "classify": suite_classify, "nogo": suite_nogo}[args.target](args.seed)]
            if args.json:
                print(json.dumps([r.to_dict() for r in reports], indent=2))
            else:
                print("\n\n".join(r.render() for r in reports))
            return 0 if all(r.ok for r in reports) else 1
        if args.command == "emit-code":
            if args.family == "hypercube":
                print(emit_hypercube(_need_k(parser, args.k), args.format), end="" if args.format == "csv" else "\n")
            else:
                if args.k is not None:
                    parser.error("pg832 takes no dimension")
                print(emit_pg832(args.format), end="" if args.format == "csv" else "\n")
            return 0
        if args.command == "tables":
            print(emit_tables(), end="")
            return 0
        if args.command == "distance":
            from .css import css_distance, hypercube_code

            dx, dz, d = css_distance(hypercube_code(_need_k(parser, args.k)))
            print(f"d_x={dx} d_z={dz} d={d}")
            return 0
    except SystemExit as exc:
        return int(exc.code or 0)
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
