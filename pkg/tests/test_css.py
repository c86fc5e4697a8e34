from __future__ import annotations

import json

import numpy as np
import pytest

from phantomcodes.css import (
    CertificationError,
    CssViolationError,
    PauliLabel,
    css_distance,
    css_from_dict,
    css_from_pair,
    certificate_json,
    geometric_automorphism,
    hypercube_code,
    permutation_for_circuit,
    permutation_logical_action,
    phantom_certificate,
    qrm_code,
    same_code,
    stabilizer_nogo_8_4,
    symplectic_form,
    uniqueness_classes,
    uniqueness_scan,
)
from phantomcodes.gf2 import BitVector, ClassicalCode
from phantomcodes.gl import GlElement, gl4_words, gl_order, transvection
from phantomcodes.permgroup import Permutation, lagrange_embedding_obstruction
from phantomcodes.reed_muller import rm_code


def cube_vector(points, n=7):
    return sum(1 << (n - int(p, 2)) for p in points)


S1 = cube_vector(["100", "101", "110", "111"])
S2 = cube_vector(["010", "011", "111", "110"])
S3 = cube_vector(["001", "011", "111", "101"])
ZBAR = [cube_vector(["011", "111"]), cube_vector(["101", "111"]), cube_vector(["110", "111"])]


def test_pauli_labels():
    p = PauliLabel.from_str("XYZI")
    assert str(p) == "XYZI" and p.weight == 3
    assert not PauliLabel.from_str("XI").commutes_with(PauliLabel.from_str("ZI"))
    assert PauliLabel.from_str("XX").commutes_with(PauliLabel.from_str("ZZ"))
    assert symplectic_form(PauliLabel.from_str("Y"), PauliLabel.from_str("Z")) == 1
    with pytest.raises(ValueError):
        PauliLabel.from_str("XQ")


def test_hypercube_k3_stabilizers_and_logicals():
    c = hypercube_code(3)
    assert (c.n, c.k) == (7, 3)
    assert [str(s) for s in c.stabilizer_x] == ["1111111"]
    assert c.z_stabilizer_span == ClassicalCode(7, [S1, S2, S3])
    assert c.logical_x == [S1, S2, S3]
    assert c.logical_z == ZBAR
    assert c.pairing_matrix() == GlElement.identity(3).matrix


def test_stabilizers_commute_and_logicals_commute_with_stabilizers():
    for k in (3, 4, 5):
        c = hypercube_code(k)
        for a in c.x_stabilizer_span.rows:
            assert all(bin(a & b).count("1") % 2 == 0 for b in c.z_stabilizer_span.rows)
            assert all(bin(a & z).count("1") % 2 == 0 for z in c.logical_z)
        for b in c.z_stabilizer_span.rows:
            assert all(bin(b & x).count("1") % 2 == 0 for x in c.logical_x)


def test_hypercube_matches_canonical_qrm():
    for k in (3, 4, 5):
        assert same_code(hypercube_code(k), qrm_code(k - 1, 1, k))


def brute_distance(code):
    """Minimum weights by scanning every vector of F_2^n."""
    n = code.n
    dx = dz = n + 1
    for v in range(1, 1 << n):
        w = bin(v).count("1")
        if v in code.c_x and v not in code.c_z.dual():
            dx = min(dx, w)
        if v in code.c_z and v not in code.c_x.dual():
            dz = min(dz, w)
    return dx, dz, min(dx, dz)


@pytest.mark.parametrize("k", [3, 4])
def test_distance_against_brute_force(k):
    c = hypercube_code(k)
    assert css_distance(c) == brute_distance(c)
    assert css_distance(c)[2] == 2


def test_distance_k5_uses_weight_search():
    assert css_distance(hypercube_code(5)) == (2, 15, 2)


def test_qrm_mirror_has_trivial_z_distance():
    c = qrm_code(1, 2, 3)
    assert c.k == 3
    assert css_distance(c)[1] == 1


def test_css_violation_reports_witness():
    with pytest.raises(CssViolationError) as err:
        css_from_pair(rm_code(0, 3, "shortened"), rm_code(0, 3, "shortened"))
    assert err.value.witness.length == 7


def test_trivial_codes():
    full = ClassicalCode.full(3)
    assert css_from_pair(full, full).k == 3
    rep = ClassicalCode.repetition(3)
    empty = css_from_pair(rep, rep.dual())
    assert empty.k == 0
    with pytest.raises(ValueError):
        css_distance(empty)


def test_explicit_logicals_are_validated():
    c = hypercube_code(3)
    with pytest.raises(ValueError):
        css_from_pair(c.c_x, c.c_z, c.logical_x, c.logical_z[::-1])
    with pytest.raises(ValueError):
        css_from_pair(c.c_x, c.c_z, c.logical_x[:2], c.logical_z[:2])


def test_cnot21_face_reflection():
    c = hypercube_code(3)
    swap = Permutation.from_cycles("(5 7)(4 6)", 7)
    assert permutation_logical_action(c, swap) == transvection(1, 2, 3)
    x1, x2, x3 = c.logical_x
    imgs = [sum(1 << (7 - swap(p)) for p in range(1, 8) if (v >> (7 - p)) & 1) for v in (x1, x2, x3)]
    assert imgs[0] == x1 and imgs[2] == x3
    assert imgs[1] == cube_vector(["010", "011", "100", "101"])
    assert imgs[1] ^ x1 ^ x2 in c.x_stabilizer_span
    z = [sum(1 << (7 - swap(p)) for p in range(1, 8) if (v >> (7 - p)) & 1) for v in ZBAR]
    assert z[0] == cube_vector(["011", "101"]) == ZBAR[0] ^ ZBAR[1]
    assert z[1] == ZBAR[1]
    assert z[2] == cube_vector(["100", "101"]) == S1 ^ ZBAR[2]


def test_non_automorphism_is_rejected():
    c = hypercube_code(3)
    rej = permutation_logical_action(c, Permutation.from_cycles("(2 4)", 7))
    assert not rej
    assert rej.space in ("x", "z")
    assert rej.witness.value in c.z_stabilizer_span or rej.witness.value in c.x_stabilizer_span


def test_permutation_for_circuit_convention():
    c = hypercube_code(3)
    g = transvection(1, 2, 3)
    assert permutation_for_circuit(g) == Permutation.from_cycles("(5 7)(4 6)", 7)
    assert permutation_logical_action(c, geometric_automorphism(g)) != g


@pytest.mark.parametrize("k,order", [(3, 168), (4, 20160), (5, 9999360)])
def test_phantom_certificates(k, order):
    cert = phantom_certificate(hypercube_code(k))
    assert cert.verified
    assert cert.image_order == order == gl_order(k)
    assert len(cert.entries) == k * (k - 1)
    assert cert.image_order_method == ("closure" if k <= 4 else "formula")


def test_certificate_rejects_wrong_code():
    c = hypercube_code(3)
    other = css_from_pair(c.c_x, c.c_z, c.logical_x[::-1], c.logical_z[::-1])
    with pytest.raises(CertificationError):
        phantom_certificate(other)


def test_permutation_logical_action_is_homomorphism():
    c = hypercube_code(4)
    rng = np.random.default_rng(11)
    elems = list(gl4_words())
    for i, j in rng.integers(0, len(elems), size=(50, 2)):
        g, h = elems[i], elems[j]
        sg, sh = permutation_for_circuit(g), permutation_for_circuit(h)
        assert permutation_logical_action(c, sg) == g
        assert permutation_logical_action(c, sg * sh) == g * h


def test_json_roundtrip():
    c = hypercube_code(4)
    data = json.loads(json.dumps(certificate_json(c, phantom_certificate(c))))
    back = css_from_dict(data)
    assert same_code(back, c)
    assert back.logical_x == c.logical_x and back.logical_z == c.logical_z
    assert data["certificate_summary"]["image_order"] == 20160
    assert {e["generator"] for e in data["certificate"]} >= {"g12", "g21", "g34"}


def test_uniqueness_scan_k3():
    found = uniqueness_scan(3)
    assert len(found) == 2
    assert any(same_code(code, hypercube_code(3)) for _, _, code in found)
    classes = uniqueness_classes(3)
    assert len(classes) == 1
    assert any(same_code(code, hypercube_code(3)) for code in classes[0])


def test_nogo():
    rep = stabilizer_nogo_8_4()
    assert rep.impossible
    assert rep.invariant_dims == [0, 1, 7, 8]
    for case in rep.cases:
        if case.r <= 2:
            assert case.argument == "invariant projections" and case.rhs == 2 and case.lhs == 4 + case.r
        else:
            assert case.argument == "singleton"


def test_embedding_obstructions():
    assert lagrange_embedding_obstruction(168, 6) is False
    assert lagrange_embedding_obstruction(20160, 7) is False
