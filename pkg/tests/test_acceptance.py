"""Acceptance suite: one criterion per test, one PASS/FAIL line each.

The per-criterion lines are printed in the terminal summary (see
conftest.py) so they survive pytest's output capture.
"""

import functools
import random
import re

from hopfkit.catalog import build_named
from hopfkit.companion import (check_splitting_algebra, check_splitting_coalgebra,
                               decide_ai, eigendecompose_s2,
                               is_trivial_extension_over_fixed_space,
                               odd_order_companion, random_splitting,
                               s2_order_divides_grouplikes, sqrt_from_splitting,
                               verify_companion)
from hopfkit.constructions import (_cop, bicrossed_product, companion_double,
                                   companion_dual, companion_tensor,
                                   double_actions, drinfeld_double, dual_hopf,
                                   tensor_product)
from hopfkit.cyclo import CycloNum, root_of_unity
from hopfkit.hopf import is_hopf_morphism, verify_axioms
from hopfkit.integrals import compute_integrals, radford_bound_check, verify_identities
from hopfkit.linalg import (Subspace, dot, identity_mat, mat_eq, mat_mul,
                            vec_eq, vec_is_zero, vec_scale)

RESULTS = {}

CRITERIA = {
    1: "axiom suite on full catalog",
    2: "integral regressions for H4 and A2_C4",
    3: "identity suite and Radford divisibility on full catalog",
    4: "AI census with witnesses and NotAI certificates",
    5: "splitting biconditional on >=100 seeded random splittings",
    6: "odd-order companion shortcut",
    7: "constructions: double, dual/tensor lifts, bicrossed agreement",
    8: "trivial-extension predicate",
    9: "ord(S^2) divides |G(H)| on pointed entries",
}


def criterion(n):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            RESULTS[n] = "FAIL"
            fn(*args, **kwargs)
            RESULTS[n] = "PASS"
        return wrapper
    return deco


def same_up_to_scalar(v, w):
    pivot = next((k for k, c in enumerate(w) if not c.is_zero()), None)
    if pivot is None:
        return vec_is_zero(v)
    if v[pivot].is_zero():
        return False
    return vec_eq(v, vec_scale(v[pivot] / w[pivot], w))


def named_vec(h, terms):
    v = h.zero_vec()
    for label, coeff in terms:
        v[h.basis_labels.index(label)] = CycloNum.from_rational(coeff, h.conductor)
    return v


def monomial_scaling(h, gen_scales):
    """Diagonal map scaling each basis monomial by prod scale^degree."""
    mat = identity_mat(h.dim, h.conductor)
    for k, label in enumerate(h.basis_labels):
        factor = CycloNum.one(h.conductor)
        for gen, scale in gen_scales.items():
            m = re.search(r"%s(\^(\d+))?" % gen, label)
            deg = int(m.group(2)) if m and m.group(2) else (1 if m else 0)
            factor = factor * scale ** deg
        mat[k][k] = factor
    return mat


@criterion(1)
def test_criterion_1_axioms(catalog):
    assert len(catalog) == 22
    for name, h in catalog:
        assert verify_axioms(h).passed, name


@criterion(2)
def test_criterion_2_integral_regressions():
    h = build_named("Sweedler")
    data = compute_integrals(h)
    assert same_up_to_scalar(data.ell, named_vec(h, [("x", 1), ("gx", 1)]))
    assert same_up_to_scalar(data.r, named_vec(h, [("x", 1), ("gx", -1)]))
    assert same_up_to_scalar(data.lam, named_vec(h, [("x", 1)]))
    assert same_up_to_scalar(data.rho, named_vec(h, [("gx", -1)]))
    assert vec_eq(data.a, named_vec(h, [("g", 1)]))
    assert data.alpha[h.basis_labels.index("g")] == -1
    assert dot(data.lam, data.ell) == 1

    h = build_named("A2_C4")
    data = compute_integrals(h)
    assert same_up_to_scalar(
        data.ell, named_vec(h, [("x", 1), ("gx", 1), ("g^2x", 1), ("g^3x", 1)]))
    assert same_up_to_scalar(
        data.r, named_vec(h, [("x", -1), ("gx", 1), ("g^2x", -1), ("g^3x", 1)]))
    assert same_up_to_scalar(data.lam, named_vec(h, [("x", 1)]))
    assert same_up_to_scalar(data.rho, named_vec(h, [("g^3x", 1)]))
    assert vec_eq(data.a, named_vec(h, [("g", 1)]))
    assert data.alpha[h.basis_labels.index("g")] == -1


@criterion(3)
def test_criterion_3_identities(catalog):
    for name, h in catalog:
        data = compute_integrals(h)
        report = verify_identities(h, data)
        bad = [k for k, ok in report.items() if not ok]
        assert not bad, "%s: %s" % (name, bad)
        assert radford_bound_check(h, data), name


@criterion(4)
def test_criterion_4_ai_census(catalog):
    expected_not_ai = {"A2_C4", "A1", "dual(A2_C4)", "dual(A1)"}
    entries = list(catalog)
    entries += [("dual(A2_C4)", dual_hopf(build_named("A2_C4"))),
                ("dual(A1)", dual_hopf(build_named("A1")))]
    for name, h in entries:
        v = decide_ai(h)
        assert v.tag != "Inconclusive", name
        if name in expected_not_ai:
            assert v.tag == "NotAI", name
            assert v.certificate, name
            assert all(entry["residual"] == 0 for entry in v.certificate), name
            assert any("not preserved" in entry["violation"]
                       for entry in v.certificate), name
        else:
            assert v.tag == "Witness", name
            sigma, r_sigma = v.witness
            ok, report = verify_companion(h, sigma)
            assert ok, (name, report)

    # the specific named witnesses
    h4 = build_named("Sweedler")
    i = root_of_unity(4, 1, h4.conductor)
    for s in (i, -i):
        ok, _ = verify_companion(h4, monomial_scaling(h4, {"x": s}))
        assert ok, "H4 companion sigma(x) = %r" % s
    for n in range(2, 7):
        tn = build_named("Taft", n=n)
        nu = root_of_unity(2 * n, 1, tn.conductor)
        for s in (nu, -nu):
            ok, _ = verify_companion(tn, monomial_scaling(tn, {"x": s}))
            assert ok, "Taft(%d) companion sigma(x) = %r" % (n, s)
    for n in (2, 3):
        rad = build_named("Radford", n=n)
        nu = root_of_unity(2 * n, 1, rad.conductor)
        count = 0
        for s1 in (1, -1):
            for s2 in (1, -1):
                sigma = monomial_scaling(
                    rad, {"x": s1 * nu.inverse(), "y": s2 * nu})
                ok, _ = verify_companion(rad, sigma)
                count += ok
        assert count == 4, "Radford(%d): %d of 4 companions verified" % (n, count)


@criterion(5)
def test_criterion_5_splitting_biconditional(catalog):
    rng = random.Random(20250824)
    for name, h in catalog:
        e = eigendecompose_s2(h)
        for _ in range(100):
            s = random_splitting(e, rng)
            sigma = sqrt_from_splitting(e, s)
            assert mat_eq(mat_mul(sigma, sigma), h.s2_matrix()), name
            ok_a, _ = check_splitting_algebra(h, e, s)
            ok_c, _ = check_splitting_coalgebra(h, e, s)
            assert is_hopf_morphism(sigma, h, h) == (ok_a and ok_c), name


@criterion(6)
def test_criterion_6_odd_order_shortcut():
    for name, kw in [("Radford", {"n": 3}), ("Taft", {"n": 3}), ("Taft", {"n": 5})]:
        h = build_named(name, **kw)
        sigma = odd_order_companion(h, eigendecompose_s2(h))
        assert sigma is not None, name
        assert mat_eq(mat_mul(sigma, sigma), h.s2_matrix()), name
    for name, kw in [("Sweedler", {}), ("Taft", {"n": 4})]:
        h = build_named(name, **kw)
        assert odd_order_companion(h, eigendecompose_s2(h)) is None, name


@criterion(7)
def test_criterion_7_constructions():
    h4 = build_named("Sweedler")
    sigma4, _ = decide_ai(h4).witness
    d4 = drinfeld_double(h4)
    assert d4.dim == 16
    assert verify_axioms(d4).passed
    ok, report = verify_companion(d4, companion_double(h4, sigma4, d4))
    assert ok, report

    t3 = build_named("Taft", n=3)
    sigma3, _ = decide_ai(t3).witness
    for h, sigma in ((h4, sigma4), (t3, sigma3)):
        ok, report = verify_companion(dual_hopf(h), companion_dual(sigma))
        assert ok, report
        t = tensor_product(h, h)
        ok, report = verify_companion(t, companion_tensor(sigma, sigma))
        assert ok, report

    a = _cop(dual_hopf(h4))
    d_bi = bicrossed_product(a, h4, double_actions(h4))
    assert all(d_bi.mul[i][j] == d4.mul[i][j]
               for i in range(16) for j in range(16))
    assert all(d_bi.comul[k] == d4.comul[k] for k in range(16))
    assert all(d_bi.antipode[i][j] == d4.antipode[i][j]
               for i in range(16) for j in range(16))
    assert d_bi.unit == d4.unit and d_bi.counit == d4.counit


@criterion(8)
def test_criterion_8_trivial_extension():
    h4 = build_named("Sweedler")
    ok, (k_basis, m_basis) = is_trivial_extension_over_fixed_space(h4)
    assert ok
    k_sub = Subspace(k_basis, h4.dim, h4.conductor)
    assert k_sub.contains(h4.unit)
    assert k_sub.contains(named_vec(h4, [("g", 1)]))
    m_sub = Subspace(m_basis, h4.dim, h4.conductor)
    assert m_sub.contains(named_vec(h4, [("x", 1)]))
    assert m_sub.contains(named_vec(h4, [("gx", 1)]))
    for name in ("A1_C4", "A3_C4", "A_C2xC2", "A0", "B0", "B1"):
        ok, _ = is_trivial_extension_over_fixed_space(build_named(name))
        assert ok, name
    for name in ("A2_C4", "A1"):
        ok, why = is_trivial_extension_over_fixed_space(build_named(name))
        assert not ok, name
        assert "M^2" in why, (name, why)


@criterion(9)
def test_criterion_9_pointed_divisibility(catalog):
    for name, h in catalog:
        assert h.meta.pointed, name
        assert s2_order_divides_grouplikes(h), name
