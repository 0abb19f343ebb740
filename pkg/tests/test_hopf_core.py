import pytest

from hopfkit.catalog import build_named
from hopfkit.cyclo import root_of_unity
from hopfkit.hopf import (HopfAlgebra, NotGrouplike, ShapeError, antipode_inverse,
                          identity_mat, is_algebra_morphism, is_coalgebra_morphism,
                          is_grouplike, is_hopf_morphism, map_order,
                          primitive_space, verify_axioms)
from hopfkit.linalg import Subspace, cone, czero, mat_eq, mat_mul


def h4():
    return build_named("Sweedler")


def sigma_h4(h, scale):
    # g -> g, x -> scale*x, extended to the monomial basis
    m = identity_mat(h.dim, h.conductor)
    ix = h.basis_labels.index("x")
    igx = h.basis_labels.index("gx")
    m[ix][ix] = scale
    m[igx][igx] = scale
    return m


def test_axioms_group_algebra():
    assert verify_axioms(build_named("GroupAlgebraCyclic", n=2)).passed


def test_axioms_sweedler():
    assert verify_axioms(h4()).passed


def test_broken_antipode_reported():
    h = h4()
    broken = HopfAlgebra(h.dim, h.basis_labels, h.mul, h.comul, h.unit,
                         h.counit, identity_mat(h.dim, h.conductor),
                         h.conductor, h.meta)
    report = verify_axioms(broken)
    assert not report.passed
    assert "antipode" in report.failures
    assert any("x" in msg for msg in report.failures["antipode"])


def test_hopf_morphism_examples():
    h = h4()
    assert is_hopf_morphism(identity_mat(h.dim, h.conductor), h, h)
    i = root_of_unity(4)
    assert is_hopf_morphism(sigma_h4(h, i), h, h)
    # x -> 2x is still a Hopf endomorphism (x^2 = 0), just not a companion
    two = cone(h.conductor) + cone(h.conductor)
    sigma = sigma_h4(h, two)
    assert is_hopf_morphism(sigma, h, h)
    assert not mat_eq(mat_mul(sigma, sigma), h.s2_matrix())


def test_morphism_witnesses():
    h = h4()
    ix = h.basis_labels.index("x")
    igx = h.basis_labels.index("gx")
    # x -> 1 breaks x*x = 0
    f = identity_mat(h.dim, h.conductor)
    f[ix][ix] = czero(h.conductor)
    f[0][ix] = cone(h.conductor)
    ok, witness = is_algebra_morphism(f, h, h)
    assert not ok and witness == (ix, ix)
    # swapping x and gx breaks Delta but not multiplication
    f = identity_mat(h.dim, h.conductor)
    f[ix][ix] = czero(h.conductor)
    f[igx][igx] = czero(h.conductor)
    f[igx][ix] = cone(h.conductor)
    f[ix][igx] = cone(h.conductor)
    ok, _ = is_algebra_morphism(f, h, h)
    assert ok
    ok, witness = is_coalgebra_morphism(f, h, h)
    assert not ok and "Delta" in witness


def test_morphism_shape_error():
    h = h4()
    with pytest.raises(ShapeError):
        is_algebra_morphism(identity_mat(2), h, h)


def test_map_order():
    h = h4()
    assert map_order(identity_mat(h.dim, h.conductor), 10) == 1
    assert map_order(h.s2_matrix(), 10) == 2
    t3 = build_named("Taft", n=3)
    assert map_order(t3.s2_matrix(), 10) == 3


def test_antipode_inverse():
    c2 = build_named("GroupAlgebraCyclic", n=2)
    assert mat_eq(antipode_inverse(c2), c2.antipode)
    h = h4()
    inv = antipode_inverse(h)
    assert mat_eq(mat_mul(h.antipode, inv), identity_mat(h.dim, h.conductor))
    # S^-1(x) = -gx
    ix = h.basis_labels.index("x")
    col = [inv[r][ix] for r in range(h.dim)]
    assert col[h.basis_labels.index("gx")] == -1
    t3 = build_named("Taft", n=3)
    assert 2 * 3 % map_order(antipode_inverse(t3), 100) == 0


def test_grouplikes_and_primitives():
    h = h4()
    g = h.meta.grouplikes[1]
    assert is_grouplike(h, g)
    assert not is_grouplike(h, h.basis_vec(h.basis_labels.index("x")))
    p = primitive_space(h, g, h.unit)
    assert len(p) == 2
    sub = Subspace(p, h.dim, h.conductor)
    assert sub.contains(h.basis_vec(h.basis_labels.index("x")))
    one_minus_g = [a - b for a, b in zip(g, h.unit)]
    assert sub.contains(one_minus_g)

    c2 = build_named("GroupAlgebraCyclic", n=2)
    p = primitive_space(c2, c2.meta.grouplikes[1], c2.unit)
    assert len(p) == 1

    a2 = build_named("A2_C4")
    p = primitive_space(a2, a2.meta.grouplikes[1], a2.unit)
    assert Subspace(p, a2.dim, a2.conductor).contains(
        a2.basis_vec(a2.basis_labels.index("x")))

    with pytest.raises(NotGrouplike):
        primitive_space(h, h.basis_vec(1), h.unit)


def test_meta_skew_primitive_facts():
    # for (gamma, 1)-primitive x: S(x) = -x gamma^-1 and S2(x) = gamma x gamma^-1
    for name in ("Sweedler", "A2_C4", "B0"):
        h = build_named(name)
        s2 = h.s2_matrix()
        for x, gamma, delta in h.meta.skew_primitives:
            if delta != h.unit:
                continue
            gamma_inv = h.antipode_vec(gamma)
            assert h.antipode_vec(x) == h.mul_vec([-c for c in x], gamma_inv)
            s2x = [sum((row[j] * x[j] for j in range(h.dim)),
                       czero(h.conductor)) for row in s2]
            assert s2x == h.mul_vec(h.mul_vec(gamma, x), gamma_inv)
