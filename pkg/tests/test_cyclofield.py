import random

import pytest

from hopfkit.cyclo import (CycloNum, ConductorTooSmall, DivByZero,
                           NotRootOfUnity, cyclotomic_poly, euler_phi,
                           root_of_unity, sqrt_of_root_of_unity)


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_poly():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity():
    assert root_of_unity(1, 0) == 1
    i = root_of_unity(4)
    assert i * i == -1
    z6 = root_of_unity(6)
    assert z6 ** 3 == -1
    assert z6.mult_order(10) == 6
    zM = root_of_unity(12)
    assert zM.mult_order(100) == 12


def test_inverse_and_products():
    i = root_of_unity(4)
    assert i.inverse() == -i
    z3 = root_of_unity(3)
    assert (1 + z3) * (1 + z3 * z3) == 1
    with pytest.raises(DivByZero):
        CycloNum.zero(4).inverse()


def test_embed_compat():
    m1 = root_of_unity(2)
    z4 = root_of_unity(4)
    assert m1.embed(4) == z4 * z4
    assert m1 == CycloNum.from_rational(-1)


def test_mixed_conductor_ops():
    # binary ops auto-embed into the lcm conductor
    z3 = root_of_unity(3)
    i = root_of_unity(4)
    w = z3 * i
    assert w.conductor == 12
    assert w ** 12 == 1
    assert w.mult_order(20) == 12


def test_sqrt_of_root_of_unity():
    one = CycloNum.one(4)
    roots = sqrt_of_root_of_unity(one)
    cond = roots[0].conductor
    assert sorted(repr(w) for w in roots) == sorted(
        [repr(one.embed(cond)), repr((-one).embed(cond))])
    i = root_of_unity(4)
    roots = sqrt_of_root_of_unity(CycloNum.from_rational(-1, 4))
    assert set(map(repr, roots)) == {repr(i), repr(-i)}
    z3 = root_of_unity(3)
    for w in sqrt_of_root_of_unity(z3):
        assert w * w == z3
    with pytest.raises(NotRootOfUnity):
        sqrt_of_root_of_unity(CycloNum.from_rational(2))


def rand_elt(rng, conductor):
    phi = euler_phi(conductor)
    return CycloNum(conductor, [rng.randint(-3, 3) for _ in range(phi)])


def test_field_properties_seeded():
    rng = random.Random(20240817)
    for _ in range(60):
        m = rng.choice([3, 4, 5, 6, 8, 12])
        a, b, c = (rand_elt(rng, m) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1
        # conductor extension is a ring embedding
        big = 2 * m
        assert (a * b).embed(big) == a.embed(big) * b.embed(big)
        assert (a + b).embed(big) == a.embed(big) + b.embed(big)


def test_embed_requires_multiple():
    z3 = root_of_unity(3)
    with pytest.raises(ConductorTooSmall):
        z3.embed(4)
