import pytest

from hopfkit.catalog import (InvalidPresentation, build_named, catalog_entries,
                             group_algebra_cyclic)
from hopfkit.cyclo import root_of_unity
from hopfkit.hopf import map_order, verify_axioms
from hopfkit.linalg import vec_eq


def test_all_entries_pass_axioms():
    entries = catalog_entries()
    assert len(entries) == 22
    for name, h in entries:
        assert verify_axioms(h).passed, name


def test_dimensions():
    dims = dict((name, h.dim) for name, h in catalog_entries())
    assert dims["Sweedler"] == 4
    for n in range(2, 7):
        assert dims["GroupAlgebraCyclic(%d)" % n] == n
        assert dims["Taft(%d)" % n] == n * n
    for n in (2, 3):
        assert dims["Radford(%d)" % n] == n ** 3
    for name in ("A_C2", "A1_C4", "A2_C4", "A3_C4", "A_C2xC2"):
        assert dims[name] == 8
    for name in ("A0", "A1", "B0", "B1"):
        assert dims[name] == 12


def test_s2_orders():
    h4 = build_named("Sweedler")
    s2 = h4.s2_matrix()
    ix = h4.basis_labels.index("x")
    assert s2[ix][ix] == -1  # S2(x) = -x
    assert map_order(s2, 10) == 2
    for n in (2, 3, 4):
        tn = build_named("Taft", n=n)
        assert map_order(tn.s2_matrix(), 10) == n
    c3 = build_named("GroupAlgebraCyclic", n=3)
    assert map_order(c3.s2_matrix(), 10) == 1


def test_group_algebra_commutative():
    c3 = group_algebra_cyclic(3)
    for i in range(3):
        for j in range(3):
            assert c3.mul[i][j] == c3.mul[j][i]


def test_radford2_is_a_c2():
    r2 = build_named("Radford", n=2)
    ac2 = build_named("A_C2")
    assert r2.dim == ac2.dim == 8
    assert map_order(r2.s2_matrix(), 100) == map_order(ac2.s2_matrix(), 100)


def test_a2_c4_relations():
    h = build_named("A2_C4")
    lab = h.basis_labels
    ix, ig2 = lab.index("x"), lab.index("g^2")
    # x^2 = g^2 - 1
    sq = h.dense(h.mul[ix][ix])
    expected = h.zero_vec()
    expected[ig2] = sq[ig2]
    assert sq[ig2] == 1 and sq[0] == -1
    # gx = -xg
    ig = lab.index("g")
    assert h.dense(h.mul[ig][ix]) == [-c for c in h.dense(h.mul[ix][ig])]


def test_a1_dim12_relations():
    h = build_named("A1")
    lab = h.basis_labels
    ix, ig2 = lab.index("x"), lab.index("g^2")
    sq = h.dense(h.mul[ix][ix])
    assert sq[0] == 1 and sq[ig2] == -1  # x^2 = 1 - g^2


def test_pointed_meta():
    for name, h in catalog_entries():
        assert h.meta.pointed
        assert len(h.meta.grouplikes) >= 1
        assert vec_eq(h.meta.grouplikes[0], h.unit)


def test_build_named_errors():
    with pytest.raises(KeyError):
        build_named("NoSuchFamily")
    with pytest.raises(Exception):
        build_named("Taft", n=1)


def test_conductor_has_needed_roots():
    for name, h in catalog_entries():
        assert h.conductor % 4 == 0
        root_of_unity(4, 1, h.conductor)
