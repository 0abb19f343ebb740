import json

import pytest

from hopfkit.catalog import build_named
from hopfkit.cyclo import CycloNum, root_of_unity
from hopfkit.serialize import (FormatError, algebra_from_json, algebra_to_json,
                               load_algebra, save_algebra, scalar_from_json,
                               scalar_to_json)


def test_scalar_round_trip():
    for c in (CycloNum.from_rational(0), CycloNum.from_rational(-7, 4),
              root_of_unity(12, 5), root_of_unity(8) / 3):
        assert scalar_from_json(scalar_to_json(c)) == c


def test_algebra_round_trip_exact(tmp_path):
    for name in ("GroupAlgebraCyclic", "Sweedler", "A2_C4"):
        h = build_named(name, n=3) if name == "GroupAlgebraCyclic" else build_named(name)
        path = str(tmp_path / (name + ".json"))
        save_algebra(h, path)
        h2 = load_algebra(path)
        assert h2.dim == h.dim and h2.conductor == h.conductor
        assert h2.basis_labels == h.basis_labels
        for i in range(h.dim):
            for j in range(h.dim):
                assert h2.mul[i][j] == h.mul[i][j]
            assert h2.comul[i] == h.comul[i]
            assert h2.antipode[i] == h.antipode[i]
        assert h2.unit == h.unit and h2.counit == h.counit
        assert len(h2.meta.grouplikes) == len(h.meta.grouplikes)
        # serializing again gives the identical JSON document
        assert algebra_to_json(h2) == algebra_to_json(h)


def test_load_reverifies_axioms(tmp_path):
    h = build_named("Sweedler")
    doc = algebra_to_json(h)
    doc["antipode"] = doc["antipode"][::-1]  # scramble S
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(FormatError):
        load_algebra(str(path))
    # --trust skips the axiom gate
    loaded = load_algebra(str(path), trust=True)
    assert loaded.dim == 4


def test_malformed_files(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("not json at all")
    with pytest.raises(FormatError):
        load_algebra(str(path))
    path.write_text(json.dumps({"format_version": 99}))
    with pytest.raises(FormatError):
        load_algebra(str(path))
    doc = algebra_to_json(build_named("Sweedler"))
    del doc["mul"]
    path.write_text(json.dumps(doc))
    with pytest.raises(FormatError):
        load_algebra(str(path))
