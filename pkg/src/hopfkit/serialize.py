"""JSON algebra files.

Scalars serialize as {"conductor": M, "coeffs": [[num, den], ...]} in
the power basis, so the round trip is exact.  Tensors are stored dense;
the format is meant to be human-diffable, not compact.
"""

from __future__ import annotations

import json

from .cyclo import CycloNum, euler_phi
from .hopf import HopfAlgebra, HopfMeta, verify_axioms

FORMAT_VERSION = 1


class FormatError(Exception):
    pass


def scalar_to_json(c: CycloNum):
    return {"conductor": c.conductor,
            "coeffs": [[int(q.numerator), int(q.denominator)]
                       for q in c.coeffs]}


def scalar_from_json(obj) -> CycloNum:
    try:
        cond = int(obj["conductor"])
        coeffs = obj["coeffs"]
    except (KeyError, TypeError):
        raise FormatError("bad scalar payload: %r" % (obj,))
    if len(coeffs) != euler_phi(cond):
        raise FormatError("scalar coeff length does not match conductor %d" % cond)
    from .cyclo import Q
    return CycloNum(cond, [Q(int(n), int(d)) for n, d in coeffs])


def _vec_to_json(v):
    return [scalar_to_json(c) for c in v]


def _vec_from_json(obj, n, conductor):
    if len(obj) != n:
        raise FormatError("vector length %d, expected %d" % (len(obj), n))
    return [scalar_from_json(c).embed(conductor) for c in obj]


def algebra_to_json(h: HopfAlgebra) -> dict:
    n = h.dim
    return {
        "format_version": FORMAT_VERSION,
        "conductor": h.conductor,
        "dim": n,
        "basis_labels": list(h.basis_labels),
        "mul": [[_vec_to_json(h.dense(h.mul[i][j])) for j in range(n)]
                for i in range(n)],
        "comul": [[_vec_to_json([h.comul[k].get((i, j),
                                                CycloNum.zero(h.conductor))
                                 for j in range(n)])
                   for i in range(n)] for k in range(n)],
        "unit": _vec_to_json(h.unit),
        "counit": _vec_to_json(h.counit),
        "antipode": [_vec_to_json(row) for row in h.antipode],
        "meta": {
            "grouplikes": [_vec_to_json(g) for g in h.meta.grouplikes],
            "skew_primitives": [[_vec_to_json(x), _vec_to_json(g), _vec_to_json(d)]
                                for x, g, d in h.meta.skew_primitives],
            "characters": [_vec_to_json(c) for c in h.meta.characters],
            "pointed": h.meta.pointed,
            "family": h.meta.family,
            "params": {k: v for k, v in h.meta.params.items()
                       if isinstance(v, (int, str, bool))},
        },
    }


def algebra_from_json(obj, trust: bool = False) -> HopfAlgebra:
    try:
        if obj["format_version"] != FORMAT_VERSION:
            raise FormatError("unsupported format_version %r" % obj["format_version"])
        cond = int(obj["conductor"])
        n = int(obj["dim"])
        labels = list(obj["basis_labels"])
        mul = [[{k: c for k, c in
                 enumerate(_vec_from_json(obj["mul"][i][j], n, cond))
                 if not c.is_zero()} for j in range(n)] for i in range(n)]
        comul = []
        for k in range(n):
            t = {}
            for i in range(n):
                row = _vec_from_json(obj["comul"][k][i], n, cond)
                for j, c in enumerate(row):
                    if not c.is_zero():
                        t[(i, j)] = c
            comul.append(t)
        unit = _vec_from_json(obj["unit"], n, cond)
        counit = _vec_from_json(obj["counit"], n, cond)
        antipode = [_vec_from_json(row, n, cond) for row in obj["antipode"]]
        m = obj.get("meta", {})
        meta = HopfMeta(
            grouplikes=[_vec_from_json(g, n, cond) for g in m.get("grouplikes", [])],
            skew_primitives=[tuple(_vec_from_json(v, n, cond) for v in trip)
                             for trip in m.get("skew_primitives", [])],
            characters=[_vec_from_json(c, n, cond) for c in m.get("characters", [])],
            pointed=bool(m.get("pointed", False)),
            family=m.get("family"),
            params=dict(m.get("params", {})))
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise FormatError("malformed algebra file: %s" % exc)
    h = HopfAlgebra(n, labels, mul, comul, unit, counit, antipode, cond, meta)
    if not trust:
        report = verify_axioms(h)
        if not report.passed:
            raise FormatError("loaded algebra fails axioms: %r" % (report.failures,))
    return h


def save_algebra(h: HopfAlgebra, path: str):
    with open(path, "w") as fh:
        json.dump(algebra_to_json(h), fh)
        fh.write("\n")


def load_algebra(path: str, trust: bool = False) -> HopfAlgebra:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError("not valid JSON: %s" % exc)
    return algebra_from_json(obj, trust=trust)
