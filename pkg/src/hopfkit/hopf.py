"""Structure-constant representation of finite-dimensional Hopf algebras.

A HopfAlgebra stores the multiplication and comultiplication tensors,
unit/counit vectors and antipode matrix over a fixed cyclotomic
conductor, plus presentation metadata (grouplikes, skew-primitive
generators, characters).  All axiom and morphism checks here are exact
tensor evaluations on basis elements; failures are reported with basis
labels rather than raised.

Internally the tensors are kept sparse (dict of nonzeros) because every
algebra this toolkit targets is monomial-sparse; the public JSON format
is dense.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import CycloNum
from .linalg import (
    SingularMap,
    cone,
    czero,
    dot,
    identity_mat,
    mat_eq,
    mat_inverse,
    mat_mul,
    mat_vec,
    nullspace,
    vec_eq,
    vec_is_zero,
    zeros_vec,
)


class ShapeError(Exception):
    pass


class NotGrouplike(Exception):
    pass


@dataclass
class HopfMeta:
    grouplikes: list = field(default_factory=list)     # dense vectors
    skew_primitives: list = field(default_factory=list)  # (x_vec, g_vec, h_vec)
    characters: list = field(default_factory=list)     # dense functionals
    pointed: bool = False
    family: str | None = None
    params: dict = field(default_factory=dict)


class HopfAlgebra:
    """Basis-indexed Hopf algebra data; immutable after construction."""

    def __init__(self, dim, basis_labels, mul, comul, unit, counit, antipode,
                 conductor, meta=None):
        self.dim = dim
        self.basis_labels = list(basis_labels)
        self.mul = mul          # mul[i][j] = {k: coeff}
        self.comul = comul      # comul[k] = {(i, j): coeff}
        self.unit = unit        # dense vector
        self.counit = counit    # dense vector of counit values
        self.antipode = antipode  # dense matrix, rows
        self.conductor = conductor
        self.meta = meta if meta is not None else HopfMeta()
        if len(self.basis_labels) != dim or len(mul) != dim or len(comul) != dim:
            raise ShapeError("tensor shapes do not match dimension")

    # -- element operations -------------------------------------------

    def zero_vec(self):
        return zeros_vec(self.dim, self.conductor)

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = cone(self.conductor)
        return v

    def mul_basis(self, i, j):
        return self.mul[i][j]

    def mul_sparse(self, su: dict, sv: dict) -> dict:
        out = {}
        for i, a in su.items():
            for j, b in sv.items():
                row = self.mul[i][j]
                if not row:
                    continue
                ab = a * b
                if ab.is_zero():
                    continue
                for k, c in row.items():
                    t = out.get(k)
                    t = ab * c if t is None else t + ab * c
                    if t.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = t
        return out

    def mul_vec(self, u, v):
        su = {i: c for i, c in enumerate(u) if not c.is_zero()}
        sv = {j: c for j, c in enumerate(v) if not c.is_zero()}
        return self.dense(self.mul_sparse(su, sv))

    def dense(self, sparse: dict):
        out = self.zero_vec()
        for k, c in sparse.items():
            out[k] = c
        return out

    def comul_vec(self, v) -> dict:
        out = {}
        for k, c in enumerate(v):
            if c.is_zero():
                continue
            for ij, d in self.comul[k].items():
                t = out.get(ij)
                t = c * d if t is None else t + c * d
                if t.is_zero():
                    out.pop(ij, None)
                else:
                    out[ij] = t
        return out

    def tensor_mul(self, t1: dict, t2: dict) -> dict:
        """Multiply two elements of H (x) H given as {(i, j): coeff}."""
        out = {}
        for (a, b), c1 in t1.items():
            for (c, d), c2 in t2.items():
                left = self.mul[a][c]
                right = self.mul[b][d]
                if not left or not right:
                    continue
                cc = c1 * c2
                if cc.is_zero():
                    continue
                for k1, e1 in left.items():
                    for k2, e2 in right.items():
                        t = out.get((k1, k2))
                        add = cc * e1 * e2
                        t = add if t is None else t + add
                        if t.is_zero():
                            out.pop((k1, k2), None)
                        else:
                            out[(k1, k2)] = t
        return out

    def counit_of(self, v) -> CycloNum:
        return dot(self.counit, v)

    def antipode_vec(self, v):
        return mat_vec(self.antipode, v)

    def s2_matrix(self):
        return mat_mul(self.antipode, self.antipode)

    def label_of_vec(self, v) -> str:
        terms = []
        for i, c in enumerate(v):
            if c.is_zero():
                continue
            if c == 1:
                terms.append(self.basis_labels[i])
            else:
                terms.append("(%r)*%s" % (c, self.basis_labels[i]))
        return " + ".join(terms) if terms else "0"


# -- grouplikes and primitives ----------------------------------------


def is_grouplike(h: HopfAlgebra, v) -> bool:
    if vec_is_zero(v):
        return False
    dv = h.comul_vec(v)
    expected = {}
    for i, a in enumerate(v):
        if a.is_zero():
            continue
        for j, b in enumerate(v):
            if b.is_zero():
                continue
            expected[(i, j)] = a * b
    return _tensor_eq(dv, expected) and h.counit_of(v) == 1


def _tensor_eq(t1: dict, t2: dict) -> bool:
    for k, v in t1.items():
        w = t2.get(k)
        if w is None:
            if not v.is_zero():
                return False
        elif v != w:
            return False
    for k, w in t2.items():
        if k not in t1 and not w.is_zero():
            return False
    return True


def primitive_space(h: HopfAlgebra, g, gh):
    """Basis of P_{g,h} = {v : Delta(v) = v (x) g + h (x) v}, exact."""
    if not is_grouplike(h, g) or not is_grouplike(h, gh):
        raise NotGrouplike("primitive_space requires verified grouplikes")
    n = h.dim
    rows = {}

    def bump(ij, col, coeff):
        row = rows.setdefault(ij, {})
        t = row.get(col)
        t = coeff if t is None else t + coeff
        if t.is_zero():
            row.pop(col, None)
        else:
            row[col] = t

    for k in range(n):
        for ij, d in h.comul[k].items():
            bump(ij, k, d)
    for i in range(n):
        for j in range(n):
            if not g[j].is_zero():
                bump((i, j), i, -g[j])
            if not gh[i].is_zero():
                bump((i, j), j, -gh[i])
    return nullspace(rows.values(), n, h.conductor)


# -- axiom verification -----------------------------------------------


class AxiomReport:
    def __init__(self):
        self.failures = {}

    def fail(self, axiom: str, message: str):
        self.failures.setdefault(axiom, []).append(message)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {"passed": self.passed, "failures": self.failures}

    def __repr__(self):
        if self.passed:
            return "AxiomReport(all axioms pass)"
        return "AxiomReport(failures=%r)" % (self.failures,)


def verify_axioms(h: HopfAlgebra) -> AxiomReport:
    """Exact check of all Hopf axioms on basis elements; reports all failures."""
    report = AxiomReport()
    n = h.dim
    labels = h.basis_labels
    one = h.unit
    sone = {i: c for i, c in enumerate(one) if not c.is_zero()}

    # associativity and unit
    for i in range(n):
        for j in range(n):
            left = h.mul[i][j]
            for k in range(n):
                lhs = h.mul_sparse(left, {k: cone(h.conductor)})
                rhs = h.mul_sparse({i: cone(h.conductor)}, h.mul[j][k])
                if not _sparse_eq(lhs, rhs):
                    report.fail(
                        "associativity",
                        "(%s*%s)*%s != %s*(%s*%s)"
                        % (labels[i], labels[j], labels[k], labels[i], labels[j], labels[k]),
                    )
    for i in range(n):
        ei = {i: cone(h.conductor)}
        if not _sparse_eq(h.mul_sparse(sone, ei), ei):
            report.fail("unit", "1*%s != %s" % (labels[i], labels[i]))
        if not _sparse_eq(h.mul_sparse(ei, sone), ei):
            report.fail("unit", "%s*1 != %s" % (labels[i], labels[i]))

    # coassociativity and counit
    for k in range(n):
        dk = h.comul[k]
        lhs, rhs = {}, {}
        for (a, b), c in dk.items():
            for (p, q), d in h.comul[a].items():
                _bump(lhs, (p, q, b), c * d)
            for (p, q), d in h.comul[b].items():
                _bump(rhs, (a, p, q), c * d)
        if not _tensor_eq(lhs, rhs):
            report.fail("coassociativity", "on %s" % labels[k])
        left = h.zero_vec()
        right = h.zero_vec()
        for (a, b), c in dk.items():
            left[b] = left[b] + c * h.counit[a]
            right[a] = right[a] + c * h.counit[b]
        ek = h.basis_vec(k)
        if not vec_eq(left, ek):
            report.fail("counit", "(eps(x)id)Delta(%s) != %s" % (labels[k], labels[k]))
        if not vec_eq(right, ek):
            report.fail("counit", "(id(x)eps)Delta(%s) != %s" % (labels[k], labels[k]))

    # Delta and eps are algebra morphisms
    done = h.comul_vec(one)
    expected_one = {}
    for i, a in sone.items():
        for j, b in sone.items():
            expected_one[(i, j)] = a * b
    if not _tensor_eq(done, expected_one):
        report.fail("comul-algebra-morphism", "Delta(1) != 1(x)1")
    if h.counit_of(one) != 1:
        report.fail("counit-algebra-morphism", "eps(1) != 1")
    for i in range(n):
        for j in range(n):
            lhs = h.comul_vec(h.dense(h.mul[i][j]))
            rhs = h.tensor_mul(h.comul[i], h.comul[j])
            if not _tensor_eq(lhs, rhs):
                report.fail(
                    "comul-algebra-morphism",
                    "Delta(%s*%s) != Delta(%s)Delta(%s)"
                    % (labels[i], labels[j], labels[i], labels[j]),
                )
            eps_prod = h.counit_of(h.dense(h.mul[i][j]))
            if eps_prod != h.counit[i] * h.counit[j]:
                report.fail(
                    "counit-algebra-morphism",
                    "eps(%s*%s) != eps(%s)eps(%s)"
                    % (labels[i], labels[j], labels[i], labels[j]),
                )

    # antipode convolution axiom
    for k in range(n):
        left = {}
        right = {}
        for (a, b), c in h.comul[k].items():
            sa = {i: c * v for i, v in enumerate(h.antipode_vec(h.basis_vec(a))) if not v.is_zero()}
            for kk, vv in h.mul_sparse(sa, {b: cone(h.conductor)}).items():
                _bump(left, kk, vv)
            sb = {i: v for i, v in enumerate(h.antipode_vec(h.basis_vec(b))) if not v.is_zero()}
            for kk, vv in h.mul_sparse({a: c}, sb).items():
                _bump(right, kk, vv)
        target = {i: h.counit[k] * c for i, c in sone.items() if not (h.counit[k] * c).is_zero()}
        if not _sparse_eq(left, target):
            report.fail("antipode", "m(S(x)id)Delta(%s) != eps(%s)1" % (labels[k], labels[k]))
        if not _sparse_eq(right, target):
            report.fail("antipode", "m(id(x)S)Delta(%s) != eps(%s)1" % (labels[k], labels[k]))

    # metadata consistency
    for gi, g in enumerate(h.meta.grouplikes):
        if not is_grouplike(h, g):
            report.fail("meta-grouplike", "grouplike #%d (%s) fails Delta(g)=g(x)g, eps(g)=1"
                        % (gi, h.label_of_vec(g)))
    for x, g, gh in h.meta.skew_primitives:
        dv = h.comul_vec(x)
        expected = {}
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in enumerate(g):
                if not b.is_zero():
                    _bump(expected, (i, j), a * b)
        for i, a in enumerate(gh):
            if a.is_zero():
                continue
            for j, b in enumerate(x):
                if not b.is_zero():
                    _bump(expected, (i, j), a * b)
        expected = {k: v for k, v in expected.items() if not v.is_zero()}
        if not _tensor_eq(dv, expected):
            report.fail("meta-skew-primitive",
                        "Delta(%s) != %s(x)g + h(x)%s"
                        % (h.label_of_vec(x), h.label_of_vec(x), h.label_of_vec(x)))
    return report


def _bump(d, key, val):
    t = d.get(key)
    t = val if t is None else t + val
    if t.is_zero():
        d.pop(key, None)
    else:
        d[key] = t


def _sparse_eq(a: dict, b: dict) -> bool:
    return _tensor_eq(a, b)


# -- morphisms --------------------------------------------------------


def apply_map(f, v):
    return mat_vec(f, v)


def is_algebra_morphism(f, a: HopfAlgebra, b: HopfAlgebra):
    """(ok, witness) with witness the first failing basis index pair."""
    if len(f) != b.dim or len(f[0]) != a.dim:
        raise ShapeError("map shape does not match algebras")
    if not vec_eq(apply_map(f, a.unit), b.unit):
        return False, "unit"
    cols = [apply_map(f, a.basis_vec(j)) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = apply_map(f, a.dense(a.mul[i][j]))
            rhs = b.mul_vec(cols[i], cols[j])
            if not vec_eq(lhs, rhs):
                return False, (i, j)
    return True, None


def is_coalgebra_morphism(f, a: HopfAlgebra, b: HopfAlgebra):
    """(ok, witness) with witness the first failing basis index label."""
    if len(f) != b.dim or len(f[0]) != a.dim:
        raise ShapeError("map shape does not match algebras")
    cols = [apply_map(f, a.basis_vec(j)) for j in range(a.dim)]
    for k in range(a.dim):
        if b.counit_of(cols[k]) != a.counit[k]:
            return False, "eps(f(%s)) != eps(%s)" % (a.basis_labels[k], a.basis_labels[k])
        lhs = b.comul_vec(cols[k])
        rhs = {}
        for (i, j), c in a.comul[k].items():
            for p, x in enumerate(cols[i]):
                if x.is_zero():
                    continue
                for q, y in enumerate(cols[j]):
                    if not y.is_zero():
                        _bump(rhs, (p, q), c * x * y)
        if not _tensor_eq(lhs, rhs):
            return False, "Delta(f(%s)) != (f(x)f)Delta(%s)" % (
                a.basis_labels[k], a.basis_labels[k])
    return True, None


def is_hopf_morphism(f, a: HopfAlgebra, b: HopfAlgebra) -> bool:
    ok, _ = is_algebra_morphism(f, a, b)
    if not ok:
        return False
    ok, _ = is_coalgebra_morphism(f, a, b)
    if not ok:
        return False
    return mat_eq(mat_mul(f, a.antipode), mat_mul(b.antipode, f))


class NotFinite(Exception):
    pass


def map_order(f, bound: int) -> int:
    """Smallest k <= bound with f**k == id; raises NotFinite past the bound."""
    n = len(f)
    mat_inverse(f)  # raises SingularMap when not invertible
    ident = identity_mat(n)
    acc = f
    for k in range(1, bound + 1):
        if mat_eq(acc, ident):
            return k
        acc = mat_mul(acc, f)
    raise NotFinite("map has no order <= %d" % bound)


def antipode_inverse(h: HopfAlgebra):
    try:
        inv = mat_inverse(h.antipode)
    except SingularMap:
        raise SingularMap("antipode is singular; not a valid Hopf structure")
    assert mat_eq(mat_mul(h.antipode, inv), identity_mat(h.dim))
    return inv


def embed_algebra(h: HopfAlgebra, conductor: int) -> HopfAlgebra:
    """Same algebra with every scalar embedded in a larger cyclotomic field."""
    if conductor % h.conductor != 0:
        raise ValueError("new conductor must be a multiple of the current one")
    if conductor == h.conductor:
        return h

    def ev(v):
        return [c.embed(conductor) for c in v]

    def es(d):
        return {k: c.embed(conductor) for k, c in d.items()}

    mul = [[es(h.mul[i][j]) for j in range(h.dim)] for i in range(h.dim)]
    comul = [es(d) for d in h.comul]
    antipode = [ev(row) for row in h.antipode]
    meta = HopfMeta(
        grouplikes=[ev(g) for g in h.meta.grouplikes],
        skew_primitives=[(ev(x), ev(g), ev(d)) for x, g, d in h.meta.skew_primitives],
        characters=[ev(c) for c in h.meta.characters],
        pointed=h.meta.pointed, family=h.meta.family, params=dict(h.meta.params))
    return HopfAlgebra(h.dim, h.basis_labels, mul, comul, ev(h.unit), ev(h.counit),
                       antipode, conductor, meta)
