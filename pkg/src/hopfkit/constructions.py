"""AI-preserving constructions: dual, tensor product, bicrossed product
and the Drinfel'd double, together with companion lifting.

Basis conventions are fixed for stable serialization: the dual uses the
dual basis in source order, the tensor product uses row-major pairs,
and the double D(H) = H^(v cop) bowtie H indexes (dual, primal) pairs
row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .hopf import (HopfAlgebra, HopfMeta, antipode_inverse, embed_algebra,
                   verify_axioms)
from .linalg import cone, czero, dot, mat_mul, mat_transpose, mat_vec, sparsify


class ConstructionError(Exception):
    pass


class NotAMatchedPair(ConstructionError):
    pass


class CompatibilityFailure(Exception):
    pass


def _lcm(a, b):
    return a * b // gcd(a, b)


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis, with meta swapped."""
    n = h.dim
    cond = h.conductor
    mul = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (i, j), c in h.comul[k].items():
            mul[i][j][k] = c
    comul = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in h.mul[i][j].items():
                comul[k][(i, j)] = c
    antipode = mat_transpose(h.antipode)
    labels = [lbl + "*" for lbl in h.basis_labels]
    meta = HopfMeta(
        grouplikes=[list(chi) for chi in h.meta.characters],
        characters=[list(g) for g in h.meta.grouplikes],
        pointed=False,
        family="dual(%s)" % h.meta.family if h.meta.family else None,
        params=dict(h.meta.params))
    out = HopfAlgebra(n, labels, mul, comul, list(h.counit), list(h.unit),
                      antipode, cond, meta)
    report = verify_axioms(out)
    if not report.passed:
        raise ConstructionError("dual failed axioms: %r" % (report.failures,))
    return out


def companion_dual(sigma):
    """alpha -> alpha o sigma; a companion of the dual when sigma is one."""
    return mat_transpose(sigma)


def _kron(a, b):
    na, nb = len(a), len(b)
    out = [[None] * (na * nb) for _ in range(na * nb)]
    for ra in range(na):
        for rb in range(nb):
            row = out[ra * nb + rb]
            for ca in range(na):
                v = a[ra][ca]
                for cb in range(nb):
                    row[ca * nb + cb] = v * b[rb][cb]
    return out


def _kron_vec(u, v):
    return [x * y for x in u for y in v]


def tensor_product(a: HopfAlgebra, b: HopfAlgebra) -> HopfAlgebra:
    na, nb = a.dim, b.dim
    n = na * nb
    cond = _lcm(a.conductor, b.conductor)
    mul = [[{} for _ in range(n)] for _ in range(n)]
    for ia in range(na):
        for ja in range(na):
            rowa = a.mul[ia][ja]
            for ib in range(nb):
                for jb in range(nb):
                    rowb = b.mul[ib][jb]
                    tgt = mul[ia * nb + ib][ja * nb + jb]
                    for ka, ca in rowa.items():
                        for kb, cb in rowb.items():
                            tgt[ka * nb + kb] = ca * cb
    comul = []
    for ia in range(na):
        ta = a.comul[ia]
        for ib in range(nb):
            tb = b.comul[ib]
            t = {}
            for (p, q), c in ta.items():
                for (r, s), d in tb.items():
                    t[(p * nb + r, q * nb + s)] = c * d
            comul.append(t)
    unit = _kron_vec(a.unit, b.unit)
    counit = _kron_vec(a.counit, b.counit)
    antipode = _kron(a.antipode, b.antipode)
    labels = ["%s(x)%s" % (la, lb) for la in a.basis_labels for lb in b.basis_labels]
    meta = HopfMeta(
        grouplikes=[_kron_vec(g, k) for g in a.meta.grouplikes
                    for k in b.meta.grouplikes],
        characters=[_kron_vec(c, d) for c in a.meta.characters
                    for d in b.meta.characters],
        pointed=a.meta.pointed and b.meta.pointed,
        family="tensor", params={})
    return HopfAlgebra(n, labels, mul, comul, unit, counit, antipode, cond, meta)


def companion_tensor(sigma_a, sigma_b):
    return _kron(sigma_a, sigma_b)


@dataclass
class MatchedPairActions:
    """Exact tensors of the mutual actions for a pair (A, H).

    left[x][a] is the vector x |> a in A, right[x][a] the vector
    x <| a in H, for basis indices x of H and a of A.
    """
    left: list
    right: list


def _apply_left(actions, a_alg, xvec, avec):
    out = a_alg.zero_vec()
    for x, cx in enumerate(xvec):
        if cx.is_zero():
            continue
        for ai, ca in enumerate(avec):
            if ca.is_zero():
                continue
            for k, c in enumerate(actions.left[x][ai]):
                if not c.is_zero():
                    out[k] = out[k] + cx * ca * c
    return out


def _apply_right(actions, h_alg, xvec, avec):
    out = h_alg.zero_vec()
    for x, cx in enumerate(xvec):
        if cx.is_zero():
            continue
        for ai, ca in enumerate(avec):
            if ca.is_zero():
                continue
            for k, c in enumerate(actions.right[x][ai]):
                if not c.is_zero():
                    out[k] = out[k] + cx * ca * c
    return out


def bicrossed_product(a: HopfAlgebra, h: HopfAlgebra,
                      actions: MatchedPairActions) -> HopfAlgebra:
    """A bowtie H; the axioms are verified rather than the pair conditions."""
    na, nh = a.dim, h.dim
    n = na * nh
    cond = _lcm(a.conductor, h.conductor)
    if a.conductor != cond:
        a = embed_algebra(a, cond)
    if h.conductor != cond:
        h = embed_algebra(h, cond)

    # (b (x) y)(c (x) z) = sum b (y1 |> c1) (x) (y2 <| c2) z
    mul = [[{} for _ in range(n)] for _ in range(n)]
    for ib in range(na):
        for iy in range(nh):
            src = ib * nh + iy
            for ic in range(na):
                for iz in range(nh):
                    tgt = {}
                    for (y1, y2), cy in h.comul[iy].items():
                        for (c1, c2), cc in a.comul[ic].items():
                            f = cy * cc
                            mid_a = actions.left[y1][c1]
                            mid_h = actions.right[y2][c2]
                            for ka, va in enumerate(mid_a):
                                if va.is_zero():
                                    continue
                                left_a = a.mul[ib][ka]
                                for kh, vh in enumerate(mid_h):
                                    if vh.is_zero():
                                        continue
                                    right_h = h.mul[kh][iz]
                                    g = f * va * vh
                                    for pa, wa in left_a.items():
                                        for ph, wh in right_h.items():
                                            key = pa * nh + ph
                                            t = tgt.get(key)
                                            add = g * wa * wh
                                            t = add if t is None else t + add
                                            if t.is_zero():
                                                tgt.pop(key, None)
                                            else:
                                                tgt[key] = t
                    mul[src][ic * nh + iz] = tgt
    comul = []
    for ib in range(na):
        ta = a.comul[ib]
        for iy in range(nh):
            th = h.comul[iy]
            t = {}
            for (p, q), c in ta.items():
                for (r, s), d in th.items():
                    t[(p * nh + r, q * nh + s)] = c * d
            comul.append(t)
    unit = _kron_vec(a.unit, h.unit)
    counit = _kron_vec(a.counit, h.counit)

    # S(b (x) y) = (1 (x) S_H y)(S_A b (x) 1), via the product just built
    prod_alg = HopfAlgebra(
        n, ["%s|%s" % (la, lh) for la in a.basis_labels for lh in h.basis_labels],
        mul, comul, unit, counit,
        [[czero(cond)] * n for _ in range(n)], cond)
    ua = sparsify(a.unit)
    uh = sparsify(h.unit)
    antipode = [[czero(cond)] * n for _ in range(n)]
    for ib in range(na):
        sb = {k: c for k, c in enumerate([row[ib] for row in a.antipode])
              if not c.is_zero()}
        for iy in range(nh):
            sy = {k: c for k, c in enumerate([row[iy] for row in h.antipode])
                  if not c.is_zero()}
            left = {ka * nh + kh: ca * ch for ka, ca in ua.items()
                    for kh, ch in sy.items()}
            right = {ka * nh + kh: ca * ch for ka, ca in sb.items()
                     for kh, ch in uh.items()}
            col = prod_alg.mul_sparse(left, right)
            for k, c in col.items():
                antipode[k][ib * nh + iy] = c
    out = HopfAlgebra(n, prod_alg.basis_labels, mul, comul, unit, counit,
                      antipode, cond)
    report = verify_axioms(out)
    if not report.passed:
        raise NotAMatchedPair("bicrossed product failed axioms: %r"
                              % (report.failures,))
    return out


def matched_pair_companion(a: HopfAlgebra, h: HopfAlgebra,
                           actions: MatchedPairActions,
                           sigma_a, sigma_h, product: HopfAlgebra = None):
    """sigma(b (x) y) = sigma_A(b) (x) sigma_H(y), after the (a),(b) checks."""
    from .companion import verify_companion
    for x in range(h.dim):
        xs = mat_vec(sigma_h, h.basis_vec(x))
        for ai in range(a.dim):
            as_ = mat_vec(sigma_a, a.basis_vec(ai))
            lhs = mat_vec(sigma_a, actions.left[x][ai])
            rhs = _apply_left(actions, a, xs, as_)
            if lhs != rhs:
                raise CompatibilityFailure(
                    "sigma_A(x |> a) != sigma_H(x) |> sigma_A(a) at (%s, %s)"
                    % (h.basis_labels[x], a.basis_labels[ai]))
            lhs = mat_vec(sigma_h, actions.right[x][ai])
            rhs = _apply_right(actions, h, xs, as_)
            if lhs != rhs:
                raise CompatibilityFailure(
                    "sigma_H(x <| a) != sigma_H(x) <| sigma_A(a) at (%s, %s)"
                    % (h.basis_labels[x], a.basis_labels[ai]))
    sigma = _kron(sigma_a, sigma_h)
    if product is not None:
        ok, report = verify_companion(product, sigma)
        if not ok:
            raise CompatibilityFailure("lifted map fails on the product: %r"
                                       % (report,))
    return sigma


def _cop(h: HopfAlgebra) -> HopfAlgebra:
    """Opposite comultiplication; the antipode becomes its inverse."""
    comul = [{(j, i): c for (i, j), c in t.items()} for t in h.comul]
    antipode = antipode_inverse(h)
    meta = HopfMeta(grouplikes=[list(g) for g in h.meta.grouplikes],
                    characters=[list(c) for c in h.meta.characters],
                    pointed=h.meta.pointed, family=h.meta.family,
                    params=dict(h.meta.params))
    return HopfAlgebra(h.dim, list(h.basis_labels), h.mul, comul, list(h.unit),
                       list(h.counit), antipode, h.conductor, meta)


def double_actions(h: HopfAlgebra) -> MatchedPairActions:
    """The standard mutual actions between H and A = H^(v cop).

    (x |> alpha)(y) = sum alpha(S^-1(x2) y x1)
    x <| alpha      = sum alpha(S^-1(x3) x1) x2
    """
    n = h.dim
    cond = h.conductor
    s_inv = antipode_inverse(h)
    s_inv_cols = [[s_inv[r][c] for r in range(n)] for c in range(n)]
    left = [[None] * n for _ in range(n)]
    right = [[None] * n for _ in range(n)]
    for x in range(n):
        # triple coproduct terms (x1, x2, x3) with coefficients
        triples = {}
        for (p, q), c in h.comul[x].items():
            for (p1, p2), d in h.comul[p].items():
                key = (p1, p2, q)
                t = triples.get(key)
                t = c * d if t is None else t + c * d
                if t.is_zero():
                    triples.pop(key, None)
                else:
                    triples[key] = t
        for j in range(n):
            vec = [czero(cond)] * n
            for (p, q), c in h.comul[x].items():
                sx2 = sparsify(s_inv_cols[q])
                for y in range(n):
                    prod = h.mul_sparse(h.mul_sparse(sx2, {y: cone(cond)}),
                                        {p: cone(cond)})
                    coeff = prod.get(j)
                    if coeff is not None:
                        vec[y] = vec[y] + c * coeff
            left[x][j] = vec
            vec = [czero(cond)] * n
            for (x1, x2, x3), c in triples.items():
                prod = h.mul_sparse(sparsify(s_inv_cols[x3]), {x1: cone(cond)})
                coeff = prod.get(j)
                if coeff is not None:
                    vec[x2] = vec[x2] + c * coeff
            right[x][j] = vec
    return MatchedPairActions(left=left, right=right)


def drinfeld_double(h: HopfAlgebra) -> HopfAlgebra:
    a = _cop(dual_hopf(h))
    actions = double_actions(h)
    d = bicrossed_product(a, h, actions)
    d.meta.family = "double(%s)" % h.meta.family if h.meta.family else "double"
    return d


def companion_double(h: HopfAlgebra, sigma, double: HopfAlgebra = None):
    """sigma_D(alpha (x) x) = (alpha o sigma^-1) (x) sigma(x), verified."""
    from .companion import verify_companion
    from .linalg import mat_inverse
    sigma_a = mat_transpose(mat_inverse(sigma))
    sigma_d = _kron(sigma_a, sigma)
    if double is None:
        double = drinfeld_double(h)
    ok, report = verify_companion(double, sigma_d)
    if not ok:
        raise CompatibilityFailure(
            "lifted map is not a companion of the double: %r" % (report,))
    return sigma_d


def trivial_actions(a: HopfAlgebra, h: HopfAlgebra) -> MatchedPairActions:
    """x |> b = eps(x) b and x <| b = eps(b) x; gives the tensor product."""
    left = [[None] * a.dim for _ in range(h.dim)]
    right = [[None] * a.dim for _ in range(h.dim)]
    for x in range(h.dim):
        for b in range(a.dim):
            left[x][b] = [h.counit[x] if k == b else czero(a.conductor)
                          for k in range(a.dim)]
            right[x][b] = [a.counit[b] if k == x else czero(h.conductor)
                           for k in range(h.dim)]
    return MatchedPairActions(left=left, right=right)
