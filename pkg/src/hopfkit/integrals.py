"""Integrals, modular element and modular function.

For a finite dimensional Hopf algebra there are, up to scalar, unique
left integrals lam in the dual and ell in the algebra, a grouplike
modular element a and a character alpha measuring non-unimodularity:

    sum x1 lam(x2) = lam(x) 1,   x ell = eps(x) ell,
    sum lam(x1) x2 = lam(x) a,   ell x = alpha(x) ell.

Everything here is an exact nullspace computation plus verification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloNum
from .hopf import HopfAlgebra, antipode_inverse, is_grouplike, map_order
from .linalg import (cone, czero, dot, mat_transpose, nullspace, sparsify,
                     vec_eq, vec_is_zero, vec_scale)


class IntegralSpaceError(Exception):
    pass


class NormalizationError(Exception):
    pass


class OrderBoundExceeded(Exception):
    pass


@dataclass
class IntegralData:
    lam: list           # left integral in the dual, dense functional
    ell: list           # left integral in H
    rho: list           # lam o S, right integral in the dual
    r: list             # S^-1(ell), right integral in H
    a: list             # modular element, grouplike
    alpha: list         # modular function, algebra character
    alpha_of_a: CycloNum
    normalized: bool = True   # lam(ell) = 1


def _left_integral_vectors(h: HopfAlgebra):
    """Nullspace of {x v = eps(x) v for all basis x}."""
    rows = []
    for i in range(h.dim):
        eps_i = h.counit[i]
        for k in range(h.dim):
            row = {}
            for j in range(h.dim):
                c = h.mul[i][j].get(k)
                if c is not None:
                    row[j] = row.get(j, czero(h.conductor)) + c
            if not eps_i.is_zero():
                row[k] = row.get(k, czero(h.conductor)) - eps_i
            row = {j: c for j, c in row.items() if not c.is_zero()}
            if row:
                rows.append(row)
    return nullspace(rows, h.dim, h.conductor)


def _left_cointegral_functionals(h: HopfAlgebra):
    """Nullspace of {sum x1 lam(x2) = lam(x) 1 for all basis x}."""
    rows = []
    for i in range(h.dim):
        for k in range(h.dim):
            row = {}
            for (p, q), c in h.comul[i].items():
                if p == k:
                    row[q] = row.get(q, czero(h.conductor)) + c
            if not h.unit[k].is_zero():
                row[i] = row.get(i, czero(h.conductor)) - h.unit[k]
            row = {j: c for j, c in row.items() if not c.is_zero()}
            if row:
                rows.append(row)
    return nullspace(rows, h.dim, h.conductor)


def compute_integrals(h: HopfAlgebra) -> IntegralData:
    cond = h.conductor
    ells = _left_integral_vectors(h)
    if len(ells) != 1:
        raise IntegralSpaceError(
            "left integral space has dimension %d, expected 1" % len(ells))
    lams = _left_cointegral_functionals(h)
    if len(lams) != 1:
        raise IntegralSpaceError(
            "left cointegral space has dimension %d, expected 1" % len(lams))
    lam, ell = lams[0], ells[0]

    # pin representatives: first nonzero coordinate of lam becomes 1,
    # then ell is rescaled so that lam(ell) = 1
    for c in lam:
        if not c.is_zero():
            lam = vec_scale(c.inverse(), lam)
            break
    pairing = dot(lam, ell)
    if pairing.is_zero():
        raise NormalizationError("lam(ell) = 0, cannot normalize")
    ell = vec_scale(pairing.inverse(), ell)

    # modular element from sum lam(x1) x2 = lam(x) a at one point, then checked
    a = None
    for i in range(h.dim):
        if lam[i].is_zero():
            continue
        v = h.zero_vec()
        for (p, q), c in h.comul[i].items():
            v[q] = v[q] + c * lam[p]
        a = vec_scale(lam[i].inverse(), v)
        break
    for i in range(h.dim):
        v = h.zero_vec()
        for (p, q), c in h.comul[i].items():
            v[q] = v[q] + c * lam[p]
        if not vec_eq(v, vec_scale(lam[i], a)):
            raise IntegralSpaceError("modular element relation fails at basis %d" % i)
    if not is_grouplike(h, a):
        raise IntegralSpaceError("modular element is not grouplike")

    # modular function from ell x = alpha(x) ell, read off at one coordinate
    k0 = next(k for k in range(h.dim) if not ell[k].is_zero())
    inv0 = ell[k0].inverse()
    sell = sparsify(ell)
    alpha = []
    for i in range(h.dim):
        prod = h.mul_sparse(sell, {i: cone(cond)})
        ai = prod.get(k0, czero(cond)) * inv0
        if not vec_eq(h.dense(prod), vec_scale(ai, ell)):
            raise IntegralSpaceError("modular function relation fails at basis %d" % i)
        alpha.append(ai)

    rho = [dot(lam, col) for col in mat_transpose(h.antipode)]   # lam o S
    s_inv = antipode_inverse(h)
    r = [dot(row, ell) for row in s_inv]

    alpha_of_a = dot(alpha, a)
    data = IntegralData(lam=lam, ell=ell, rho=rho, r=r, a=a, alpha=alpha,
                        alpha_of_a=alpha_of_a)
    if dot(rho, r) != 1:
        raise IntegralSpaceError("rho(r) != 1 after normalization")
    return data


def verify_identities(h: HopfAlgebra, data: IntegralData) -> dict:
    """Exact check of the antipode and eigenvalue identities; returns a report."""
    cond = h.conductor
    lam, ell, rho, r = data.lam, data.ell, data.rho, data.r
    a, alpha, aa = data.a, data.alpha, data.alpha_of_a
    report = {}
    sell = sparsify(ell)
    comul_ell = h.comul_vec(ell)

    # S(x) = sum ell1 lam(x ell2)
    ok = True
    for i in range(h.dim):
        v = h.zero_vec()
        for (p, q), c in comul_ell.items():
            coeff = czero(cond)
            for k, m in h.mul[i][q].items():
                coeff = coeff + m * lam[k]
            if not coeff.is_zero():
                v[p] = v[p] + c * coeff
        s_col = [h.antipode[row][i] for row in range(h.dim)]
        if not vec_eq(v, s_col):
            ok = False
            break
    report["S(x) = sum ell1 lam(x ell2)"] = ok

    # lam(S(x)) = lam(x a)
    sa = sparsify(a)
    ok = True
    for i in range(h.dim):
        lhs = dot(lam, [h.antipode[row][i] for row in range(h.dim)])
        xa = h.mul_sparse({i: cone(cond)}, sa)
        rhs = czero(cond)
        for k, c in xa.items():
            rhs = rhs + c * lam[k]
        if lhs != rhs:
            ok = False
            break
    report["lam(S(x)) = lam(x a)"] = ok

    # S(ell) = sum ell1 alpha(ell2)
    v = h.zero_vec()
    for (p, q), c in comul_ell.items():
        v[p] = v[p] + c * alpha[q]
    report["S(ell) = sum ell1 alpha(ell2)"] = vec_eq(v, h.antipode_vec(ell))

    s2 = h.s2_matrix()
    s2t = mat_transpose(s2)
    report["S2(ell) = alpha(a) ell"] = vec_eq(
        [dot(row, ell) for row in s2], vec_scale(aa, ell))
    report["S2(r) = alpha(a) r"] = vec_eq(
        [dot(row, r) for row in s2], vec_scale(aa, r))
    report["lam o S2 = alpha(a) lam"] = vec_eq(
        [dot(lam, col) for col in s2t], vec_scale(aa, lam))
    report["rho o S2 = alpha(a) rho"] = vec_eq(
        [dot(rho, col) for col in s2t], vec_scale(aa, rho))
    report["lam(S(ell)) = alpha(a)"] = dot(lam, h.antipode_vec(ell)) == aa
    report["lam(r) = 1"] = dot(lam, r) == 1
    report["rho(r) = 1"] = dot(rho, r) == 1

    # right integral properties of r and rho
    ok = True
    for i in range(h.dim):
        prod = h.dense(h.mul_sparse(sparsify(r), {i: cone(cond)}))
        if not vec_eq(prod, vec_scale(h.counit[i], r)):
            ok = False
            break
    report["r x = eps(x) r"] = ok
    ok = True
    for i in range(h.dim):
        v = h.zero_vec()
        for (p, q), c in h.comul[i].items():
            v[q] = v[q] + c * rho[p]
        if not vec_eq(v, vec_scale(rho[i], h.unit)):
            ok = False
            break
    report["sum rho(x1) x2 = rho(x) 1"] = ok
    return report


def _character_order(h: HopfAlgebra, chi, bound: int):
    """Order of a character under pointwise product on grouplikes.

    Characters form a group under the convolution product; for algebra
    characters convolution is pointwise composition with mul, and the
    identity is the counit.
    """
    cond = h.conductor
    current = list(chi)
    for k in range(1, bound + 1):
        if vec_eq(current, h.counit):
            return k
        # convolution chi * current: (chi * psi)(x) = sum chi(x1) psi(x2)
        nxt = []
        for i in range(h.dim):
            acc = czero(cond)
            for (p, q), c in h.comul[i].items():
                acc = acc + c * chi[p] * current[q]
            nxt.append(acc)
        current = nxt
    return None


def _grouplike_order(h: HopfAlgebra, g, bound: int):
    current = list(g)
    for k in range(1, bound + 1):
        if vec_eq(current, h.unit):
            return k
        current = h.dense(h.mul_sparse(sparsify(current), sparsify(g)))
    return None


def radford_bound_check(h: HopfAlgebra, data: IntegralData) -> bool:
    """ord(S2) | 2 ord(a) ord(alpha), and ord(alpha(a)) | gcd of both."""
    from math import gcd
    bound = 2 * h.dim * h.dim
    ord_a = _grouplike_order(h, data.a, bound)
    if ord_a is None:
        raise OrderBoundExceeded("modular element order exceeds %d" % bound)
    ord_alpha = _character_order(h, data.alpha, bound)
    if ord_alpha is None:
        raise OrderBoundExceeded("modular function order exceeds %d" % bound)
    ord_s2 = map_order(h.s2_matrix(), bound)
    ord_aa = data.alpha_of_a.mult_order(bound)
    if ord_aa is None:
        raise OrderBoundExceeded("alpha(a) order exceeds %d" % bound)
    if ord_aa > h.dim:
        return False
    if (2 * ord_a * ord_alpha) % ord_s2 != 0:
        return False
    if gcd(ord_alpha, ord_a) % ord_aa != 0:
        return False
    return True


def is_unimodular(h: HopfAlgebra, data: IntegralData) -> bool:
    return vec_eq(data.alpha, h.counit)
