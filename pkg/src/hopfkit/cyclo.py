"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are rational-coefficient vectors in the power basis of
Q[t]/Phi_M(t), where Phi_M is the M-th cyclotomic polynomial.  All
operations are exact; there is no floating point anywhere.  Binary
operations between elements of different conductors embed both into the
lcm conductor, which is a ring embedding, so mixed-conductor expressions
are well defined.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

QZERO = Q(0)
QONE = Q(1)


class CycloError(Exception):
    pass


class ConductorTooSmall(CycloError):
    pass


class DivByZero(CycloError):
    pass


class NotRootOfUnity(CycloError):
    pass


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num, den):
    # exact division of integer polynomials (den monic), returns quotient
    num = list(num)
    deg_d = len(den) - 1
    quot = [0] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c:
            quot[i - deg_d] = c
            for j, d in enumerate(den):
                num[i - deg_d + j] -= c * d
    assert all(c == 0 for c in num[:deg_d]), "non-exact polynomial division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int):
    """Coefficients of Phi_m, lowest degree first, as plain ints."""
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]  # t^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod_int(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(m: int):
    """t^k mod Phi_m for k in [phi(m), 2*phi(m)-2], as tuples of Q."""
    phi = euler_phi(m)
    mod = cyclotomic_poly(m)
    rows = []
    cur = [QZERO] * phi
    # start with t^phi = -(lower coefficients), Phi_m is monic
    cur = [Q(-mod[j]) for j in range(phi)]
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        top = cur[phi - 1]
        nxt = [QZERO] + cur[: phi - 1]
        if top:
            for j in range(phi):
                nxt[j] += top * Q(-mod[j])
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


@lru_cache(maxsize=None)
def _embed_table(m: int, n: int):
    """Images of the power-basis vectors of Q(zeta_m) inside Q(zeta_n)."""
    assert n % m == 0
    phi_m = euler_phi(m)
    step = n // m
    rows = []
    for k in range(phi_m):
        rows.append(_reduce_power(n, k * step))
    return tuple(rows)


def _reduce_power(m: int, k: int):
    """Coefficients of t^k mod Phi_m."""
    phi = euler_phi(m)
    k %= m
    if k < phi:
        coeffs = [QZERO] * phi
        coeffs[k] = QONE
        return tuple(coeffs)
    table = _reduction_table(m)
    cur = list(table[0])
    for _ in range(k - phi):
        top = cur[phi - 1]
        cur = [QZERO] + cur[: phi - 1]
        if top:
            row0 = table[0]
            for j in range(phi):
                cur[j] += top * row0[j]
    return tuple(cur)


class CycloNum:
    """An element of Q(zeta_M) in the power basis modulo Phi_M."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        self.conductor = conductor
        coeffs = tuple(Q(c) for c in coeffs)
        assert len(coeffs) == euler_phi(conductor)
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(value, conductor: int = 1) -> "CycloNum":
        phi = euler_phi(conductor)
        coeffs = [QZERO] * phi
        coeffs[0] = Q(value)
        return CycloNum(conductor, coeffs)

    @staticmethod
    def zero(conductor: int = 1) -> "CycloNum":
        return CycloNum.from_rational(0, conductor)

    @staticmethod
    def one(conductor: int = 1) -> "CycloNum":
        return CycloNum.from_rational(1, conductor)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise CycloError("not a rational number: %r" % (self,))
        return self.coeffs[0]

    def embed(self, conductor: int) -> "CycloNum":
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ConductorTooSmall(
                "cannot embed conductor %d into %d" % (self.conductor, conductor)
            )
        table = _embed_table(self.conductor, conductor)
        phi = euler_phi(conductor)
        out = [QZERO] * phi
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[k]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloNum(conductor, out)

    def _unify(self, other: "CycloNum"):
        if self.conductor == other.conductor:
            return self, other
        m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.conductor)
        a, b = self._unify(other)
        return CycloNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other, self.conductor)
        a, b = self._unify(other)
        return CycloNum(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return _coerce(other, self.conductor).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other, self.conductor)
        a, b = self._unify(other)
        phi = len(a.coeffs)
        if b.is_rational():
            c = b.coeffs[0]
            if c == 0:
                return CycloNum(a.conductor, (QZERO,) * phi)
            return CycloNum(a.conductor, [x * c for x in a.coeffs])
        if a.is_rational():
            c = a.coeffs[0]
            if c == 0:
                return CycloNum(a.conductor, (QZERO,) * phi)
            return CycloNum(a.conductor, [x * c for x in b.coeffs])
        prod = [QZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        if phi > 1:
            table = _reduction_table(a.conductor)
            for k in range(phi, 2 * phi - 1):
                c = prod[k]
                if c:
                    row = table[k - phi]
                    for j in range(phi):
                        if row[j]:
                            out[j] += c * row[j]
        else:
            # conductor 1 or 2: t is congruent to +-1
            t_val = QONE if a.conductor == 1 else -QONE
            acc = out[0]
            p = t_val
            for k in range(phi, 2 * phi - 1):
                acc += prod[k] * p
            out[0] = acc
        return CycloNum(a.conductor, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise DivByZero("division by zero in Q(zeta_%d)" % self.conductor)
        if self.is_rational():
            return CycloNum.from_rational(QONE / self.coeffs[0], self.conductor)
        # extended Euclid on (self, Phi_M) over Q[t]
        mod = [Q(c) for c in cyclotomic_poly(self.conductor)]
        a = list(self.coeffs)
        r0, r1 = mod, a
        s0, s1 = [QZERO], [QONE]
        while any(c != 0 for c in r1):
            q, rem = _poly_divmod_q(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = _poly_trim(r0)
        if len(lead) != 1:
            raise CycloError("Phi_M not coprime with element; invalid state")
        inv_lead = QONE / lead[0]
        phi = len(self.coeffs)
        coeffs = [QZERO] * phi
        for k, c in enumerate(s0):
            if c:
                red = _reduce_power(self.conductor, k)
                for j in range(phi):
                    coeffs[j] += c * inv_lead * red[j]
        return CycloNum(self.conductor, coeffs)

    def __truediv__(self, other):
        other = _coerce(other, self.conductor)
        a, b = self._unify(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.conductor).__truediv__(self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNum.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Q().__class__)):
            other = _coerce(other, self.conductor)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._unify(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        # hash in a canonical (minimal would be better, lcm is stable enough)
        return hash((self.conductor, self.coeffs))

    # -- orders and roots ---------------------------------------------

    def mult_order(self, bound: int):
        """Smallest k <= bound with self**k == 1, else None."""
        if self.is_zero():
            return None
        acc = self
        one = CycloNum.one(self.conductor)
        for k in range(1, bound + 1):
            if acc == one:
                return k
            acc = acc * self
        return None

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                terms.append("%s*z%d^%d" % (c, self.conductor, k))
        return "Cyclo(%s)" % (" + ".join(terms) if terms else "0")


def _coerce(value, conductor: int) -> CycloNum:
    if isinstance(value, CycloNum):
        return value
    return CycloNum.from_rational(value, conductor)


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod_q(num, den):
    num = list(num)
    den = _poly_trim(list(den))
    deg_d = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < deg_d:
        return [QZERO], num
    quot = [QZERO] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i] / lead
        if c:
            quot[i - deg_d] = c
            for j, d in enumerate(den):
                num[i - deg_d + j] -= c * d
    return quot, _poly_trim(num[:deg_d] if deg_d else [QZERO])


def _poly_mul(a, b):
    out = [QZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [QZERO] * (n - len(a))
    b = list(b) + [QZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def root_of_unity(order: int, power: int = 1, conductor: int | None = None) -> CycloNum:
    """zeta_order**power, represented in the given (or minimal) conductor."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if conductor is None:
        conductor = order
    if conductor % order != 0:
        raise ConductorTooSmall(
            "conductor %d is not divisible by root order %d" % (conductor, order)
        )
    k = (power % order) * (conductor // order)
    return CycloNum(conductor, _reduce_power(conductor, k))


def sqrt_of_root_of_unity(z: CycloNum, bound: int = 256):
    """Both square roots of a root of unity z, as {w, -w} with w**2 == z.

    The ambient conductor is extended to lcm(conductor, 2k) where k is the
    multiplicative order of z.  Raises NotRootOfUnity if no order <= bound
    is found.
    """
    k = z.mult_order(bound)
    if k is None:
        raise NotRootOfUnity("element has no multiplicative order <= %d" % bound)
    m = z.conductor * (2 * k) // gcd(z.conductor, 2 * k)
    zz = z.embed(m)
    zk = root_of_unity(k, 1, m)
    # find the exponent a with z == zeta_k^a
    acc = CycloNum.one(m)
    exponent = None
    for a in range(k):
        if acc == zz:
            exponent = a
            break
        acc = acc * zk
    assert exponent is not None
    w = root_of_unity(2 * k, exponent, m)
    assert w * w == zz
    return [w, -w]
