"""Builders for the named pointed Hopf algebras, from presentations.

A presentation declares commuting grouplike generators with orders,
skew-primitive generators with a power relation landing in the grouplike
span, omega-commutation rules ``g*x = c*(x*g)``, ``x*y = c*(y*x)``, and
coproducts ``Delta(x) = x (x) gamma + delta (x) x``.  Products are
normalized by a terminating letter-level rewriting (grouplikes move
left, exponents reduce), which is exactly enough for every family the
toolkit ships; no general noncommutative Groebner machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .cyclo import CycloNum, root_of_unity
from .hopf import HopfAlgebra, HopfMeta, verify_axioms
from .linalg import cone, czero, dot, zeros_vec


class PresentationError(Exception):
    pass


class InvalidPresentation(Exception):
    pass


@dataclass
class SkewGen:
    name: str
    power_bound: int                 # x**power_bound = power_rhs
    power_rhs: dict                  # {grouplike exponent tuple: scalar}
    gamma: tuple                     # grouplike exponents, Delta(x) = x(x)gamma + delta(x)x
    delta: tuple


@dataclass
class Presentation:
    grouplike_orders: list           # [(name, order)], commuting
    skew_gens: list                  # [SkewGen]
    commutation: dict = field(default_factory=dict)       # (g_idx, x_idx) -> c with g x = c x g
    skew_commutation: dict = field(default_factory=dict)  # (x_idx, y_idx), x before y -> c with x y = c y x
    family: str | None = None
    params: dict = field(default_factory=dict)
    conductor: int | None = None

    @property
    def n_grouplike(self):
        return len(self.grouplike_orders)

    @property
    def n_skew(self):
        return len(self.skew_gens)


def _lcm(a, b):
    return a * b // gcd(a, b)


def presentation_conductor(p: Presentation) -> int:
    """Ambient conductor: holds i, every omega, and every r with |r| = 2m."""
    m = 1
    for _, order in p.grouplike_orders:
        m = _lcm(m, order)
    cond = _lcm(2 * m, 4)
    for c in list(p.commutation.values()) + list(p.skew_commutation.values()):
        k = c.mult_order(64)
        if k is None:
            raise PresentationError("commutation scalar is not a root of unity")
        cond = _lcm(cond, k)
    for sg in p.skew_gens:
        cond = _lcm(cond, 2 * sg.power_bound)
    return cond


class _Rewriter:
    """Letter words over (grouplikes..., skews...); normalizes to g^r x^p order."""

    def __init__(self, p: Presentation, conductor: int):
        self.p = p
        self.conductor = conductor
        self.ng = p.n_grouplike
        self.orders = [order for _, order in p.grouplike_orders]
        self.bounds = [sg.power_bound for sg in p.skew_gens]
        self._memo = {}
        one = cone(conductor)
        # swap scalar for letters (a, b) appearing as "b a" -> scalar * "a b"
        self.swap = {}
        for (gi, xi), c in p.commutation.items():
            self.swap[(self.ng + xi, gi)] = c.embed(conductor).inverse()
        for (xi, yi), c in p.skew_commutation.items():
            self.swap[(self.ng + yi, self.ng + xi)] = c.embed(conductor).inverse()
        for gi in range(self.ng):
            for gj in range(gi):
                self.swap[(gi, gj)] = one
        self.rhs = []
        for sg in p.skew_gens:
            terms = []
            for exps, coeff in sg.power_rhs.items():
                terms.append((self.grouplike_word(exps), coeff.embed(conductor)))
            self.rhs.append(terms)

    def grouplike_word(self, exps) -> tuple:
        letters = []
        for gi, e in enumerate(exps):
            letters.extend([gi] * (e % self.orders[gi]))
        return tuple(letters)

    def normalize(self, word: tuple) -> dict:
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        result = self._normalize(word)
        self._memo[word] = result
        return result

    def _normalize(self, word: tuple) -> dict:
        one = cone(self.conductor)
        # leftmost event: out-of-order adjacent pair or exponent overflow
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a > b:
                c = self.swap.get((a, b))
                if c is None:
                    raise PresentationError(
                        "no commutation rule for letters %r, %r" % (a, b))
                swapped = word[:i] + (b, a) + word[i + 2:]
                return _scale(self.normalize(swapped), c)
        # word is sorted; reduce runs
        i = 0
        while i < len(word):
            letter = word[i]
            j = i
            while j < len(word) and word[j] == letter:
                j += 1
            run = j - i
            bound = self.orders[letter] if letter < self.ng \
                else self.bounds[letter - self.ng]
            if run >= bound:
                if letter < self.ng:
                    reduced = word[:i] + word[i + bound:]
                    return self.normalize(reduced)
                # substitute x^bound at the end of the run
                out = {}
                keep = run - bound
                for gword, coeff in self.rhs[letter - self.ng]:
                    sub = word[:i] + (letter,) * keep + gword + word[j:]
                    for w, c in self.normalize(sub).items():
                        t = out.get(w)
                        t = coeff * c if t is None else t + coeff * c
                        if t.is_zero():
                            out.pop(w, None)
                        else:
                            out[w] = t
                return out
            i = j
        return {word: one}


def _scale(element: dict, c: CycloNum) -> dict:
    out = {}
    for w, v in element.items():
        cv = c * v
        if not cv.is_zero():
            out[w] = cv
    return out


def _elem_mul(rw: _Rewriter, e1: dict, e2: dict) -> dict:
    out = {}
    for w1, c1 in e1.items():
        for w2, c2 in e2.items():
            for w, c in rw.normalize(w1 + w2).items():
                t = out.get(w)
                add = c1 * c2 * c
                t = add if t is None else t + add
                if t.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = t
    return out


def build_from_presentation(p: Presentation) -> HopfAlgebra:
    """Structure constants by normal-form rewriting; axiom-checked."""
    conductor = p.conductor if p.conductor is not None else presentation_conductor(p)
    rw = _Rewriter(p, conductor)
    ng, ns = p.n_grouplike, p.n_skew
    orders = rw.orders
    bounds = rw.bounds

    exps_ranges = [range(o) for o in orders] + [range(b) for b in bounds]
    basis_words = []
    labels = []
    for exps in itertools.product(*exps_ranges):
        word = []
        for li, e in enumerate(exps):
            word.extend([li] * e)
        basis_words.append(tuple(word))
        labels.append(_word_label(p, exps))
    index = {w: i for i, w in enumerate(basis_words)}
    n = len(basis_words)

    def to_vec(element: dict):
        v = zeros_vec(n, conductor)
        for w, c in element.items():
            i = index.get(w)
            if i is None:
                raise PresentationError("rewriting left the declared basis: %r" % (w,))
            v[i] = v[i] + c
        return v

    def to_sparse(element: dict):
        out = {}
        for w, c in element.items():
            i = index.get(w)
            if i is None:
                raise PresentationError("rewriting left the declared basis: %r" % (w,))
            out[i] = out.get(i, czero(conductor)) + c
        return {i: c for i, c in out.items() if not c.is_zero()}

    mul = [[to_sparse(rw.normalize(basis_words[i] + basis_words[j]))
            for j in range(n)] for i in range(n)]

    # coproducts of letters, as elements of H (x) H: {(word, word): coeff}
    one = cone(conductor)
    letter_comul = []
    for gi in range(ng):
        letter_comul.append({((gi,), (gi,)): one})
    for xi, sg in enumerate(p.skew_gens):
        gamma = rw.grouplike_word(sg.gamma)
        delta = rw.grouplike_word(sg.delta)
        letter_comul.append({
            ((ng + xi,), gamma): one,
            (delta, (ng + xi,)): one,
        })

    def tensor_elem_mul(t1, t2):
        out = {}
        for (a1, a2), c1 in t1.items():
            for (b1, b2), c2 in t2.items():
                left = rw.normalize(a1 + b1)
                right = rw.normalize(a2 + b2)
                for w1, d1 in left.items():
                    for w2, d2 in right.items():
                        key = (w1, w2)
                        add = c1 * c2 * d1 * d2
                        t = out.get(key)
                        t = add if t is None else t + add
                        if t.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = t
        return out

    comul = []
    for w in basis_words:
        t = {((), ()): one}
        for letter in w:
            t = tensor_elem_mul(t, letter_comul[letter])
        comul.append({(index[w1], index[w2]): c for (w1, w2), c in t.items()})

    counit = [one if all(l < ng for l in w) else czero(conductor) for w in basis_words]
    unit = zeros_vec(n, conductor)
    unit[index[()]] = one

    # antipode: S(g) = g^-1, S(x) = -delta^-1 x gamma^-1, anti-multiplicative
    letter_antipode = []
    for gi in range(ng):
        letter_antipode.append({(gi,) * (orders[gi] - 1): one})
    for xi, sg in enumerate(p.skew_gens):
        gamma_inv = rw.grouplike_word(tuple(-e for e in sg.gamma))
        delta_inv = rw.grouplike_word(tuple(-e for e in sg.delta))
        word = delta_inv + (ng + xi,) + gamma_inv
        letter_antipode.append(_scale(rw.normalize(word), -one))
    antipode_cols = []
    for w in basis_words:
        acc = {(): one}
        for letter in reversed(w):
            acc = _elem_mul(rw, acc, letter_antipode[letter])
        antipode_cols.append(to_vec(acc))
    antipode = [[antipode_cols[j][i] for j in range(n)] for i in range(n)]

    meta = HopfMeta(pointed=True, family=p.family, params=dict(p.params))
    for exps in itertools.product(*[range(o) for o in orders]):
        word = rw.grouplike_word(exps)
        v = zeros_vec(n, conductor)
        v[index[word]] = one
        meta.grouplikes.append(v)
    for xi, sg in enumerate(p.skew_gens):
        x = zeros_vec(n, conductor)
        x[index[(ng + xi,)]] = one
        g = zeros_vec(n, conductor)
        g[index[rw.grouplike_word(sg.gamma)]] = one
        d = zeros_vec(n, conductor)
        d[index[rw.grouplike_word(sg.delta)]] = one
        meta.skew_primitives.append((x, g, d))

    h = HopfAlgebra(n, labels, mul, comul, unit, counit, antipode, conductor, meta)
    report = verify_axioms(h)
    if not report.passed:
        raise InvalidPresentation("axiom check failed: %r" % (report.failures,))
    meta.characters = _algebra_characters(h, p, rw, index)
    return h


def _word_label(p: Presentation, exps) -> str:
    parts = []
    names = [name for name, _ in p.grouplike_orders] + [sg.name for sg in p.skew_gens]
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "".join(parts) if parts else "1"


def _algebra_characters(h: HopfAlgebra, p: Presentation, rw: _Rewriter, index):
    """All algebra characters chi (verified multiplicative functionals).

    Candidates send each grouplike generator to a root of unity of its
    order and every skew generator to zero; each candidate is verified
    exactly on the whole multiplication tensor.
    """
    conductor = h.conductor
    orders = rw.orders
    chars = []
    for js in itertools.product(*[range(o) for o in orders]):
        values = [root_of_unity(o, j, conductor) for o, j in zip(orders, js)]
        chi = []
        ok_candidate = True
        for w in _basis_words_of(h, index):
            if any(l >= rw.ng for l in w):
                chi.append(czero(conductor))
            else:
                val = cone(conductor)
                for letter in w:
                    val = val * values[letter]
                chi.append(val)
        if _is_character(h, chi):
            chars.append(chi)
    return chars


def _basis_words_of(h, index):
    words = [None] * h.dim
    for w, i in index.items():
        words[i] = w
    return words


def _is_character(h: HopfAlgebra, chi) -> bool:
    if dot(chi, h.unit) != 1:
        return False
    for i in range(h.dim):
        for j in range(h.dim):
            acc = czero(h.conductor)
            for k, c in h.mul[i][j].items():
                acc = acc + c * chi[k]
            if acc != chi[i] * chi[j]:
                return False
    return True


# -- the named families -----------------------------------------------


def _minus_one():
    return CycloNum.from_rational(-1, 1)


def build_named(name: str, **params) -> HopfAlgebra:
    """Catalog entry point; see NAMED_FAMILIES for the accepted names."""
    builder = NAMED_FAMILIES.get(name)
    if builder is None:
        raise KeyError("unknown family %r; known: %s"
                       % (name, ", ".join(sorted(NAMED_FAMILIES))))
    return builder(**params)


def group_algebra_cyclic(n: int) -> HopfAlgebra:
    if n < 1:
        raise ValueError("n must be >= 1")
    p = Presentation(
        grouplike_orders=[("g", n)], skew_gens=[],
        family="GroupAlgebraCyclic", params={"n": n})
    return build_from_presentation(p)


def sweedler() -> HopfAlgebra:
    return taft(2, family="Sweedler")


def taft(n: int, family: str = "Taft") -> HopfAlgebra:
    if n < 2:
        raise ValueError("Taft algebra needs n >= 2")
    omega = root_of_unity(n)
    p = Presentation(
        grouplike_orders=[("g", n)],
        skew_gens=[SkewGen("x", n, {}, gamma=(1,), delta=(0,))],
        commutation={(0, 0): omega},   # g x = omega x g
        family=family, params={"n": n})
    return build_from_presentation(p)


def radford(n: int, family: str = "Radford") -> HopfAlgebra:
    # g x = omega^-1 x g, g y = omega y g, x y = omega y x; x, y (g,1)-primitive
    if n < 2:
        raise ValueError("Radford algebra needs n >= 2")
    omega = root_of_unity(n)
    p = Presentation(
        grouplike_orders=[("g", n)],
        skew_gens=[
            SkewGen("x", n, {}, gamma=(1,), delta=(0,)),
            SkewGen("y", n, {}, gamma=(1,), delta=(0,)),
        ],
        commutation={(0, 0): omega.inverse(), (0, 1): omega},
        skew_commutation={(0, 1): omega},
        family=family, params={"n": n})
    return build_from_presentation(p)


def a_c2() -> HopfAlgebra:
    return radford(2, family="A_C2")


def a1_c4() -> HopfAlgebra:
    p = Presentation(
        grouplike_orders=[("g", 4)],
        skew_gens=[SkewGen("x", 2, {}, gamma=(1,), delta=(0,))],
        commutation={(0, 0): _minus_one()},
        family="A1_C4", params={})
    return build_from_presentation(p)


def a2_c4() -> HopfAlgebra:
    # x^2 = g^2 - 1
    rhs = {(2,): CycloNum.one(), (0,): _minus_one()}
    p = Presentation(
        grouplike_orders=[("g", 4)],
        skew_gens=[SkewGen("x", 2, rhs, gamma=(1,), delta=(0,))],
        commutation={(0, 0): _minus_one()},
        family="A2_C4", params={})
    return build_from_presentation(p)


def a3_c4(omega_power: int = 1) -> HopfAlgebra:
    if omega_power % 2 == 0:
        raise ValueError("omega must be a primitive fourth root of unity")
    # x must be (g^2, 1)-primitive: g^2 x = -x g^2 makes Delta(x)^2 = 0
    omega = root_of_unity(4, omega_power)
    p = Presentation(
        grouplike_orders=[("g", 4)],
        skew_gens=[SkewGen("x", 2, {}, gamma=(2,), delta=(0,))],
        commutation={(0, 0): omega},
        family="A3_C4", params={"omega_power": omega_power})
    return build_from_presentation(p)


def a_c2xc2() -> HopfAlgebra:
    p = Presentation(
        grouplike_orders=[("g", 2), ("h", 2)],
        skew_gens=[SkewGen("x", 2, {}, gamma=(1, 0), delta=(0, 0))],
        commutation={(0, 0): _minus_one(), (1, 0): _minus_one()},
        family="A_C2xC2", params={})
    return build_from_presentation(p)


def a0_dim12() -> HopfAlgebra:
    p = Presentation(
        grouplike_orders=[("g", 6)],
        skew_gens=[SkewGen("x", 2, {}, gamma=(1,), delta=(0,))],
        commutation={(0, 0): _minus_one()},
        family="A0", params={})
    return build_from_presentation(p)


def a1_dim12() -> HopfAlgebra:
    # x^2 = 1 - g^2
    rhs = {(0,): CycloNum.one(), (2,): _minus_one()}
    p = Presentation(
        grouplike_orders=[("g", 6)],
        skew_gens=[SkewGen("x", 2, rhs, gamma=(1,), delta=(0,))],
        commutation={(0, 0): _minus_one()},
        family="A1", params={})
    return build_from_presentation(p)


def b0_dim12() -> HopfAlgebra:
    # x is (g^3, 1)-primitive
    p = Presentation(
        grouplike_orders=[("g", 6)],
        skew_gens=[SkewGen("x", 2, {}, gamma=(3,), delta=(0,))],
        commutation={(0, 0): _minus_one()},
        family="B0", params={})
    return build_from_presentation(p)


def b1_dim12() -> HopfAlgebra:
    omega = root_of_unity(6)
    p = Presentation(
        grouplike_orders=[("g", 6)],
        skew_gens=[SkewGen("x", 2, {}, gamma=(3,), delta=(0,))],
        commutation={(0, 0): omega},
        family="B1", params={})
    return build_from_presentation(p)


NAMED_FAMILIES = {
    "GroupAlgebraCyclic": group_algebra_cyclic,
    "Sweedler": sweedler,
    "Taft": taft,
    "Radford": radford,
    "A_C2": a_c2,
    "A1_C4": a1_c4,
    "A2_C4": a2_c4,
    "A3_C4": a3_c4,
    "A_C2xC2": a_c2xc2,
    "A0": a0_dim12,
    "A1": a1_dim12,
    "B0": b0_dim12,
    "B1": b1_dim12,
}


def catalog_entries(max_dim: int | None = None):
    """The full regression catalog as (display name, HopfAlgebra) pairs."""
    entries = []
    for n in range(2, 7):
        entries.append(("GroupAlgebraCyclic(%d)" % n, group_algebra_cyclic(n)))
    entries.append(("Sweedler", sweedler()))
    for n in range(2, 7):
        entries.append(("Taft(%d)" % n, taft(n)))
    for n in (2, 3):
        entries.append(("Radford(%d)" % n, radford(n)))
    entries.append(("A_C2", a_c2()))
    entries.append(("A1_C4", a1_c4()))
    entries.append(("A2_C4", a2_c4()))
    entries.append(("A3_C4", a3_c4()))
    entries.append(("A_C2xC2", a_c2xc2()))
    entries.append(("A0", a0_dim12()))
    entries.append(("A1", a1_dim12()))
    entries.append(("B0", b0_dim12()))
    entries.append(("B1", b1_dim12()))
    if max_dim is not None:
        entries = [(name, h) for name, h in entries if h.dim <= max_dim]
    return entries
