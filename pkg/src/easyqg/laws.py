"""Moments and cumulants of the limiting laws attached to partition families.

Real laws are indexed by integers, complex ones by colored words over
``o``/``b``. Moments of a family law are the partition sums
``sum over pi in D(w) of t^|pi|``; as polynomials in t they are ``Poly``
objects (coefficient lists, index = power of t).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, StructureError
from .partitions import UNCOLORED, PartitionFamily, enumerate_partitions
from .weingarten import _family_word, parse_word, truncated_char_moment


class Poly:
    """Polynomial in one variable t with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, x):
        return cls([x])

    @classmethod
    def t(cls):
        return cls([0, 1])

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.c), len(other.c))
        a = self.c + (0,) * (n - len(self.c))
        b = other.c + (0,) * (n - len(other.c))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.c)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.c or not other.c:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.c == _as_poly(other).c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __call__(self, t):
        out = Fraction(0)
        for x in reversed(self.c):
            out = out * t + x
        return out

    def coefficients(self):
        return list(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for p, x in enumerate(self.c):
            if x:
                terms.append(f"{x}" if p == 0 else f"{x}*t^{p}")
        return " + ".join(terms)


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


# -- family laws ----------------------------------------------------------------


def _order_word(fam, order):
    fam = PartitionFamily.parse(fam)
    if isinstance(order, int):
        if fam.is_complex:
            raise StructureError(f"family {fam} needs a colored word, got the integer {order}")
        return fam, UNCOLORED * order
    return _family_word(fam, order)


@lru_cache(maxsize=4096)
def _family_poly(fam, word):
    counts = {}
    for pi in enumerate_partitions(fam, "", word):
        counts[pi.block_count] = counts.get(pi.block_count, 0) + 1
    if not counts:
        return Poly()
    return Poly([counts.get(p, 0) for p in range(max(counts) + 1)])


def asymptotic_char_moments(fam, order):
    """sum over pi in D(order) of t^|pi|, as a polynomial in t."""
    fam, word = _order_word(fam, order)
    return _family_poly(fam, word)


_KINDS = {
    "Gaussian": "P2",
    "Semicircle": "NC2",
    "ComplexGaussian": "MatchP2",
    "Circular": "MatchNC2",
    "Poisson": "P",
    "FreePoisson": "NC",
}


@dataclass(frozen=True)
class LawSpec:
    """kind is one of Gaussian, Semicircle, ComplexGaussian, Circular, Poisson,
    FreePoisson, Bessel, FreeBessel, CategoryLaw. Bessel laws take s (an
    integer, or None for the s = infinity case); CategoryLaw takes family."""

    kind: str
    t: Fraction = Fraction(1)
    s: int = None
    family: str = None

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise DomainError("t must be positive")
        if self.kind not in _KINDS and self.kind not in ("Bessel", "FreeBessel", "CategoryLaw"):
            raise DomainError(f"unknown law {self.kind!r}")
        if self.kind == "CategoryLaw" and self.family is None:
            raise DomainError("CategoryLaw needs a family")
        if self.kind in ("Bessel", "FreeBessel") and self.s is not None and self.s < 1:
            raise DomainError("Bessel laws need s >= 1")

    def partition_family(self):
        if self.kind in _KINDS:
            return PartitionFamily.parse(_KINDS[self.kind])
        if self.kind == "CategoryLaw":
            return PartitionFamily.parse(self.family)
        if self.s is None:
            return PartitionFamily.parse("MatchPeven" if self.kind == "Bessel" else "MatchNCeven")
        return PartitionFamily("Ps" if self.kind == "Bessel" else "NCs", self.s)


def law_moments(spec, order):
    """Moment of the law at an integer order (real laws) or a colored word."""
    fam = spec.partition_family()
    return asymptotic_char_moments(fam, order)(spec.t)


def law_cumulants(spec, order, mode):
    fam = spec.partition_family()
    _, word = _order_word(fam, order)
    return cumulant(lambda w: _family_poly(fam, w), word, mode)(spec.t)


# -- moment-cumulant machinery --------------------------------------------------

CLASSICAL, FREE = "classical", "free"


def _check_mode(mode):
    if mode not in (CLASSICAL, FREE):
        raise DomainError(f"mode must be 'classical' or 'free', got {mode!r}")


def _subsets_with_first(n):
    rest = range(1, n)
    for r in range(n):
        for tail in itertools.combinations(rest, r):
            yield (0,) + tail


def _gap_words(word, block):
    """Subwords strictly between consecutive elements of block, and after the last."""
    ends = list(block) + [len(word)]
    return [word[ends[x] + 1:ends[x + 1]] for x in range(len(block))]


def cumulant(moment, word, mode):
    """Cumulant of a word, given a moment function on words.

    Solves the first-block recursion: classical mode sums over all subsets
    S containing the first letter, free mode over those S whose gaps carry
    independent moments (noncrossing partitions).
    """
    _check_mode(mode)
    cache = {}

    def kappa(w):
        if w in cache:
            return cache[w]
        n = len(w)
        if n == 0:
            raise DomainError("cumulants start at order 1")
        total = moment(w)
        full = tuple(range(n))
        for S in _subsets_with_first(n):
            if S == full:
                continue
            sub = "".join(w[x] for x in S)
            if mode == CLASSICAL:
                rest = "".join(w[x] for x in range(n) if x not in S)
                total = total - kappa(sub) * moment(rest)
            else:
                term = kappa(sub)
                for g in _gap_words(w, S):
                    if g:
                        term = term * moment(g)
                total = total - term
        cache[w] = total
        return total

    return kappa(word)


def moment_from_cumulants(kappa, word, mode):
    """Moment of a word from a cumulant function on words (inverse direction)."""
    _check_mode(mode)
    cache = {"": Fraction(1)}

    def m(w):
        if w in cache:
            return cache[w]
        n = len(w)
        total = None
        for S in _subsets_with_first(n):
            sub = "".join(w[x] for x in S)
            if mode == CLASSICAL:
                rest = "".join(w[x] for x in range(n) if x not in S)
                term = kappa(sub) * m(rest)
            else:
                term = kappa(sub)
                for g in _gap_words(w, S):
                    if g:
                        term = term * m(g)
            total = term if total is None else total + term
        cache[w] = total
        return total

    return m(word)


def moments_to_cumulants(moments, mode):
    """Integer-indexed: moments[0] = 1, moments[n] = M_n. Returns [None, k_1, ..., k_n].

    Uses the first-block recursions in their counting form (binomial sums for
    the classical case, compositions of gaps for the free case).
    """
    _check_mode(mode)
    m = list(moments)
    if not m or m[0] != 1:
        raise DomainError("the order-0 moment must be 1")
    n = len(m) - 1
    k = [None] * (n + 1)
    for order in range(1, n + 1):
        total = m[order]
        for s in range(1, order):
            total = total - k[s] * _block_weight(m, order, s, mode)
        k[order] = total
    return k


def cumulants_to_moments(cumulants, mode):
    """Inverse of moments_to_cumulants; cumulants[0] is ignored."""
    _check_mode(mode)
    n = len(cumulants) - 1
    m = [Fraction(1)] + [None] * n
    for order in range(1, n + 1):
        total = 0
        for s in range(1, order + 1):
            total = total + cumulants[s] * _block_weight(m, order, s, mode)
        m[order] = total
    return m


def _block_weight(m, order, s, mode):
    """Weight of the first block having size s in a partition of [order]."""
    if mode == CLASSICAL:
        return math.comb(order - 1, s - 1) * m[order - s]
    # s gaps with total length order - s
    return _gap_sum(tuple(m[: order - s + 1]), order - s, s)


def _gap_sum(m, total, parts):
    # sum over compositions i_1 + ... + i_parts = total of prod m[i_r]
    table = [Fraction(0)] * (total + 1)
    table[0] = 1
    for _ in range(parts):
        new = [0] * (total + 1)
        for a in range(total + 1):
            if table[a]:
                for b in range(total - a + 1):
                    new[a + b] = new[a + b] + table[a] * m[b]
        table = new
    return table[total]


def bercovici_pata_check(classical_family, free_family, kmax, words=None):
    """Compare classical cumulants of one family law with free cumulants of the other.

    Real families are checked at orders 1..kmax; complex ones on every colored
    word of length <= kmax (or on the given words).
    """
    cf = PartitionFamily.parse(classical_family)
    ff = PartitionFamily.parse(free_family)
    if cf.is_complex != ff.is_complex:
        raise DomainError("families must both be real or both complex")
    if words is None:
        if cf.is_complex:
            words = ["".join(w) for n in range(1, kmax + 1) for w in itertools.product("ob", repeat=n)]
        else:
            words = [UNCOLORED * n for n in range(1, kmax + 1)]
    rows = []
    for w in words:
        kc = cumulant(lambda x: _family_poly(cf, x), w, CLASSICAL)
        kf = cumulant(lambda x: _family_poly(ff, x), w, FREE)
        rows.append({"word": w, "classical": kc, "free": kf, "passed": kc == kf})
    return {"passed": all(r["passed"] for r in rows), "rows": rows}


# -- compound Poisson laws ------------------------------------------------------


@dataclass(frozen=True)
class Root:
    """The root of unity exp(2 pi i p / q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise DomainError("root order must be positive")


def _cyclotomic(n):
    """Integer coefficients of the n-th cyclotomic polynomial (low degree first)."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, _cyclotomic(d))
    return poly


def _polydiv_exact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    return out


class _Cyclo:
    """Elements of Q(zeta_L) as coefficient vectors modulo the cyclotomic polynomial."""

    def __init__(self, L, coeffs):
        self.L = L
        phi = _cyclotomic_cached(L)
        c = [Fraction(x) for x in coeffs]
        d = len(phi) - 1
        while len(c) > d:
            top = c.pop()
            if top:
                shift = len(c) - d
                for j in range(d):
                    c[shift + j] -= top * phi[j]
        self.c = c + [Fraction(0)] * (d - len(c))

    @classmethod
    def power(cls, L, m):
        v = [0] * (m % L + 1)
        v[m % L] = 1
        return cls(L, v)

    def __add__(self, other):
        if not isinstance(other, _Cyclo):
            other = _Cyclo(self.L, [other])
        return _Cyclo(self.L, [x + y for x, y in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return _Cyclo(self.L, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, _Cyclo) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, _Cyclo):
            return _Cyclo(self.L, [x * other for x in self.c])
        out = [Fraction(0)] * (2 * len(self.c))
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return _Cyclo(self.L, out)

    __rmul__ = __mul__

    def rational(self):
        if any(self.c[1:]):
            raise DomainError("value is not rational")
        return self.c[0]


@lru_cache(maxsize=64)
def _cyclotomic_cached(L):
    return tuple(_cyclotomic(L))


def compound_moments(atoms, mode, order):
    """Moments of the compound (free) Poisson law with atom measure sum c_i delta_{z_i}.

    ``atoms`` is a list of (mass, location) with location a rational number
    or a ``Root``. The cumulants are sum c_i z_i^#o conj(z_i)^#b on a colored
    word (z_i^n at integer order n). Non-real results raise DomainError.
    """
    _check_mode(mode)
    atoms = [(Fraction(c), z) for c, z in atoms]
    if any(c <= 0 for c, _ in atoms):
        raise DomainError("atom masses must be positive")
    word = UNCOLORED * order if isinstance(order, int) else parse_word(order)
    L = 1
    for _, z in atoms:
        if isinstance(z, Root):
            L = L * z.q // math.gcd(L, z.q)

    def kappa(w):
        n_o = sum(1 for x in w if x != "b")
        n_b = len(w) - n_o
        total = _Cyclo(L, [0])
        for c, z in atoms:
            if isinstance(z, Root):
                e = (z.p * (L // z.q) * (n_o - n_b)) % L
                total = total + _Cyclo.power(L, e) * c
            else:
                total = total + c * Fraction(z) ** len(w)
        return total

    if not word:
        return Fraction(1)
    return moment_from_cumulants(kappa, word, mode).rational()


def truncated_char_moments(fam, N, s, k):
    """Integral of (u_11 + ... + u_ss)^k, as Tr(W_{kN} G_{ks})."""
    return truncated_char_moment(fam, N, s, k)
