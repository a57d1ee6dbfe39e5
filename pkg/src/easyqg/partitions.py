"""Two-row colored set partitions and the families behind easy quantum groups.

A partition has ``k`` upper legs and ``l`` lower legs. Legs are numbered
``0..k-1`` for the upper row (left to right) and ``k..k+l-1`` for the lower
row (left to right). Colors are the characters ``'o'`` (white), ``'b'``
(black) and ``'-'`` (uncolored).

The canonical form labels blocks by first appearance in clockwise order,
starting at the top-left leg: upper row left to right, then lower row right
to left. Two partitions are equal iff their rows and canonical labels agree.
"""

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import DomainError, SizeLimitError, StructureError

WHITE, BLACK, UNCOLORED = "o", "b", "-"
_COMPLEMENT = {WHITE: BLACK, BLACK: WHITE, UNCOLORED: UNCOLORED}

DEFAULT_LEG_BOUND = 12


def complement(color):
    return _COMPLEMENT[color]


def complement_word(word):
    return "".join(_COMPLEMENT[c] for c in word)


def bar(word):
    """Reverse the word and switch its colors."""
    return complement_word(word[::-1])


def _word(w):
    if isinstance(w, int):
        return UNCOLORED * w
    w = str(w)
    bad = set(w) - set(_COMPLEMENT)
    if bad:
        raise StructureError(f"invalid leg colors {sorted(bad)!r} in word {w!r}")
    return w


def _clockwise(k, l):
    return list(range(k)) + list(range(k + l - 1, k - 1, -1))


def _canonical_labels(k, l, raw):
    relabel = {}
    out = [0] * (k + l)
    for leg in _clockwise(k, l):
        b = raw[leg]
        if b not in relabel:
            relabel[b] = len(relabel)
        out[leg] = relabel[b]
    return tuple(out)


@dataclass(frozen=True)
class SetPartition:
    upper: str
    lower: str
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.upper) + len(self.lower):
            raise StructureError("label count does not match the leg count")
        if _canonical_labels(self.k, self.l, self.labels) != self.labels:
            raise StructureError("labels are not in canonical form; use SetPartition.make")

    # -- construction ---------------------------------------------------------

    @classmethod
    def make(cls, upper, lower, labels):
        upper, lower = _word(upper), _word(lower)
        labels = tuple(labels)
        if len(labels) != len(upper) + len(lower):
            raise StructureError("label count does not match the leg count")
        return cls(upper, lower, _canonical_labels(len(upper), len(lower), labels))

    @classmethod
    def from_blocks(cls, blocks, upper=0, lower=0):
        """Build from 1-based blocks: upper legs 1..k, then lower legs k+1..k+l."""
        upper, lower = _word(upper), _word(lower)
        n = len(upper) + len(lower)
        raw = [None] * n
        for b, block in enumerate(blocks):
            if not block:
                raise StructureError("empty block")
            for leg in block:
                if not 1 <= leg <= n:
                    raise StructureError(f"leg {leg} out of range 1..{n}")
                if raw[leg - 1] is not None:
                    raise StructureError(f"leg {leg} appears in two blocks")
                raw[leg - 1] = b
        if any(r is None for r in raw):
            raise StructureError("some legs belong to no block")
        return cls.make(upper, lower, raw)

    @classmethod
    def one_block(cls, upper=0, lower=0):
        upper, lower = _word(upper), _word(lower)
        return cls.make(upper, lower, [0] * (len(upper) + len(lower)))

    @classmethod
    def identity(cls, word):
        word = _word(word)
        k = len(word)
        return cls.make(word, word, list(range(k)) + list(range(k)))

    @classmethod
    def from_dict(cls, d):
        return cls.from_blocks(d["blocks"], d.get("upper", ""), d.get("lower", ""))

    # -- basic data -----------------------------------------------------------

    @property
    def k(self):
        return len(self.upper)

    @property
    def l(self):
        return len(self.lower)

    @property
    def size(self):
        return len(self.labels)

    @property
    def shape(self):
        return (self.upper, self.lower)

    def color(self, leg):
        return self.upper[leg] if leg < self.k else self.lower[leg - self.k]

    @property
    def block_count(self):
        return max(self.labels) + 1 if self.labels else 0

    @property
    def blocks(self):
        out = [[] for _ in range(self.block_count)]
        for leg, b in enumerate(self.labels):
            out[b].append(leg)
        return tuple(tuple(b) for b in out)

    def clockwise_labels(self):
        return tuple(self.labels[leg] for leg in _clockwise(self.k, self.l))

    def sort_key(self):
        """Basis order: more blocks first, then first-appearance labels in leg order."""
        seen = {}
        rgs = tuple(seen.setdefault(b, len(seen)) for b in self.labels)
        return (-self.block_count, rgs)

    def to_dict(self):
        return {
            "upper": self.upper,
            "lower": self.lower,
            "blocks": [[leg + 1 for leg in b] for b in self.blocks],
        }

    def __str__(self):
        blocks = ",".join("[" + ",".join(str(x + 1) for x in b) + "]" for b in self.blocks)
        return f"{self.upper}/{self.lower} [{blocks}]"

    # -- predicates -----------------------------------------------------------

    def block_sizes(self):
        sizes = [0] * self.block_count
        for b in self.labels:
            sizes[b] += 1
        return sizes

    def is_pairing(self):
        return all(s == 2 for s in self.block_sizes())

    def has_even_blocks(self):
        return all(s % 2 == 0 for s in self.block_sizes())

    def is_noncrossing(self):
        return _is_noncrossing_sequence(self.clockwise_labels())

    def leg_weight(self, leg):
        # +1 for a black upper leg or a white lower leg; uncolored counts as white
        c = self.color(leg)
        upper = leg < self.k
        if c == BLACK:
            return 1 if upper else -1
        return -1 if upper else 1

    def block_weights(self):
        w = [0] * self.block_count
        for leg, b in enumerate(self.labels):
            w[b] += self.leg_weight(leg)
        return w

    def satisfies_star_rule(self):
        """Clockwise relabelling o,b,o,b,...: each block has as many o as b."""
        bal = [0] * self.block_count
        for pos, b in enumerate(self.clockwise_labels()):
            bal[b] += 1 if pos % 2 == 0 else -1
        return all(x == 0 for x in bal)

    def is_colored(self):
        return UNCOLORED not in self.upper and UNCOLORED not in self.lower


def _is_noncrossing_sequence(seq):
    first, last = {}, {}
    for pos, b in enumerate(seq):
        first.setdefault(b, pos)
        last[b] = pos
    # a sequence is noncrossing iff no pattern a..b..a..b; stack check
    stack = []
    for pos, b in enumerate(seq):
        if stack and stack[-1] == b:
            if last[b] == pos:
                stack.pop()
            continue
        if b in stack:
            return False
        if first[b] == pos and last[b] != pos:
            stack.append(b)
        elif first[b] != pos:
            return False
    return True


# -- families -----------------------------------------------------------------

_BASE_TAGS = {
    # tag: (pairing, max_block, noncrossing, even, star, matching)
    "P": (False, None, False, False, False, False),
    "P2": (True, 2, False, False, False, False),
    "P2star": (True, 2, False, False, True, False),
    "NC": (False, None, True, False, False, False),
    "NC2": (True, 2, True, False, False, False),
    "P12": (False, 2, False, False, False, False),
    "NC12": (False, 2, True, False, False, False),
    "Peven": (False, None, False, True, False, False),
    "NCeven": (False, None, True, True, False, False),
    "PevenStar": (False, None, False, True, True, False),
    "MatchP2": (True, 2, False, False, False, True),
    "MatchNC2": (True, 2, True, False, False, True),
    "MatchP2star": (True, 2, False, False, True, True),
    "MatchPeven": (False, None, False, True, False, True),
    "MatchNCeven": (False, None, True, True, False, True),
    "MatchPevenStar": (False, None, False, True, True, True),
}

_FREE_PARTNER = {
    "P": "NC",
    "P2": "NC2",
    "P12": "NC12",
    "Peven": "NCeven",
    "MatchP2": "MatchNC2",
    "MatchPeven": "MatchNCeven",
}


@dataclass(frozen=True)
class PartitionFamily:
    tag: str
    s: int = None

    def __post_init__(self):
        if self.tag in ("Ps", "NCs"):
            if self.s is None or int(self.s) < 1:
                raise DomainError(f"family {self.tag} needs s >= 1")
        elif self.tag not in _BASE_TAGS:
            raise DomainError(f"unknown partition family {self.tag!r}")
        elif self.s is not None:
            raise DomainError(f"family {self.tag} takes no parameter")

    @classmethod
    def parse(cls, text):
        if isinstance(text, PartitionFamily):
            return text
        m = re.fullmatch(r"\s*(Ps|NCs)\s*\(?\s*(\d+)\s*\)?\s*", str(text))
        if m:
            return cls(m.group(1), int(m.group(2)))
        return cls(str(text).strip())

    def __str__(self):
        return f"{self.tag}({self.s})" if self.s is not None else self.tag

    @property
    def _flags(self):
        if self.tag == "Ps":
            return (False, None, False, False, False, False)
        if self.tag == "NCs":
            return (False, None, True, False, False, False)
        return _BASE_TAGS[self.tag]

    @property
    def pairing(self):
        return self._flags[0]

    @property
    def max_block(self):
        return self._flags[1]

    @property
    def noncrossing(self):
        return self._flags[2]

    @property
    def matching(self):
        return self._flags[5]

    @property
    def star(self):
        return self._flags[4]

    @property
    def modulus(self):
        return self.s if self.tag in ("Ps", "NCs") else None

    @property
    def is_complex(self):
        """Complex families need colored words (u and its conjugate differ)."""
        return self.matching or (self.modulus is not None and self.modulus >= 3)

    @property
    def even_blocks(self):
        """Every member has blocks of even size (the twistable families)."""
        f = self._flags
        if f[0] or f[3] or f[5]:
            return True
        return self.modulus is not None and self.modulus % 2 == 0

    @property
    def has_singletons(self):
        return self.tag in ("P", "NC", "P12", "NC12") or self.modulus == 1

    def free_version(self):
        if self.tag == "Ps":
            return PartitionFamily("NCs", self.s)
        if self.tag in _FREE_PARTNER:
            return PartitionFamily(_FREE_PARTNER[self.tag])
        raise DomainError(f"no crossing-free partner registered for {self}")

    def contains(self, pi):
        return is_member(self, pi)


def family(tag):
    return PartitionFamily.parse(tag)


def is_member(fam, pi):
    fam = PartitionFamily.parse(fam)
    sizes = pi.block_sizes()
    if fam.pairing and any(s != 2 for s in sizes):
        return False
    if fam.max_block is not None and any(s > fam.max_block for s in sizes):
        return False
    if fam._flags[3] and any(s % 2 for s in sizes):
        return False
    if fam.noncrossing and not pi.is_noncrossing():
        return False
    if fam.matching:
        if not pi.is_colored():
            return False
        if any(w != 0 for w in pi.block_weights()):
            return False
    if fam.modulus is not None and any(w % fam.modulus for w in pi.block_weights()):
        return False
    if fam.star and not pi.satisfies_star_rule():
        return False
    return True


# -- enumeration --------------------------------------------------------------


def _rgs(n, max_block=None, pairing=False, noncrossing=False):
    """Restricted growth strings of length n, pruned on the fly."""
    seq = [0] * n
    sizes = []
    last = []
    closed = []

    def rec(pos):
        if pos == n:
            if pairing and any(s != 2 for s in sizes):
                return
            yield tuple(seq)
            return
        if pairing:
            open_singletons = sum(1 for s in sizes if s == 1)
            if open_singletons > n - pos:
                return
        for b in range(len(sizes)):
            if max_block is not None and sizes[b] >= max_block:
                continue
            newly_closed = []
            if noncrossing:
                if closed[b]:
                    continue
                q = last[b]
                ok = True
                for c in range(len(sizes)):
                    if c != b and not closed[c] and q < last[c] < pos:
                        # block c sits inside (q, pos); it must start after q
                        if _first[c] < q:
                            ok = False
                            break
                        newly_closed.append(c)
                if not ok:
                    continue
            seq[pos] = b
            sizes[b] += 1
            prev_last = last[b]
            last[b] = pos
            for c in newly_closed:
                closed[c] = True
            yield from rec(pos + 1)
            for c in newly_closed:
                closed[c] = False
            last[b] = prev_last
            sizes[b] -= 1
        b = len(sizes)
        seq[pos] = b
        sizes.append(1)
        last.append(pos)
        closed.append(False)
        _first.append(pos)
        yield from rec(pos + 1)
        _first.pop()
        closed.pop()
        last.pop()
        sizes.pop()

    _first = []
    yield from rec(0)


def _pairings(n):
    """Clockwise restricted growth strings of all pairings of n points."""
    seq = [-1] * n

    def rec(first, b):
        while first < n and seq[first] >= 0:
            first += 1
        if first == n:
            yield tuple(seq)
            return
        seq[first] = b
        for j in range(first + 1, n):
            if seq[j] < 0:
                seq[j] = b
                yield from rec(first + 1, b + 1)
                seq[j] = -1
        seq[first] = -1

    if n % 2 == 0:
        yield from rec(0, 0)


def count_partitions(fam, upper="", lower="", bound=2 * DEFAULT_LEG_BOUND):
    """Number of members of ``fam`` with the given rows.

    Color-blind families are counted without building partition objects, so
    the bound can be larger than the enumeration bound.
    """
    fam = PartitionFamily.parse(fam)
    upper, lower = _word(upper), _word(lower)
    n = len(upper) + len(lower)
    if n > bound:
        raise SizeLimitError(f"{n} legs exceed the counting bound {bound}")
    if fam.matching or fam.modulus is not None or fam.star:
        return len(enumerate_partitions(fam, upper, lower, bound))
    if fam.pairing and not fam.noncrossing:
        return sum(1 for _ in _pairings(n))
    even = fam._flags[3]
    count = 0
    for cw in _rgs(n, fam.max_block, fam.pairing, fam.noncrossing):
        if even:
            sizes = {}
            for b in cw:
                sizes[b] = sizes.get(b, 0) + 1
            if any(v % 2 for v in sizes.values()):
                continue
        count += 1
    return count


def _clockwise_to_legs(k, l, cw):
    n = k + l
    labels = [0] * n
    for p, b in enumerate(cw):
        leg = p if p < k else n - 1 - p + k
        labels[leg] = b
    return tuple(labels)


def enumerate_partitions(fam, upper="", lower="", bound=DEFAULT_LEG_BOUND):
    """All members of ``fam`` with the given rows, sorted in basis order."""
    fam = PartitionFamily.parse(fam)
    upper, lower = _word(upper), _word(lower)
    return list(_enumerate_cached(fam, upper, lower, bound))


@lru_cache(maxsize=512)
def _enumerate_cached(fam, upper, lower, bound):
    k, l = len(upper), len(lower)
    n = k + l
    if n > bound:
        raise SizeLimitError(f"{n} legs exceed the enumeration bound {bound}")
    if fam.matching and UNCOLORED in upper + lower:
        raise StructureError(f"family {fam} needs a colored word, got {upper!r}/{lower!r}")
    if fam.is_complex and not fam.matching and UNCOLORED in upper + lower:
        raise StructureError(f"family {fam} needs a colored word, got {upper!r}/{lower!r}")
    weights = None
    if fam.matching or fam.modulus is not None:
        probe = SetPartition.make(upper, lower, range(n))
        weights = [probe.leg_weight(leg) for leg in range(n)]
    out = []
    for labels, blocks in _shape_candidates(k, l, fam.max_block, fam.pairing, fam.noncrossing, fam._flags[3], fam.star):
        if weights is not None:
            sums = [sum(weights[x] for x in b) for b in blocks]
            if fam.matching and any(sums):
                continue
            if fam.modulus is not None and any(x % fam.modulus for x in sums):
                continue
        out.append(SetPartition(upper, lower, labels))
    out.sort(key=SetPartition.sort_key)
    return tuple(out)


@lru_cache(maxsize=256)
def _shape_candidates(k, l, max_block, pairing, noncrossing, even, star):
    # color-independent part of the family predicates, shared by all words
    out = []
    for cw in _rgs(k + l, max_block, pairing, noncrossing):
        pi = SetPartition(UNCOLORED * k, UNCOLORED * l, _clockwise_to_legs(k, l, cw))
        if even and not pi.has_even_blocks():
            continue
        if star and not pi.satisfies_star_rule():
            continue
        out.append((pi.labels, pi.blocks))
    return tuple(out)


# -- lattice operations -------------------------------------------------------


def _check_same_shape(pi, sigma):
    if pi.shape != sigma.shape:
        raise StructureError(f"leg structures differ: {pi.shape} vs {sigma.shape}")


def join(pi, sigma):
    """Finest partition coarser than both (superposition of the two)."""
    _check_same_shape(pi, sigma)
    n = pi.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (pi.labels, sigma.labels):
        first = {}
        for leg, b in enumerate(labels):
            if b in first:
                ra, rb = find(first[b]), find(leg)
                if ra != rb:
                    parent[ra] = rb
            else:
                first[b] = leg
    return SetPartition.make(pi.upper, pi.lower, [find(x) for x in range(n)])


def block_count(pi):
    return pi.block_count


def leq(pi, sigma):
    """Refinement order: every block of pi lies in a block of sigma."""
    _check_same_shape(pi, sigma)
    image = {}
    for a, b in zip(pi.labels, sigma.labels):
        if image.setdefault(a, b) != b:
            return False
    return True


def join_counts(basis_a, basis_b=None):
    """Matrix of |pi v sigma| over two lists of partitions of the same shape."""
    if basis_b is None:
        basis_b = basis_a
    if not basis_a or not basis_b:
        return np.zeros((len(basis_a), len(basis_b)), dtype=np.int32)
    n = basis_a[0].size
    if n == 0:
        return np.zeros((len(basis_a), len(basis_b)), dtype=np.int32)
    A = np.array([p.labels for p in basis_a], dtype=np.int32)
    B = np.array([p.labels for p in basis_b], dtype=np.int32)
    return kernels.join_block_counts(A, B)


def _interval(pi, sigma, lattice):
    """All tau with pi <= tau <= sigma (optionally noncrossing)."""
    nb = pi.block_count
    # pi-blocks grouped by the sigma-block containing them
    target = [None] * nb
    for a, b in zip(pi.labels, sigma.labels):
        target[a] = b
    out = []
    for merge in _rgs(nb):
        ok = all(
            target[x] == target[y] for x in range(nb) for y in range(x + 1, nb) if merge[x] == merge[y]
        )
        if not ok:
            continue
        tau = SetPartition.make(pi.upper, pi.lower, [merge[a] for a in pi.labels])
        if lattice == "NC" and not tau.is_noncrossing():
            continue
        out.append(tau)
    return out


def moebius(pi, sigma, lattice="P"):
    """Moebius function of the partition lattice (or of NC), by recurrence."""
    _check_same_shape(pi, sigma)
    if lattice not in ("P", "NC"):
        raise DomainError(f"unknown lattice {lattice!r}")
    if lattice == "NC" and not (pi.is_noncrossing() and sigma.is_noncrossing()):
        raise DomainError("noncrossing lattice needs noncrossing arguments")
    if not leq(pi, sigma):
        return 0
    members = _interval(pi, sigma, lattice)
    members.sort(key=lambda t: -t.block_count)
    mu = {}
    for tau in members:
        if tau == pi:
            mu[tau] = 1
        else:
            mu[tau] = -sum(v for t, v in mu.items() if leq(t, tau) and t != tau)
    return mu[sigma]


def kernel(indices, upper_count=0):
    """ker(i): block together the positions carrying equal indices.

    With ``upper_count`` > 0 the first that many indices sit on the upper
    row, giving ker(i over j) for a two-row index configuration.
    """
    indices = tuple(indices)
    if not indices:
        raise DomainError("kernel of an empty index tuple")
    k = upper_count
    return SetPartition.make(UNCOLORED * k, UNCOLORED * (len(indices) - k), indices)


def delta(pi, i=(), j=()):
    """Kronecker symbol: 1 iff the indices are constant on every block."""
    i, j = tuple(i), tuple(j)
    if len(i) != pi.k or len(j) != pi.l:
        raise StructureError(f"index arity {len(i)}/{len(j)} does not match {pi.k}/{pi.l}")
    idx = i + j
    seen = {}
    for leg, b in enumerate(pi.labels):
        if seen.setdefault(b, idx[leg]) != idx[leg]:
            return 0
    return 1


def signature(pi):
    """Parity of the switches needed to bring an even partition to noncrossing form.

    Switches act on neighbors within one row, so the row contents stay
    fixed and each switch changes the inversion count of the clockwise
    label sequence by one. The target arrangement sorts the upper row
    ascending and the lower row (read clockwise) descending; such a unimodal
    sequence is noncrossing.
    """
    if not pi.has_even_blocks():
        raise DomainError("signature is defined on partitions with even blocks only")
    cw = list(pi.clockwise_labels())
    k = pi.k
    target = sorted(cw[:k]) + sorted(cw[k:], reverse=True)
    return -1 if (_inversions(cw) - _inversions(target)) % 2 else 1


def _inversions(seq):
    count = 0
    for a in range(len(seq)):
        sa = seq[a]
        for b in range(a + 1, len(seq)):
            if seq[b] < sa:
                count += 1
    return count


def fatten(pi):
    """NC(k) -> NC2(2k): each leg is doubled and blocks become nested strings."""
    if pi.k != 0:
        raise DomainError("fattening acts on one-row partitions")
    if not pi.is_noncrossing():
        raise DomainError("fattening needs a noncrossing partition")
    k = pi.l
    raw = [None] * (2 * k)
    for b, block in enumerate(pi.blocks):
        legs = [x - pi.k for x in block]
        s = len(legs)
        for t in range(s):
            right = 2 * legs[t] + 1
            left = 2 * legs[(t + 1) % s]
            raw[right] = (b, t)
            raw[left] = (b, t)
    colors = "".join(c + c for c in pi.lower)
    return SetPartition.make("", colors, raw)


def shrink(pi):
    """Inverse of fatten: merge leg pairs (2m, 2m+1) along the strings."""
    if pi.k != 0 or pi.l % 2 or not pi.is_pairing():
        raise DomainError("shrinking acts on one-row pairings of even length")
    k = pi.l // 2
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in pi.blocks:
        a, b = block
        ra, rb = find(a // 2), find(b // 2)
        if ra != rb:
            parent[ra] = rb
    return SetPartition.make("", pi.lower[::2], [find(x) for x in range(k)])
