"""Categorical operations on partitions and bounded category generation.

Composition stacks ``top`` above ``bottom``: the lower row of ``top`` is
glued to the upper row of ``bottom``. On the linear maps this is
``T_bottom @ T_top``, since upper legs are inputs and lower legs outputs.
"""

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import DomainError, SizeLimitError, StructureError
from .partitions import (
    UNCOLORED,
    SetPartition,
    complement,
    complement_word,
)

DEFAULT_CATEGORY_CEILING = 8


@dataclass(frozen=True)
class CompositionResult:
    partition: SetPartition
    loops: int


def tensor(pi, sigma):
    """Horizontal concatenation [pi sigma]."""
    off = pi.block_count
    up = [pi.labels[x] for x in range(pi.k)] + [off + sigma.labels[x] for x in range(sigma.k)]
    lo = [pi.labels[pi.k + x] for x in range(pi.l)] + [off + sigma.labels[sigma.k + x] for x in range(sigma.l)]
    return SetPartition.make(pi.upper + sigma.upper, pi.lower + sigma.lower, up + lo)


def empty_partition():
    return SetPartition("", "", ())


def compose(top, bottom):
    """Vertical concatenation; middle legs are erased and closed loops counted."""
    if top.lower != bottom.upper:
        raise StructureError(f"middle words differ: {top.lower!r} vs {bottom.upper!r}")
    k, m, l = top.k, top.l, bottom.l
    # nodes: top blocks, then bottom blocks
    nt = top.block_count
    parent = list(range(nt + bottom.block_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(m):
        a, b = find(top.labels[k + x]), find(nt + bottom.labels[x])
        if a != b:
            parent[a] = b
    outer = set()
    raw = []
    for x in range(k):
        r = find(top.labels[x])
        outer.add(r)
        raw.append(r)
    for x in range(l):
        r = find(nt + bottom.labels[bottom.k + x])
        outer.add(r)
        raw.append(r)
    roots = {find(x) for x in range(len(parent))}
    loops = len(roots - outer)
    return CompositionResult(SetPartition.make(top.upper, bottom.lower, raw), loops)


def involute(pi):
    """Upside-down turning with colors switched."""
    labels = pi.labels[pi.k:] + pi.labels[:pi.k]
    return SetPartition.make(complement_word(pi.lower), complement_word(pi.upper), labels)


def rotate(pi):
    """Shift every leg one step counterclockwise, keeping the row lengths.

    The leftmost upper leg goes to the leftmost lower position and the
    rightmost lower leg comes up as the rightmost upper leg. A leg that
    changes row has its color switched.
    """
    k, l = pi.k, pi.l
    n = k + l
    if n == 0:
        raise DomainError("cannot rotate the empty partition")
    cw_legs = list(range(k)) + list(range(n - 1, k - 1, -1))
    colors = [pi.color(leg) for leg in cw_legs]
    labels = [pi.labels[leg] for leg in cw_legs]
    # position p receives the content of position p+1
    new_labels = labels[1:] + labels[:1]
    new_colors = colors[1:] + colors[:1]
    for p in range(n):
        src = (p + 1) % n
        if (p < k) != (src < k):
            new_colors[p] = complement(new_colors[p])
    raw = [0] * n
    col = [""] * n
    for p, leg in enumerate(cw_legs):
        raw[leg] = new_labels[p]
        col[leg] = new_colors[p]
    return SetPartition.make("".join(col[:k]), "".join(col[k:]), raw)


def bend_left_down(pi):
    """Move the leftmost upper leg to the left end of the lower row."""
    if pi.k == 0:
        raise DomainError("no upper leg to bend")
    labels = list(pi.labels)
    raw = labels[1:pi.k] + [labels[0]] + labels[pi.k:]
    return SetPartition.make(pi.upper[1:], complement(pi.upper[0]) + pi.lower, raw)


def bend_left_up(pi):
    """Move the leftmost lower leg to the left end of the upper row."""
    if pi.l == 0:
        raise DomainError("no lower leg to bend")
    labels = list(pi.labels)
    raw = [labels[pi.k]] + labels[:pi.k] + labels[pi.k + 1:]
    return SetPartition.make(complement(pi.lower[0]) + pi.upper, pi.lower[1:], raw)


def bend_right_down(pi):
    """Move the rightmost upper leg to the right end of the lower row."""
    if pi.k == 0:
        raise DomainError("no upper leg to bend")
    labels = list(pi.labels)
    raw = labels[:pi.k - 1] + labels[pi.k:] + [labels[pi.k - 1]]
    return SetPartition.make(pi.upper[:-1], pi.lower + complement(pi.upper[-1]), raw)


def bend_right_up(pi):
    """Move the rightmost lower leg to the right end of the upper row."""
    if pi.l == 0:
        raise DomainError("no lower leg to bend")
    labels = list(pi.labels)
    raw = labels[:pi.k] + [labels[-1]] + labels[pi.k:-1]
    return SetPartition.make(pi.upper + complement(pi.lower[-1]), pi.lower[:-1], raw)


_BENDS = (bend_left_down, bend_left_up, bend_right_down, bend_right_up)


def semicircle(colors="--", lower=True):
    """The cap (lower=True, no upper legs) or cup joining two legs."""
    if len(colors) != 2:
        raise StructureError("a semicircle has two legs")
    if lower:
        return SetPartition.make("", colors, (0, 0))
    return SetPartition.make(colors, "", (0, 0))


@dataclass
class GeneratedCategory:
    generators: list
    size_bound: int
    members: dict = field(default_factory=dict)

    def cell(self, upper, lower):
        return sorted(self.members.get((upper, lower), ()), key=SetPartition.sort_key)

    def __contains__(self, pi):
        return pi in self.members.get(pi.shape, ())

    def count(self):
        return sum(len(v) for v in self.members.values())

    def cells(self):
        return sorted(self.members, key=lambda c: (len(c[0]) + len(c[1]), c))


def _seeds(colored):
    if colored:
        out = [SetPartition.identity("o"), SetPartition.identity("b")]
        for c in ("ob", "bo"):
            out.append(semicircle(c, lower=True))
            out.append(semicircle(c, lower=False))
    else:
        out = [SetPartition.identity(UNCOLORED), semicircle("--", True), semicircle("--", False)]
    return [empty_partition()] + out


def generate_category(generators=(), size_bound=6, colored=None, ceiling=DEFAULT_CATEGORY_CEILING):
    """Smallest collection containing the generators, identities and semicircles,
    closed under tensor, composition, involution and rotation, with every
    member having at most ``size_bound`` legs.
    """
    if size_bound > ceiling:
        raise SizeLimitError(f"size bound {size_bound} exceeds the ceiling {ceiling}")
    generators = list(generators)
    if colored is None:
        colored = any(p.upper.replace(UNCOLORED, "") or p.lower.replace(UNCOLORED, "") for p in generators)
    for g in generators:
        if colored == (UNCOLORED in g.upper + g.lower):
            raise StructureError("generators mix colored and uncolored legs")
        if g.size > size_bound:
            raise SizeLimitError(f"generator with {g.size} legs exceeds the size bound {size_bound}")

    members = set()
    by_upper = defaultdict(set)
    by_lower = defaultdict(set)
    todo = []

    def add(p):
        if p.size <= size_bound and p not in members:
            members.add(p)
            by_upper[p.upper].add(p)
            by_lower[p.lower].add(p)
            todo.append(p)

    for p in _seeds(colored) + generators:
        add(p)

    done = []
    done_set = set()
    while todo:
        x = todo.pop()
        add(involute(x))
        if x.size:
            add(rotate(x))
        for bend in _BENDS:
            try:
                add(bend(x))
            except DomainError:
                pass
        for y in done + [x]:
            if x.size + y.size <= size_bound:
                add(tensor(x, y))
                add(tensor(y, x))
        done.append(x)
        done_set.add(x)
        # compositions with already processed members (both stacking orders)
        for y in list(by_upper.get(x.lower, ())):
            if y in done_set and x.k + y.l <= size_bound:
                add(compose(x, y).partition)
        for y in list(by_lower.get(x.upper, ())):
            if y in done_set and y.k + x.l <= size_bound:
                add(compose(y, x).partition)

    cat = GeneratedCategory(generators, size_bound)
    for p in members:
        cat.members.setdefault(p.shape, set()).add(p)
    return cat


def tl_trace(pi, N):
    """N to the number of loops in the closure joining upper leg x to lower leg x."""
    if pi.k != pi.l or not pi.is_pairing():
        raise DomainError("trace closure needs a pairing with equal row lengths")
    k = pi.k
    parent = list(range(pi.block_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(k):
        a, b = find(pi.labels[x]), find(pi.labels[k + x])
        if a != b:
            parent[a] = b
    loops = len({find(b) for b in range(pi.block_count)})
    return N ** loops
