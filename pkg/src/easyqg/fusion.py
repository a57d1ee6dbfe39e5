"""Fusion rules and dimensions for the free orthogonal, unitary and symmetric
quantum groups.

Labels are integers for ``OPlus`` and ``SPlus`` and colored words over
``o``/``b`` for ``UPlus``. A decomposition is a dict label -> multiplicity.
"""

from functools import lru_cache
from itertools import product
from math import comb

from .errors import DomainError, SizeLimitError, StructureError

FAMILIES = ("OPlus", "UPlus", "SPlus")
WORD_BOUND = 12


def _check_family(family):
    if family not in FAMILIES:
        raise DomainError(f"unknown fusion family {family!r}")


def bar(word):
    """Reverse the word and switch colors."""
    return "".join("b" if c == "o" else "o" for c in reversed(word))


def _check_label(family, label):
    if family == "UPlus":
        if not isinstance(label, str) or set(label) - {"o", "b"}:
            raise StructureError(f"UPlus labels are words over o/b, got {label!r}")
    elif not isinstance(label, int) or label < 0:
        raise StructureError(f"{family} labels are non-negative integers, got {label!r}")


def fuse(family, a, b):
    """Decomposition of r_a (x) r_b."""
    _check_family(family)
    _check_label(family, a)
    _check_label(family, b)
    if family == "OPlus":
        return {r: 1 for r in range(abs(a - b), a + b + 1, 2)}
    if family == "SPlus":
        return {r: 1 for r in range(abs(a - b), a + b + 1)}
    out = {}
    # a = x y, b = bar(y) z
    for cut in range(len(a) + 1):
        x, y = a[:cut], a[cut:]
        yb = bar(y)
        if b.startswith(yb):
            label = x + b[len(yb):]
            out[label] = out.get(label, 0) + 1
    return out


def fuse_decomposition(family, dec, label):
    """(sum m_r r) (x) r_label."""
    out = {}
    for r, m in dec.items():
        for s, n in fuse(family, r, label).items():
            out[s] = out.get(s, 0) + m * n
    return out


def tensor_power_decompose(family, k):
    """Decomposition of u^(x)k (an integer k, or a colored word for UPlus)."""
    _check_family(family)
    if family == "UPlus":
        if isinstance(k, int):
            k = "o" * k
        _check_label(family, k)
        if len(k) > WORD_BOUND:
            raise SizeLimitError(f"word length {len(k)} exceeds {WORD_BOUND}")
        return dict(_upower(k))
    if not isinstance(k, int) or k < 0:
        raise StructureError("tensor power must be a non-negative integer")
    if k > 4 * WORD_BOUND:
        raise SizeLimitError(f"tensor power {k} too large")
    dec = {0: 1}
    for _ in range(k):
        if family == "OPlus":
            dec = fuse_decomposition(family, dec, 1)
        else:
            # the fundamental of S_N^+ is r_0 + r_1
            a = fuse_decomposition(family, dec, 1)
            for r, m in dec.items():
                a[r] = a.get(r, 0) + m
            dec = a
    return dec


@lru_cache(maxsize=1024)
def _upower(word):
    if not word:
        return (("", 1),)
    dec = fuse_decomposition("UPlus", dict(_upower(word[:-1])), word[-1])
    return tuple(sorted(dec.items()))


def dimension(family, label, N):
    """Dimension of r_label at N, by the recursion coming from fusion with r_1."""
    _check_family(family)
    _check_label(family, label)
    if family == "OPlus":
        if N < 2:
            raise DomainError("OPlus needs N >= 2")
        return _dims_o(N, label)[label]
    if family == "SPlus":
        if N < 4:
            raise DomainError("SPlus needs N >= 4")
        return _dims_s(N, label)[label]
    if N < 2:
        raise DomainError("UPlus needs N >= 2")
    return _dim_u(label, N)


def _dims_o(N, k):
    d = [1, N]
    while len(d) <= k:
        d.append(N * d[-1] - d[-2])
    return d


def _dims_s(N, k):
    d = [1, N - 1]
    while len(d) <= k:
        d.append((N - 2) * d[-1] - d[-2])
    return d


@lru_cache(maxsize=4096)
def _dim_u(word, N):
    if not word:
        return 1
    head, c = word[:-1], word[-1]
    # r_head (x) r_c = r_word + r_{head minus last} when head ends with conj(c)
    d = N * _dim_u(head, N)
    if head and head[-1] != c:
        d -= _dim_u(head[:-1], N)
    return d


def catalan_consistency(kmax, N=5):
    """Squared multiplicities of u^(x)k over O_N^+ against Catalan numbers, and
    the dimension count sum m_r dim r = N^k."""
    rows = []
    for k in range(kmax + 1):
        dec = tensor_power_decompose("OPlus", k)
        sq = sum(m * m for m in dec.values())
        cat = comb(2 * k, k) // (k + 1)
        dims = sum(m * dimension("OPlus", r, N) for r, m in dec.items())
        rows.append({"k": k, "sum_sq": sq, "catalan": cat, "dim_total": dims, "N_pow": N ** k,
                     "passed": sq == cat and dims == N ** k})
    return {"passed": all(r["passed"] for r in rows), "rows": rows}


def growth_series(family, N, kmax):
    """b_k = sum of dim(v)^2 over irreducibles of length <= k."""
    _check_family(family)
    out = []
    total = 0
    for k in range(kmax + 1):
        if family == "UPlus":
            if k > WORD_BOUND:
                raise SizeLimitError(f"word length {k} exceeds {WORD_BOUND}")
            total += sum(dimension("UPlus", "".join(w), N) ** 2 for w in product("ob", repeat=k))
        else:
            total += dimension(family, k, N) ** 2
        out.append(total)
    return out


def label_key(family, label):
    """Display key used in serialized decompositions."""
    if family == "UPlus":
        return "r_" + (label or "e")
    return f"r{label}"
