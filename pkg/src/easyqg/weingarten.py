"""Gram and Weingarten matrices, the maps T_pi, and Haar integration.

All matrices indexed by partitions are exact (``int``/``Fraction`` lists).
The basis for a word ``w`` is ``enumerate_partitions(family, "", w)``:
partitions with no upper legs and lower row ``w``.

Monomials are given by a word and two index tuples. The word letter
``'o'`` stands for ``u_ij`` and ``'b'`` for its conjugate; real families
take an uncolored word (or just its length).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import exact, kernels
from .diagram import compose, involute, tensor
from .errors import DomainError, SizeLimitError, StructureError
from .partitions import (
    UNCOLORED,
    PartitionFamily,
    SetPartition,
    enumerate_partitions,
    join_counts,
    signature,
)

TENSOR_ENTRY_LIMIT = 10 ** 7


def parse_word(word):
    """Accept an int, an o/b/- string, or letters with '*' marks (o* = b)."""
    if isinstance(word, int):
        return UNCOLORED * word
    out = []
    for ch in str(word):
        if ch == "*":
            if not out or out[-1] == UNCOLORED:
                raise StructureError(f"misplaced '*' in word {word!r}")
            out[-1] = "b" if out[-1] == "o" else "o"
        elif ch in "ob-":
            out.append(ch)
        elif ch in " ,":
            continue
        else:
            raise StructureError(f"invalid letter {ch!r} in word {word!r}")
    return "".join(out)


def _family_word(fam, word):
    fam = PartitionFamily.parse(fam)
    word = parse_word(word)
    if fam.is_complex:
        if UNCOLORED in word:
            raise StructureError(f"family {fam} needs a colored word, got {word!r}")
    else:
        # real families (u = conj(u)) see only the length
        word = UNCOLORED * len(word)
    return fam, word


@dataclass(frozen=True)
class PartitionMatrix:
    family: PartitionFamily
    word: str
    N: int
    basis: tuple
    entries: list

    def as_fraction_rows(self):
        return [[Fraction(x) for x in row] for row in self.entries]


# -- tensor maps ----------------------------------------------------------------


def _all_indices(N, n):
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((N,) * n).reshape(n, -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def _check_tensor_size(N, pi):
    if N < 1:
        raise DomainError("N must be positive")
    if N ** pi.size > TENSOR_ENTRY_LIMIT:
        raise SizeLimitError(f"N^{pi.size} entries exceed the dense storage ceiling")


def tpi(pi, N):
    """T_pi as an (N^l, N^k) integer array: T[j, i] = delta_pi(i over j)."""
    _check_tensor_size(N, pi)
    idx = _all_indices(N, pi.size)
    if pi.size == 0:
        return np.ones((1, 1), dtype=np.int64)
    d = kernels.delta_table(np.array([pi.labels], dtype=np.int32), idx)[0]
    # idx rows run over (i_1..i_k, j_1..j_l) in row-major order
    return d.reshape(N ** pi.k, N ** pi.l).T.astype(np.int64)


def tpi_twisted(pi, N):
    """Twisted map: entries signature(ker(i over j)) where the kernel dominates pi."""
    if not pi.has_even_blocks():
        raise DomainError("twisted maps need a partition with even blocks")
    _check_tensor_size(N, pi)
    if pi.size == 0:
        return np.ones((1, 1), dtype=np.int64)
    idx = _all_indices(N, pi.size)
    d = kernels.delta_table(np.array([pi.labels], dtype=np.int32), idx)[0].astype(np.int64)
    hits = np.nonzero(d)[0]
    if hits.size:
        kl = kernels.kernel_labels(idx[hits])
        signs = {}
        for t, row in zip(hits, kl.tolist()):
            key = tuple(row)
            if key not in signs:
                signs[key] = signature(SetPartition.make(UNCOLORED * pi.k, UNCOLORED * pi.l, key))
            d[t] = signs[key]
    return d.reshape(N ** pi.k, N ** pi.l).T


def categorical_check(pi, sigma, N):
    """Verify tensor, composition and adjoint compatibility of pi -> T_pi.

    Composition is checked when the lower row of ``sigma`` matches the upper
    row of ``pi`` (T_pi T_sigma = N^c T_{sigma over pi}).
    """
    report = {"N": N, "failures": []}
    Tp, Ts = tpi(pi, N), tpi(sigma, N)
    if not np.array_equal(np.kron(Tp, Ts), tpi(tensor(pi, sigma), N)):
        report["failures"].append("tensor")
    for name, a in (("adjoint pi", pi), ("adjoint sigma", sigma)):
        if not np.array_equal(tpi(a, N).T, tpi(involute(a), N)):
            report["failures"].append(name)
    if sigma.lower == pi.upper:
        res = compose(sigma, pi)
        report["loops"] = res.loops
        if not np.array_equal(Tp @ Ts, N ** res.loops * tpi(res.partition, N)):
            report["failures"].append("composition")
    report["passed"] = not report["failures"]
    return report


# -- Gram and Weingarten --------------------------------------------------------


def basis(fam, word):
    fam, word = _family_word(fam, word)
    return enumerate_partitions(fam, "", word)


def _gram_entries(parts, N):
    if not parts:
        return []
    counts = join_counts(parts)
    return [[N ** int(c) for c in row] for row in counts.tolist()]


def gram(fam, word, N):
    fam, word = _family_word(fam, word)
    parts = tuple(enumerate_partitions(fam, "", word))
    return PartitionMatrix(fam, word, N, parts, _gram_entries(parts, N))


@lru_cache(maxsize=256)
def _weingarten_cached(fam, word, N):
    parts = tuple(enumerate_partitions(fam, "", word))
    G = _gram_entries(parts, N)
    if not parts:
        return parts, G, []
    try:
        W = exact.inverse(G)
    except exact.SingularMatrixError:
        W = exact.pinv(G)
    return parts, G, W


def weingarten_matrix(fam, word, N):
    """Exact inverse of the Gram matrix, or its Moore-Penrose inverse when singular."""
    fam, word = _family_word(fam, word)
    parts, _, W = _weingarten_cached(fam, word, N)
    return PartitionMatrix(fam, word, N, parts, W)


def gram_determinant(k, N):
    """det of the Gram matrix over P(k) at N."""
    return exact.det(gram("P", k, N).entries)


def lindstrom_product(k, N):
    """prod over pi in P(k) of N!/(N-|pi|)! (zero when some |pi| > N)."""
    out = 1
    for pi in enumerate_partitions("P", "", UNCOLORED * k):
        b = pi.block_count
        if b > N:
            return Fraction(0)
        out *= math.perm(N, b)
    return Fraction(out)


# -- integration ----------------------------------------------------------------


def _delta_vector(parts, idx):
    if not parts:
        return []
    lab = np.array([p.labels for p in parts], dtype=np.int32)
    col = kernels.delta_table(lab, np.array([idx], dtype=np.int64))[:, 0]
    return [int(x) for x in col]


def _check_monomial(word, i, j, N, M=None):
    i, j = tuple(int(x) for x in i), tuple(int(x) for x in j)
    if len(i) != len(word) or len(j) != len(word):
        raise StructureError(f"index tuples of length {len(i)}/{len(j)} for a word of length {len(word)}")
    for x in i:
        if not 1 <= x <= (M if M is not None else N):
            raise DomainError(f"row index {x} out of range")
    for x in j:
        if not 1 <= x <= N:
            raise DomainError(f"column index {x} out of range")
    return i, j


def _bilinear(a, W, b):
    total = Fraction(0)
    for p, ap in enumerate(a):
        if not ap:
            continue
        row = W[p]
        for q, bq in enumerate(b):
            if bq:
                total += ap * bq * row[q]
    return total


def integrate(fam, N, word, i, j):
    """Haar integral of u_{i1 j1}^{e1} ... u_{ik jk}^{ek} (indices 1-based)."""
    fam, word = _family_word(fam, word)
    i, j = _check_monomial(word, i, j, N)
    parts, _, W = _weingarten_cached(fam, word, N)
    if not parts:
        return Fraction(0)
    return _bilinear(_delta_vector(parts, i), W, _delta_vector(parts, j))


def _kernel_sign(word, idx):
    if not idx:
        return 1
    ker = SetPartition.make("", UNCOLORED * len(idx), kernels.kernel_labels(np.array([idx]))[0].tolist())
    if not ker.has_even_blocks():
        return 0
    return signature(ker)


def integrate_twisted(fam, N, word, i, j):
    """Integral over the twisted version: deltas replaced by signed deltas."""
    fam, word = _family_word(fam, word)
    if not fam.even_blocks:
        raise DomainError(f"family {fam} has odd blocks; no twisted version")
    i, j = _check_monomial(word, i, j, N)
    parts, _, W = _weingarten_cached(fam, word, N)
    if not parts:
        return Fraction(0)
    a = _delta_vector(parts, i)
    b = _delta_vector(parts, j)
    if not any(a) or not any(b):
        return Fraction(0)
    # a nonzero delta forces ker(i) >= some even partition, so ker(i) is even
    return _kernel_sign(word, i) * _kernel_sign(word, j) * _bilinear(a, W, b)


def diagonal_moment(fam, N, word, twisted=False):
    """Sum over all i of the integral of u_{i1 i1}^{e1} ... u_{ik ik}^{ek}."""
    f = integrate_twisted if twisted else integrate
    word = parse_word(word)
    total = Fraction(0)
    for idx in itertools.product(range(1, N + 1), repeat=len(word)):
        total += f(fam, N, word, idx, idx)
    return total


# -- oracles --------------------------------------------------------------------


def symmetric_group_oracle(N, i, j, brute=False):
    """Integral of u_{i1 j1} ... u_{ik jk} over S_N."""
    i, j = tuple(i), tuple(j)
    if len(i) != len(j):
        raise StructureError("index tuples differ in length")
    if not brute:
        ki = kernels.kernel_labels(np.array([i], dtype=np.int64))[0].tolist() if i else []
        kj = kernels.kernel_labels(np.array([j], dtype=np.int64))[0].tolist() if j else []
        if ki != kj:
            return Fraction(0)
        b = max(ki) + 1 if ki else 0
        return Fraction(math.factorial(N - b), math.factorial(N))
    if N > 8:
        raise SizeLimitError("brute force over S_N is limited to N <= 8")
    hits = 0
    for perm in itertools.permutations(range(1, N + 1)):
        # permutation matrix u_{ab} = 1 iff perm(b) = a
        if all(perm[b - 1] == a for a, b in zip(i, j)):
            hits += 1
    return Fraction(hits, math.factorial(N))


def hyperoctahedral_oracle(N, i, j):
    """Exact average of u_{i1 j1} ... u_{ik jk} over signed permutation matrices."""
    if N > 4:
        raise SizeLimitError("brute force over the hyperoctahedral group is limited to N <= 4")
    i, j = tuple(i), tuple(j)
    total = 0
    count = 0
    for perm in itertools.permutations(range(1, N + 1)):
        for signs in itertools.product((1, -1), repeat=N):
            count += 1
            val = 1
            for a, b in zip(i, j):
                if perm[b - 1] != a:
                    val = 0
                    break
                val *= signs[a - 1]
            total += val
    return Fraction(total, count)


# -- partial isometry spaces -----------------------------------------------------


def partial_isometry_integrate(fam, L, M, N, word, i, j):
    """Integral over the space of partial isometries of rank L in M_{M x N}."""
    fam, word = _family_word(fam, word)
    if L > min(M, N):
        raise DomainError("need L <= min(M, N)")
    i, j = _check_monomial(word, i, j, N, M)
    parts, _, WM = _weingarten_cached(fam, word, M)
    if not parts:
        return Fraction(0)
    _, _, WN = _weingarten_cached(fam, word, N)
    x = exact.matvec(WM, _delta_vector(parts, i))
    y = exact.matvec(WN, _delta_vector(parts, j))
    GL = _gram_entries(parts, L)
    return sum((x[p] * GL[p][q] * y[q] for p in range(len(parts)) for q in range(len(parts)) if x[p] and y[q]), Fraction(0))


def chi_e_moments(fam, K, L, M, N, s):
    """Moment of order s of the sum of coordinates over a K x L corner."""
    fam, word = _family_word(fam, s)
    if K > min(M, N):
        raise DomainError("need K <= min(M, N)")
    parts, _, WM = _weingarten_cached(fam, word, M)
    if not parts:
        return Fraction(0)
    _, _, WN = _weingarten_cached(fam, word, N)
    GK = _gram_entries(parts, K)
    GL = _gram_entries(parts, L)
    inner = exact.matmul(exact.matmul(WM, GL), WN)
    n = len(parts)
    return sum((GK[p][q] * inner[p][q] for p in range(n) for q in range(n)), Fraction(0))


def truncated_char_moment(fam, N, s, k):
    """Integral of (u_11 + ... + u_ss)^k, via Tr(W_{kN} G_{ks})."""
    fam, word = _family_word(fam, k)
    if not 0 <= s <= N:
        raise DomainError("need 0 <= s <= N")
    parts, _, W = _weingarten_cached(fam, word, N)
    if not parts:
        return Fraction(0)
    Gs = _gram_entries(parts, s)
    n = len(parts)
    return sum((W[p][q] * Gs[q][p] for p in range(n) for q in range(n)), Fraction(0))
