"""Matrix models: magic unitaries from Hadamard and Weyl matrices, the
antidiagonal half-liberated models, correlation tensors and their
stationarity, and character moments of the Hopf image.

A model sends the N x N standard coordinates u_ij to K x K matrices. Point
models are a fixed grid of matrices; integrated models depend on a random
unitary parameter and carry a sampler plus, where available, an exact
integration hook built on the Weingarten module.

Multi-indices (i_1..i_p) are flattened row-major, so a correlation tensor
is an (N^p, N^p) complex array indexed by (i, j).
"""

import csv
import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, SizeLimitError, StructureError
from .weingarten import integrate, weingarten_matrix

DEFAULT_TOL = float(os.environ.get("EASYQG_TOL", "1e-9"))
EIGEN_TOL = 1e-6
TENSOR_SIDE_LIMIT = 10 ** 4


# -- Hadamard and Fourier matrices ------------------------------------------------


def fourier_matrix(orders):
    """F_{N_1} (x) ... (x) F_{N_k}, with F_N[a, b] = exp(2 pi i a b / N)."""
    if isinstance(orders, int):
        orders = [orders]
    F = np.ones((1, 1), dtype=complex)
    for n in orders:
        if n < 1:
            raise DomainError("cyclic orders must be positive")
        a = np.arange(n)
        F = np.kron(F, np.exp(2j * np.pi * np.outer(a, a) / n))
    return F


def hadamard_residuals(H):
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise StructureError("a Hadamard matrix must be square")
    N = H.shape[0]
    modulus = float(np.max(np.abs(np.abs(H) - 1))) if N else 0.0
    ortho = float(np.max(np.abs(H @ H.conj().T - N * np.eye(N)))) if N else 0.0
    return modulus, ortho


def validate_hadamard(H, tol=DEFAULT_TOL):
    H = np.asarray(H, dtype=complex)
    modulus, ortho = hadamard_residuals(H)
    if modulus > tol or ortho > tol * H.shape[0]:
        raise DomainError(f"not a complex Hadamard matrix (modulus residual {modulus:.3g}, "
                          f"orthogonality residual {ortho:.3g})")
    return H


# -- finite abelian groups and Weyl matrices ------------------------------------


@dataclass(frozen=True)
class FiniteAbelianGroup:
    cyclic_orders: tuple

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if not orders or any(n < 2 for n in orders):
            raise DomainError("cyclic orders must be integers >= 2")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self):
        return int(np.prod(self.cyclic_orders))

    def elements(self):
        return list(itertools.product(*(range(n) for n in self.cyclic_orders)))

    def index(self, g):
        out = 0
        for x, n in zip(g, self.cyclic_orders):
            out = out * n + (x % n)
        return out

    def add(self, g, h):
        return tuple((x + y) % n for x, y, n in zip(g, h, self.cyclic_orders))

    def coupling(self, i, b):
        return np.exp(2j * np.pi * sum(x * y / n for x, y, n in zip(i, b, self.cyclic_orders)))


def weyl_matrices(group):
    """W[(i, a)] : e_b -> <i, b> e_{a+b}, as a dict keyed by element pairs."""
    n = group.order
    if n > 16:
        raise SizeLimitError("Weyl matrices are limited to groups of order <= 16")
    elems = group.elements()
    out = {}
    for i in elems:
        for a in elems:
            W = np.zeros((n, n), dtype=complex)
            for b in elems:
                W[group.index(group.add(a, b)), group.index(b)] = group.coupling(i, b)
            out[(i, a)] = W
    return out


# -- models ---------------------------------------------------------------------


@dataclass
class MagicModel:
    """N x N grid of K x K matrices, fixed or depending on a random parameter.

    ``vectors`` (point models) or ``vector_fn`` (integrated models) give unit
    vectors xi_ij with u_ij -> Proj(xi_ij); the correlation tensors then only
    need scalar products.
    """

    N: int
    K: int
    kind: str
    name: str = ""
    entries: np.ndarray = None
    vectors: np.ndarray = None
    vector_fn: object = None
    entry_fn: object = None
    sampler: object = None
    exact_hook: object = None
    self_adjoint: bool = True
    meta: dict = field(default_factory=dict)

    def point_entries(self, param=None):
        if self.kind == "point":
            if self.entries is None:
                self.entries = _projections_from_vectors(self.vectors)
            return self.entries
        if param is None:
            raise DomainError("an integrated model needs a parameter sample")
        if self.entry_fn is not None:
            return self.entry_fn(param)
        return _projections_from_vectors(self.vector_fn(param))


def _projections_from_vectors(vecs):
    vecs = np.asarray(vecs, dtype=complex)
    return np.einsum("...a,...b->...ab", vecs, vecs.conj())


def point_model(entries, name="point"):
    entries = np.asarray(entries, dtype=complex)
    if entries.ndim != 4 or entries.shape[0] != entries.shape[1] or entries.shape[2] != entries.shape[3]:
        raise StructureError("entries must have shape (N, N, K, K)")
    return MagicModel(N=entries.shape[0], K=entries.shape[2], kind="point", name=name, entries=entries)


def projection_grid(H):
    """Unit vectors (H_i / H_j) / sqrt(N), without any validation."""
    H = np.asarray(H, dtype=complex)
    N = H.shape[0]
    return (H[:, None, :] / H[None, :, :]) / np.sqrt(N)


def hadamard_model(H, tol=DEFAULT_TOL):
    """u_ij -> Proj(H_i / H_j) for a complex Hadamard matrix H."""
    H = validate_hadamard(H, tol)
    N = H.shape[0]
    return MagicModel(N=N, K=N, kind="point", name="hadamard", vectors=projection_grid(H))


def weyl_vectors(group, U, weyls=None):
    """xi[(i,a), (j,b)] = vec(W_ia U W_jb^*) / sqrt(n)."""
    if weyls is None:
        weyls = weyl_matrices(group)
    keys = sorted(weyls, key=lambda x: (group.index(x[0]), group.index(x[1])))
    Ws = np.array([weyls[k] for k in keys])
    n = group.order
    U = np.asarray(U, dtype=complex)
    # broadcast over a leading batch axis if present
    M = np.einsum("xab,...bc,ydc->...xyad", Ws, U, Ws.conj())
    shape = M.shape[:-2] + (n * n,)
    return M.reshape(shape) / np.sqrt(n)


def sample_su2(rng, size):
    q = rng.standard_normal((size, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    a, b, c, d = q.T
    U = np.empty((size, 2, 2), dtype=complex)
    U[:, 0, 0] = a + 1j * b
    U[:, 0, 1] = c + 1j * d
    U[:, 1, 0] = -c + 1j * d
    U[:, 1, 1] = a - 1j * b
    return U


def sample_unitary(rng, n, size):
    Z = (rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R, axis1=1, axis2=2)
    return Q * (d / np.abs(d))[:, None, :]


def weyl_model(group, parameter="unitary"):
    """Weyl model over a parameter space of n x n unitaries (``"su2"`` or ``"unitary"``)."""
    n = group.order
    if parameter == "su2" and n != 2:
        raise DomainError("the SU(2) parameter space needs a group of order 2")
    if parameter not in ("su2", "unitary"):
        raise DomainError(f"unknown parameter space {parameter!r}")
    weyls = weyl_matrices(group)

    def vector_fn(U):
        return weyl_vectors(group, U, weyls)

    def sampler(rng, size):
        return sample_su2(rng, size) if parameter == "su2" else sample_unitary(rng, n, size)

    model = MagicModel(N=n * n, K=n * n, kind="integrated", name=f"weyl-{parameter}",
                       vector_fn=vector_fn, sampler=sampler,
                       meta={"group": group, "weyls": weyls})
    model.exact_hook = lambda word: _weyl_exact_tensor(model, len(word))
    return model


def pauli_model():
    return weyl_model(FiniteAbelianGroup((2,)), "su2")


# -- correlation tensors ----------------------------------------------------------


def parse_exponents(word):
    """'1'/'o' for u, '*'/'b' for u^*; an int p means p plain letters."""
    if isinstance(word, int):
        if word < 1:
            raise DomainError("word length must be positive")
        return "1" * word
    out = []
    for ch in str(word):
        if ch in "1o":
            out.append("1")
        elif ch in "*b":
            out.append("*")
        elif ch in " ,":
            continue
        else:
            raise StructureError(f"invalid exponent {ch!r} in {word!r}")
    if not out:
        raise DomainError("word length must be positive")
    return "".join(out)


def _pairs_to_multi(T, N, p):
    # axes (x_1, ..., x_p) with x = i * N + j  ->  rows (i_1..i_p), columns (j_1..j_p)
    T = T.reshape((N, N) * p)
    order = [2 * r for r in range(p)] + [2 * r + 1 for r in range(p)]
    return T.transpose(order).reshape(N ** p, N ** p)


def _rank_one_traces(vecs, p, K):
    """(1/K) prod_r <xi_r, xi_{r+1}> (cyclic) for every tuple (x_1..x_p)."""
    N = vecs.shape[0]
    X = vecs.reshape(N * N, -1)
    G = X.conj() @ X.T
    M = N * N
    if p == 1:
        return np.diag(G).copy() / K
    out = G.copy()
    for r in range(2, p):
        out = out[..., None] * G.reshape((1,) * (r - 1) + (M, M))
    # close the cycle: factor <xi_p, xi_1>
    idx_shape = [1] * p
    idx_shape[0] = M
    idx_shape[-1] = M
    out = out * G.T.reshape(idx_shape)
    return out / K


def _rank_one_traces_batch(vecs, p, K):
    """Batched version: vecs has shape (B, N, N, K); returns (B, M, ..., M)."""
    B, N = vecs.shape[0], vecs.shape[1]
    X = vecs.reshape(B, N * N, -1)
    G = np.einsum("bxk,byk->bxy", X.conj(), X)
    M = N * N
    if p == 1:
        return np.einsum("bxx->bx", G) / K
    out = G.copy()
    for r in range(2, p):
        out = out[..., None] * G.reshape((B,) + (1,) * (r - 1) + (M, M))
    idx_shape = [B] + [1] * p
    idx_shape[1] = M
    idx_shape[-1] = M
    out = out * np.transpose(G, (0, 2, 1)).reshape(idx_shape)
    return out / K


def _generic_traces(entries, word, K):
    N = entries.shape[0]
    M = N * N
    mats = entries.reshape(M, K, K)
    adj = mats.conj().transpose(0, 2, 1)
    prod = None
    for e in word:
        step = mats if e == "1" else adj
        if prod is None:
            prod = step.copy()
        else:
            prod = np.einsum("...ab,xbc->...xac", prod, step)
    return np.einsum("...aa->...", prod) / K


def _check_side(N, p):
    if N ** p > TENSOR_SIDE_LIMIT:
        raise SizeLimitError(f"N^p = {N ** p} exceeds the correlation tensor side limit")


def correlation_tensor(model, word, mode="exact", samples=10000, seed=0, batch=2000, return_stderr=False):
    """T_e[(i_1..i_p), (j_1..j_p)] = (tr (x) integral)(u_{i1 j1}^{e1} ... u_{ip jp}^{ep})."""
    word = parse_exponents(word)
    p = len(word)
    N, K = model.N, model.K
    _check_side(N, p)
    if model.kind == "point":
        if model.vectors is not None and model.self_adjoint:
            T = _rank_one_traces(np.asarray(model.vectors), p, K)
        else:
            T = _generic_traces(model.point_entries(), word, K)
        T = _pairs_to_multi(T, N, p)
        return (T, np.zeros(T.shape)) if return_stderr else T
    if mode == "exact":
        if model.exact_hook is None:
            raise DomainError(f"model {model.name!r} has no exact integration hook")
        T = model.exact_hook(word)
        return (T, np.zeros(T.shape)) if return_stderr else T
    if mode != "mc":
        raise DomainError(f"unknown mode {mode!r}")
    return _monte_carlo_tensor(model, word, samples, seed, batch, return_stderr)


def _monte_carlo_tensor(model, word, samples, seed, batch, return_stderr):
    # one Philox stream per batch, spawned from the seed: the result depends
    # on (seed, samples, batch) only
    if model.sampler is None:
        raise DomainError(f"model {model.name!r} cannot be sampled")
    N, K, p = model.N, model.K, len(word)
    nb = -(-samples // batch)
    children = np.random.SeedSequence(seed).spawn(nb)
    total = None
    total_sq = None
    done = 0
    for b, child in enumerate(children):
        size = min(batch, samples - done)
        rng = np.random.Generator(np.random.Philox(child))
        U = model.sampler(rng, size)
        if model.vector_fn is not None and model.self_adjoint:
            vals = _rank_one_traces_batch(model.vector_fn(U), p, K)
        else:
            vals = np.array([_generic_traces(model.entry_fn(u), word, K) for u in U])
        vals = vals.reshape(size, -1)
        s = vals.sum(axis=0)
        sq = (np.abs(vals - vals.mean(axis=0)) ** 2).sum(axis=0) + size * np.abs(vals.mean(axis=0)) ** 2
        total = s if total is None else total + s
        total_sq = sq if total_sq is None else total_sq + sq
        done += size
    mean = total / samples
    var = np.maximum(total_sq / samples - np.abs(mean) ** 2, 0.0) * samples / max(samples - 1, 1)
    T = _pairs_to_multi(mean.reshape((N * N,) * p), N, p)
    if not return_stderr:
        return T
    se = _pairs_to_multi(np.sqrt(var / samples).reshape((N * N,) * p), N, p)
    return T, se


# -- exact hook for Weyl models -------------------------------------------------


def _cycle_trace(mats, perm):
    out = 1.0 + 0j
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        M = None
        r = start
        while not seen[r]:
            seen[r] = True
            M = mats[r] if M is None else M @ mats[r]
            r = perm[r]
        out *= np.trace(M)
    return out


@lru_cache(maxsize=32)
def _unitary_weingarten(n, p):
    """Weingarten matrix of U_n on the word o^p b^p, with each basis pairing
    turned into the permutation sigma joining letter r to letter p + sigma(r)."""
    Wm = weingarten_matrix("MatchP2", "o" * p + "b" * p, n)
    perms = []
    for pi in Wm.basis:
        sigma = [None] * p
        for block in pi.blocks:
            a, b = sorted(block)
            sigma[a] = b - p
        perms.append(tuple(sigma))
    W = np.array([[float(x) for x in row] for row in Wm.entries])
    return perms, W


def unitary_trace_integral(As, Bs, n):
    """Exact integral over U_n of prod_r Tr(A_r U B_r U^*).

    Expanding the traces gives monomials of degree (p, p) in the entries
    of U; summing their Weingarten integrals collapses to cycle traces.
    """
    p = len(As)
    perms, W = _unitary_weingarten(n, p)
    inv = [tuple(s.index(r) for r in range(p)) for s in perms]
    alpha = np.array([_cycle_trace(As, s) for s in perms])
    beta = np.array([_cycle_trace(Bs, t) for t in inv])
    return alpha @ W @ beta


def _weyl_exact_tensor(model, p):
    N = model.N
    _check_side(N, p)
    group = model.meta["group"]
    weyls = model.meta["weyls"]
    n = group.order
    keys = sorted(weyls, key=lambda x: (group.index(x[0]), group.index(x[1])))
    Ws = [weyls[k] for k in keys]
    # magic index x = (ia, jb) -> row Weyl matrix Ws[ia], column Weyl matrix Ws[jb]
    labels = [(r, c) for r in range(N) for c in range(N)]
    M = len(labels)
    AA = {}
    BB = {}
    for x, (r1, c1) in enumerate(labels):
        for y, (r2, c2) in enumerate(labels):
            AA[x, y] = Ws[r1].conj().T @ Ws[r2]
            BB[x, y] = Ws[c2].conj().T @ Ws[c1]
    T = np.empty((M,) * p, dtype=complex)
    for xs in itertools.product(range(M), repeat=p):
        As = [AA[xs[r], xs[(r + 1) % p]] for r in range(p)]
        Bs = [BB[xs[r], xs[(r + 1) % p]] for r in range(p)]
        T[xs] = unitary_trace_integral(As, Bs, n) / (model.K * n ** p)
    return _pairs_to_multi(T, N, p)


# -- antidiagonal models ----------------------------------------------------------


def antidiagonal_model(N, variant="O"):
    """u_ij -> [[0, v_ij], [conj(v_ij), 0]] (variant "O") or [[0, v_ij], [w_ij, 0]]
    (variant "U"), with v, w independent Haar unitaries in U_N."""
    if variant not in ("O", "U"):
        raise DomainError("variant must be 'O' or 'U'")
    if N > 4:
        raise SizeLimitError("exact integration for antidiagonal models is limited to N <= 4")

    def sampler(rng, size):
        if variant == "O":
            return sample_unitary(rng, N, size)
        return np.stack([sample_unitary(rng, N, size), sample_unitary(rng, N, size)], axis=1)

    def entry_fn(param):
        if variant == "O":
            v, w = param, param.conj()
        else:
            v, w = param[0], param[1]
        E = np.zeros((N, N, 2, 2), dtype=complex)
        E[:, :, 0, 1] = v
        E[:, :, 1, 0] = w
        return E

    model = MagicModel(N=N, K=2, kind="integrated", name=f"antidiagonal-{variant}",
                       entry_fn=entry_fn, sampler=sampler, self_adjoint=False,
                       meta={"variant": variant})
    model.exact_hook = lambda word: _antidiagonal_exact_tensor(N, variant, word)
    return model


def _letter_monomials(variant, i, j, e):
    """The off-diagonal entries (top-right, bottom-left) of u_ij^e as monomials.

    A monomial factor is (copy, i, j, conj); copy 0 is v and copy 1 is w.
    """
    if variant == "O":
        v, vb = (0, i, j, False), (0, i, j, True)
        return v, vb
    v, w = (0, i, j, False), (1, i, j, False)
    if e == "1":
        return v, w
    # adjoint of [[0, v], [w, 0]] is [[0, conj(w)], [conj(v), 0]]
    return (1, i, j, True), (0, i, j, True)


@lru_cache(maxsize=None)
def _monomial_integral(N, factors):
    total = Fraction(1)
    for copy in (0, 1):
        fs = [f for f in factors if f[0] == copy]
        if not fs:
            continue
        word = "".join("b" if f[3] else "o" for f in fs)
        if word.count("o") != word.count("b"):
            return Fraction(0)
        total *= integrate("MatchP2", N, word, [f[1] for f in fs], [f[2] for f in fs])
        if not total:
            return total
    return total


def _antidiagonal_exact_tensor(N, variant, word):
    p = len(word)
    _check_side(N, p)
    T = np.zeros((N ** p, N ** p))
    if p % 2:
        return T
    rng = list(itertools.product(range(1, N + 1), repeat=p))
    for a, ii in enumerate(rng):
        for b, jj in enumerate(rng):
            top, bottom = [], []
            for r in range(p):
                tr, bl = _letter_monomials(variant, ii[r], jj[r], word[r])
                # rows of the product alternate between the two off-diagonal slots
                if r % 2 == 0:
                    top.append(tr)
                    bottom.append(bl)
                else:
                    top.append(bl)
                    bottom.append(tr)
            val = _monomial_integral(N, tuple(sorted(top))) + _monomial_integral(N, tuple(sorted(bottom)))
            T[a, b] = float(val / 2)
    return T


# -- diagnostics ----------------------------------------------------------------


def is_magic(model, param=None, tol=DEFAULT_TOL, seed=0):
    """Projection, self-adjointness and row/column sum residuals."""
    if model.kind != "point" and param is None:
        if model.sampler is None:
            raise DomainError("integrated model without a sampler or a parameter")
        param = model.sampler(np.random.Generator(np.random.Philox(seed)), 1)[0]
    E = np.asarray(model.point_entries(param), dtype=complex)
    N, K = E.shape[0], E.shape[2]
    I = np.eye(K)
    proj = float(np.max(np.abs(np.einsum("xyab,xybc->xyac", E, E) - E)))
    herm = float(np.max(np.abs(E - E.conj().transpose(0, 1, 3, 2))))
    rows = float(np.max(np.abs(E.sum(axis=1) - I)))
    cols = float(np.max(np.abs(E.sum(axis=0) - I)))
    worst = max(proj, herm, rows, cols)
    return {"projection": proj, "self_adjoint": herm, "row_sums": rows, "column_sums": cols,
            "tol": tol, "passed": worst <= tol}


def is_biunitary(model, param=None, tol=DEFAULT_TOL, seed=0):
    """u and its transpose are unitary, as block matrices in M_N(M_K)."""
    if model.kind != "point" and param is None:
        param = model.sampler(np.random.Generator(np.random.Philox(seed)), 1)[0]
    E = np.asarray(model.point_entries(param), dtype=complex)
    N, K = E.shape[0], E.shape[2]
    big = E.transpose(0, 2, 1, 3).reshape(N * K, N * K)
    bigt = E.transpose(1, 2, 0, 3).reshape(N * K, N * K)
    I = np.eye(N * K)
    res = max(float(np.max(np.abs(big @ big.conj().T - I))), float(np.max(np.abs(big.conj().T @ big - I))),
              float(np.max(np.abs(bigt @ bigt.conj().T - I))), float(np.max(np.abs(bigt.conj().T @ bigt - I))))
    return {"residual": res, "tol": tol, "passed": res <= tol}


def stationarity_residual(T):
    return float(np.max(np.abs(T @ T - T))) if T.size else 0.0


def stationarity_check(model, pmax, mode="exact", tol=DEFAULT_TOL, words=None, **mc):
    """Residual ||T_e^2 - T_e|| for the words e of length <= pmax.

    Models with self-adjoint entries only need the all-plain words.
    """
    if words is None:
        words = []
        for p in range(1, pmax + 1):
            if model.self_adjoint:
                words.append("1" * p)
            else:
                words.extend("".join(w) for w in itertools.product("1*", repeat=p))
    rows = []
    for w in words:
        T = correlation_tensor(model, w, mode=mode, **mc)
        res = stationarity_residual(T)
        rows.append({"word": w, "residual": res, "passed": res < tol})
    return {"tol": tol, "passed": all(r["passed"] for r in rows), "rows": rows}


def cesaro_trace(T, rmax=64):
    """(1/R) sum_{r=1}^{R} Tr(T^r) for R = rmax."""
    P = np.eye(T.shape[0], dtype=T.dtype)
    total = 0.0
    for _ in range(rmax):
        P = P @ T
        total += np.trace(P).real
    return total / rmax


def hopf_character_moment(model, p, mode="exact", tol=EIGEN_TOL, check_cesaro=True, **mc):
    """Multiplicity of the eigenvalue 1 of T_p (the Cesaro limit of Tr(T_p^r))."""
    T = correlation_tensor(model, p, mode=mode, **mc)
    H = (T + T.conj().T) / 2
    ev = np.linalg.eigvalsh(H)
    radius = float(np.max(np.abs(ev))) if ev.size else 0.0
    if radius > 1 + tol:
        raise DomainError(f"spectral radius {radius:.6g} exceeds 1; the model is invalid")
    count = int(np.sum(np.abs(ev - 1) < tol))
    if check_cesaro:
        ces = cesaro_trace(T)
        if abs(ces - count) > 1e-6 * max(1, count) and stationarity_residual(T) < tol:
            raise DomainError(f"Cesaro estimate {ces:.6g} disagrees with the eigenvalue count {count}")
    return count


# -- input parsing ----------------------------------------------------------------


def parse_complex(text):
    """'a+bi', '3', '-i', or 'exp(p/q)' meaning exp(2 pi i p / q)."""
    s = str(text).strip().replace(" ", "")
    if s.startswith("exp(") and s.endswith(")"):
        frac = Fraction(s[4:-1])
        return complex(np.exp(2j * np.pi * float(frac)))
    s = s.replace("i", "j")
    if s.endswith("j") and (len(s) == 1 or s[-2] in "+-"):
        s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError:
        raise StructureError(f"cannot parse complex entry {text!r}") from None


def load_matrix(path):
    """Read a square complex matrix from a .json (list of rows) or .csv file."""
    if str(path).endswith(".json"):
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, dict):
            data = data.get("matrix", data.get("H"))
        rows = [[parse_complex(x) for x in row] for row in data]
    else:
        with open(path, newline="") as fh:
            rows = [[parse_complex(x) for x in row] for row in csv.reader(fh) if row]
    if not rows or any(len(r) != len(rows) for r in rows):
        raise StructureError("input matrix must be square and nonempty")
    return np.array(rows, dtype=complex)
