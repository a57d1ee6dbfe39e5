"""Exact linear algebra over the rationals.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
Everything here is exact; nothing is converted to floating point.
"""

from fractions import Fraction


class SingularMatrixError(ZeroDivisionError):
    pass


def as_fractions(M):
    return [[Fraction(x) for x in row] for row in M]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def matmul(A, B):
    if not A or not B:
        return [[] for _ in A]
    Bt = transpose(B)
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in Bt])
    return out


def matvec(A, v):
    return [sum((a * x for a, x in zip(row, v) if a and x), Fraction(0)) for row in A]


def trace(M):
    return sum((M[i][i] for i in range(len(M))), Fraction(0))


def rref(M):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    R = as_fractions(M)
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        p = R[r][c]
        if p != 1:
            R[r] = [x / p for x in R[r]]
        row_r = R[r]
        nz = [(k, x) for k, x in enumerate(row_r) if x]
        for i in range(nrows):
            f = R[i][c]
            if i != r and f != 0:
                row_i = R[i]
                for k, x in nz:
                    row_i[k] -= f * x
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M):
    return len(rref(M)[1])


def det(M):
    """Determinant; fraction-free Bareiss elimination for integer input."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    if all(isinstance(x, int) for row in M for x in row):
        A = [list(row) for row in M]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if A[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
                if swap is None:
                    return Fraction(0)
                A[k], A[swap] = A[swap], A[k]
                sign = -sign
            akk = A[k][k]
            for i in range(k + 1, n):
                aik = A[i][k]
                row_i = A[i]
                row_k = A[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
                row_i[k] = 0
            prev = akk
        return Fraction(sign * A[n - 1][n - 1])
    A = as_fractions(M)
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            result = -result
        akk = A[k][k]
        result *= akk
        for i in range(k + 1, n):
            f = A[i][k] / akk
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return result


def inverse(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in R]


def pinv(M):
    """Moore-Penrose inverse through a full-rank factorization M = F C.

    For a rational matrix the pseudo-inverse is again rational:
    M+ = C^T (C C^T)^-1 (F^T F)^-1 F^T.
    """
    if not M or not M[0]:
        return [[Fraction(0)] * len(M) for _ in range(len(M[0]) if M else 0)]
    R, pivots = rref(M)
    r = len(pivots)
    if r == 0:
        return [[Fraction(0)] * len(M) for _ in range(len(M[0]))]
    C = R[:r]
    F = [[Fraction(row[c]) for c in pivots] for row in M]
    Ct = transpose(C)
    Ft = transpose(F)
    left = inverse(matmul(C, Ct))
    right = inverse(matmul(Ft, F))
    return matmul(matmul(Ct, left), matmul(right, Ft))


def is_reflexive_inverse(G, W):
    """True iff G W G = G and W G W = W exactly."""
    GW = matmul(G, W)
    return matmul(GW, G) == as_fractions(G) and matmul(matmul(W, G), W) == as_fractions(W)
