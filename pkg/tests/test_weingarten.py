import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from easyqg import exact
from easyqg.errors import DomainError, SizeLimitError, StructureError
from easyqg.partitions import SetPartition, enumerate_partitions
from easyqg.weingarten import (
    chi_e_moments,
    diagonal_moment,
    gram,
    gram_determinant,
    hyperoctahedral_oracle,
    integrate,
    integrate_twisted,
    lindstrom_product,
    parse_word,
    partial_isometry_integrate,
    symmetric_group_oracle,
    tpi,
    tpi_twisted,
    truncated_char_moment,
    weingarten_matrix,
)

F = Fraction
CROSS = SetPartition.make("--", "--", (0, 1, 1, 0))


# -- tensor maps -------------------------------------------------------------------


def test_tpi_identity_flip_and_cap():
    N = 3
    assert np.array_equal(tpi(SetPartition.identity("--"), N), np.eye(N * N, dtype=int))
    flip = tpi(CROSS, N)
    for i, j in itertools.product(range(N), repeat=2):
        e = np.zeros(N * N, dtype=int)
        e[i * N + j] = 1
        out = np.zeros(N * N, dtype=int)
        out[j * N + i] = 1
        assert np.array_equal(flip @ e, out)
    cap = tpi(SetPartition.make("", "--", (0, 0)), N)
    assert cap.shape == (N * N, 1)
    assert np.array_equal(cap[:, 0], np.eye(N, dtype=int).reshape(-1))


def test_twisted_flip():
    N = 3
    flip = tpi_twisted(CROSS, N)
    for i, j in itertools.product(range(N), repeat=2):
        col = flip[:, i * N + j]
        assert col[j * N + i] == (1 if i == j else -1)
        assert np.count_nonzero(col) == 1


def test_twisted_equals_plain_on_noncrossing_pairings():
    for word in (("--", "--"), ("", "----"), ("---", "---")):
        for pi in enumerate_partitions("NC2", *word):
            assert np.array_equal(tpi_twisted(pi, 2), tpi(pi, 2))
    with pytest.raises(DomainError):
        tpi_twisted(SetPartition.one_block("-", ""), 2)


def test_tensor_size_limit():
    with pytest.raises(SizeLimitError):
        tpi(SetPartition.one_block(0, 12), 10)


# -- Gram and Weingarten ----------------------------------------------------------------


def test_gram_examples():
    assert gram("P", 2, 3).entries == [[9, 3], [3, 3]]
    # [PAPER] printed G_3 with N = 2
    N = 2
    G3 = gram("P", 3, N).entries
    expected = [
        [N ** 3, N ** 2, N ** 2, N ** 2, N],
        [N ** 2, N ** 2, N, N, N],
        [N ** 2, N, N ** 2, N, N],
        [N ** 2, N, N, N ** 2, N],
        [N, N, N, N, N],
    ]
    assert G3 == expected
    # [DERIVED] both matching pairings of obob have two blocks and join to one
    for N in range(1, 5):
        assert gram("MatchNC2", "obob", N).entries == [[N * N, N], [N, N * N]]


def test_gram_is_symmetric_with_join_entries():
    g = gram("Peven", 6, 3)
    E = g.entries
    assert all(E[a][b] == E[b][a] for a in range(len(E)) for b in range(len(E)))


def test_gram_determinant_examples():
    assert gram_determinant(2, 3) == 18
    assert gram_determinant(3, 2) == 0
    assert gram_determinant(4, 5) == lindstrom_product(4, 5)


def test_gram_determinant_against_sympy():
    for k in range(1, 5):
        for N in (1, 2, 5):
            assert gram_determinant(k, N) == int(sympy.Matrix(gram("P", k, N).entries).det())


def test_weingarten_examples():
    for N in range(1, 6):
        assert weingarten_matrix("P2", 2, N).entries == [[F(1, N)]]
    for N in range(2, 6):
        W = weingarten_matrix("P2", 4, N).entries
        c = F(1, N * (N - 1) * (N + 2))
        want = [[c * (N + 1 if a == b else -1) for b in range(3)] for a in range(3)]
        assert W == want


def test_weingarten_against_sympy_inverse():
    for fam, word, N in (("P", 3, 4), ("NCeven", 6, 3), ("MatchP2", "oobb", 3), ("P2", 6, 3)):
        G = sympy.Matrix(gram(fam, word, N).entries)
        W = weingarten_matrix(fam, word, N).entries
        assert sympy.Matrix(W) == G.inv()


@pytest.mark.parametrize("fam,word,N", [("P", 3, 2), ("P", 4, 1), ("P2", 6, 2), ("NCeven", 6, 2), ("Peven", 4, 1), ("MatchP2", "ooobbb", 2)])
def test_singular_gram_generalized_inverse(fam, word, N):
    G = gram(fam, word, N).entries
    W = weingarten_matrix(fam, word, N).entries
    assert exact.det(G) == 0
    assert exact.is_reflexive_inverse(G, W)
    assert sympy.Matrix(W) == sympy.Matrix(G).pinv()


@pytest.mark.parametrize("k", range(1, 5))
def test_inverse_when_N_at_least_k(k):
    for N in range(k, k + 2):
        G = gram("P", k, N).entries
        W = weingarten_matrix("P", k, N).entries
        assert exact.matmul(W, G) == exact.identity(len(G))


# -- integration ---------------------------------------------------------------------------


def test_orthogonal_examples():
    for N in range(1, 6):
        assert integrate("P2", N, 2, (1, 1), (1, 1)) == F(1, N)
    for N in range(2, 6):
        assert integrate("P2", N, 4, (1,) * 4, (1,) * 4) == F(3, N * (N + 2))
    assert integrate("P2", 2, 4, (1,) * 4, (1,) * 4) == F(3, 8)


def test_symmetric_group_examples():
    assert integrate("P", 5, 1, (1,), (1,)) == F(1, 5)
    assert integrate("P", 5, 2, (1, 1), (1, 2)) == 0
    assert symmetric_group_oracle(4, (1, 2), (1, 2)) == F(1, 12)
    assert symmetric_group_oracle(4, (1, 2), (1, 2), brute=True) == F(1, 12)
    assert symmetric_group_oracle(4, (1, 1), (1, 2)) == 0
    assert symmetric_group_oracle(3, (), ()) == 1


def test_hyperoctahedral_examples():
    assert hyperoctahedral_oracle(2, (1, 1), (1, 1)) == F(1, 2)
    assert hyperoctahedral_oracle(3, (1, 2, 3), (1, 2, 3)) == 0
    assert hyperoctahedral_oracle(3, (1,) * 4, (1,) * 4) == integrate("Peven", 3, 4, (1,) * 4, (1,) * 4)
    with pytest.raises(SizeLimitError):
        hyperoctahedral_oracle(5, (1,), (1,))


def test_unitary_examples():
    for N in range(1, 5):
        assert integrate("MatchP2", N, "ob", (1, 1), (1, 1)) == F(1, N)
    # [DERIVED] E|u_11|^4 over U_N is 2/(N(N+1))
    for N in range(1, 5):
        assert integrate("MatchP2", N, "oobb", (1,) * 4, (1,) * 4) == F(2, N * (N + 1))
    assert integrate("MatchP2", 3, "oo", (1, 1), (1, 1)) == 0


def test_unitary_against_circle():
    # U_1 is the circle: E z^a conj(z)^b = [a == b]
    for word in ("o", "ob", "oob", "oobb", "obob", "ooo"):
        want = int(word.count("o") == word.count("b"))
        assert integrate("MatchP2", 1, word, (1,) * len(word), (1,) * len(word)) == want


def test_orthogonal_against_o2_cosine_moments():
    # O_2 contains rotations and reflections; u_11 u_12 moments by parametrised angle
    # [DERIVED] E cos^a sin^b = 0 unless a, b even, else (a-1)!!(b-1)!!/(a+b)!!
    def dfact(n):
        return math.prod(range(n, 0, -2)) if n > 0 else 1

    for a in range(0, 5):
        for b in range(0, 5 - a):
            if a + b == 0:
                continue
            want = F(dfact(a - 1) * dfact(b - 1), dfact(a + b)) if a % 2 == 0 and b % 2 == 0 else 0
            got = integrate("P2", 2, a + b, (1,) * (a + b), (1,) * a + (2,) * b)
            assert got == want, (a, b)


def test_biunitarity():
    for N in range(2, 5):
        for i, k in itertools.product(range(1, N + 1), repeat=2):
            total = sum(integrate("P2", N, 2, (i, k), (j, j)) for j in range(1, N + 1))
            assert total == int(i == k)
        assert sum(integrate("P", N, 1, (1,), (j,)) for j in range(1, N + 1)) == 1


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_integral_invariant_under_position_permutation(data):
    fam, word = data.draw(st.sampled_from([("P", "---"), ("P2", "----"), ("MatchP2", "oobb"), ("Peven", "----")]))
    N = 3
    k = len(word)
    i = data.draw(st.lists(st.integers(1, N), min_size=k, max_size=k))
    j = data.draw(st.lists(st.integers(1, N), min_size=k, max_size=k))
    perm = data.draw(st.permutations(range(k)))
    w2 = "".join(word[p] for p in perm)
    i2 = [i[p] for p in perm]
    j2 = [j[p] for p in perm]
    assert integrate(fam, N, word, i, j) == integrate(fam, N, w2, i2, j2)


def test_integrate_errors():
    with pytest.raises(StructureError):
        integrate("P2", 3, 2, (1,), (1, 1))
    with pytest.raises(DomainError):
        integrate("P2", 3, 2, (1, 4), (1, 1))
    with pytest.raises(StructureError):
        integrate("MatchP2", 3, "--", (1, 1), (1, 1))
    with pytest.raises(StructureError):
        parse_word("o*x")
    assert parse_word("oo*") == "ob"


# -- twisted integration -------------------------------------------------------------------


def test_twisted_all_equal_indices():
    for k in (2, 4):
        idx = (2,) * k
        assert integrate_twisted("P2", 3, k, idx, idx) == integrate("P2", 3, k, idx, idx)


def test_twisted_sign_on_anticommuting_monomial():
    # u11 u22 u12 u21 picks up a sign relative to the untwisted value
    i, j = (1, 2, 1, 2), (1, 2, 2, 1)
    plain = integrate("P2", 2, 4, i, j)
    twisted = integrate_twisted("P2", 2, 4, i, j)
    assert plain != 0 and twisted == -plain


def test_twisted_needs_even_family():
    with pytest.raises(DomainError):
        integrate_twisted("P", 3, 2, (1, 1), (1, 1))


@pytest.mark.parametrize("fam,word", [("P2", "----"), ("MatchP2", "obob"), ("Peven", "----"), ("MatchP2", "oobb")])
def test_twisting_invariance_of_diagonal_moments(fam, word):
    for N in (2, 3, 4):
        assert diagonal_moment(fam, N, word) == diagonal_moment(fam, N, word, twisted=True)


def test_diagonal_moment_counts_partitions():
    # for N >= k the main character moments are the partition counts
    for fam, k in (("P2", 4), ("P", 3), ("Peven", 4)):
        assert diagonal_moment(fam, k, k) == len(enumerate_partitions(fam, "", k))


# -- truncated characters and partial isometries --------------------------------------------


def test_truncated_character_equals_diagonal_moment():
    for fam, k in (("P2", 2), ("P", 3)):
        N = 3
        s = 2
        direct = F(0)
        for idx in itertools.product(range(1, s + 1), repeat=k):
            direct += integrate(fam, N, k, idx, idx)
        assert truncated_char_moment(fam, N, s, k) == direct


def test_truncated_character_at_s_equal_N():
    for fam in ("P2", "P", "Peven", "NC2"):
        for k in range(1, 5):
            assert truncated_char_moment(fam, 5, 5, k) == len(enumerate_partitions(fam, "", k))


def test_partial_isometry_reduces_to_group():
    for fam in ("P2", "P"):
        for k in range(1, 4):
            N = 3
            for i in itertools.product(range(1, N + 1), repeat=k):
                j = tuple(reversed(i))
                assert partial_isometry_integrate(fam, N, N, N, k, i, j) == integrate(fam, N, k, i, j)


def test_partial_isometry_examples():
    assert partial_isometry_integrate("P2", 2, 3, 3, 1, (1,), (1,)) == 0
    for N in range(1, 5):
        assert partial_isometry_integrate("P2", 1, 1, N, 2, (1, 1), (1, 1)) == F(1, N)
    with pytest.raises(DomainError):
        partial_isometry_integrate("P2", 4, 3, 3, 2, (1, 1), (1, 1))


def test_chi_e_examples():
    assert chi_e_moments("P2", 2, 2, 4, 4, 1) == 0
    for K, L, M, N in ((1, 1, 2, 2), (2, 3, 4, 5), (1, 2, 3, 3)):
        assert chi_e_moments("P", K, L, M, N, 1) == F(K * L, M * N)
    with pytest.raises(DomainError):
        chi_e_moments("P", 5, 1, 4, 4, 1)


def test_chi_e_full_corner():
    for fam in ("P2", "P"):
        for s in range(1, 4):
            assert chi_e_moments(fam, 4, 4, 4, 4, s) == truncated_char_moment(fam, 4, 4, s)
