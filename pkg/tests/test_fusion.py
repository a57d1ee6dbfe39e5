import itertools
import math

import pytest

from easyqg import fusion
from easyqg.errors import DomainError, SizeLimitError, StructureError
from easyqg.laws import LawSpec, law_moments


def catalan(k):
    return math.comb(2 * k, k) // (k + 1)


def test_fuse_examples():
    assert fusion.fuse("OPlus", 1, 1) == {0: 1, 2: 1}
    assert fusion.fuse("UPlus", "o", "b") == {"ob": 1, "": 1}
    assert fusion.fuse("UPlus", "o", "o") == {"oo": 1}
    assert fusion.fuse("SPlus", 1, 1) == {0: 1, 1: 1, 2: 1}


def test_fuse_errors():
    with pytest.raises(DomainError):
        fusion.fuse("HPlus", 1, 1)
    with pytest.raises(StructureError):
        fusion.fuse("OPlus", -1, 1)
    with pytest.raises(StructureError):
        fusion.fuse("UPlus", "ox", "o")


def test_fuse_symmetry():
    for a, b in itertools.product(range(6), repeat=2):
        assert fusion.fuse("OPlus", a, b) == fusion.fuse("OPlus", b, a)
        assert fusion.fuse("SPlus", a, b) == fusion.fuse("SPlus", b, a)
    words = ["".join(w) for n in range(4) for w in itertools.product("ob", repeat=n)]
    for a, b in itertools.product(words, repeat=2):
        left = fusion.fuse("UPlus", a, b)
        right = fusion.fuse("UPlus", fusion.bar(b), fusion.bar(a))
        assert {fusion.bar(r): m for r, m in left.items()} == right


def test_tensor_power_examples():
    assert fusion.tensor_power_decompose("OPlus", 4) == {4: 1, 2: 3, 0: 2}
    assert fusion.tensor_power_decompose("OPlus", 5) == {5: 1, 3: 4, 1: 5}
    assert fusion.tensor_power_decompose("UPlus", "ob") == {"ob": 1, "": 1}
    assert fusion.tensor_power_decompose("OPlus", 0) == {0: 1}


def test_tensor_power_limits():
    with pytest.raises(SizeLimitError):
        fusion.tensor_power_decompose("UPlus", "o" * 13)
    with pytest.raises(StructureError):
        fusion.tensor_power_decompose("OPlus", -1)


def test_dimension_examples():
    assert all(fusion.dimension("OPlus", k, 2) == k + 1 for k in range(12))
    assert fusion.dimension("OPlus", 2, 3) == 8
    assert fusion.dimension("SPlus", 2, 4) == 5
    assert all(fusion.dimension("SPlus", k, 4) == 2 * k + 1 for k in range(12))
    with pytest.raises(DomainError):
        fusion.dimension("SPlus", 1, 3)
    with pytest.raises(DomainError):
        fusion.dimension("OPlus", 1, 1)


def test_dimension_recursions():
    for N in range(2, 7):
        d = [fusion.dimension("OPlus", k, N) for k in range(10)]
        assert all(d[k + 1] == N * d[k] - d[k - 1] for k in range(1, 9))
    for N in range(4, 8):
        d = [fusion.dimension("SPlus", k, N) for k in range(10)]
        # r1 (x) rk = r(k-1) + rk + r(k+1)
        assert all(d[1] * d[k] == d[k - 1] + d[k] + d[k + 1] for k in range(1, 9))


def test_dimension_q_formula():
    import sympy

    # O+: q + 1/q = N and dim r_k = (q^(k+1) - q^(-k-1)) / (q - 1/q)
    for N in (3, 4, 7):
        q = (N + sympy.sqrt(N * N - 4)) / 2
        for k in range(8):
            val = sympy.simplify((q ** (k + 1) - q ** (-k - 1)) / (q - 1 / q))
            assert val == fusion.dimension("OPlus", k, N)
    # S+: q + 1/q = N - 2 and dim r_k = (q^(k+1) - q^(-k)) / (q - 1)
    for N in (5, 6, 9):
        M = N - 2
        q = (M + sympy.sqrt(M * M - 4)) / 2
        for k in range(8):
            val = sympy.simplify((q ** (k + 1) - q ** (-k)) / (q - 1))
            assert val == fusion.dimension("SPlus", k, N)


def test_dimension_counts():
    for fam in ("OPlus", "SPlus"):
        for k in range(7):
            dec = fusion.tensor_power_decompose(fam, k)
            assert sum(m * fusion.dimension(fam, r, 5) for r, m in dec.items()) == 5 ** k
    for n in range(5):
        for w in itertools.product("ob", repeat=n):
            dec = fusion.tensor_power_decompose("UPlus", "".join(w))
            assert sum(m * fusion.dimension("UPlus", r, 3) for r, m in dec.items()) == 3 ** n


def test_catalan_consistency():
    rep = fusion.catalan_consistency(10)
    assert rep["passed"]
    assert rep["rows"][4]["sum_sq"] == 14
    assert rep["rows"][0]["sum_sq"] == 1
    assert rep["rows"][3]["N_pow"] == 125


def test_unitary_multiplicities_match_circular_moments():
    # sum of squared multiplicities of u^w equals |MatchNC2(w wbar)|
    for n in range(1, 5):
        for w in itertools.product("ob", repeat=n):
            w = "".join(w)
            dec = fusion.tensor_power_decompose("UPlus", w)
            sq = sum(m * m for m in dec.values())
            assert sq == law_moments(LawSpec("Circular"), w + fusion.bar(w))


def test_symmetric_multiplicities_match_catalan():
    # for S+ the squared multiplicities count NC(2k) pairings of the doubled word: C_(2k)
    for k in range(6):
        dec = fusion.tensor_power_decompose("SPlus", k)
        assert sum(m * m for m in dec.values()) == catalan(2 * k)


def test_growth_series():
    assert fusion.growth_series("OPlus", 2, 5) == [sum((j + 1) ** 2 for j in range(k + 1)) for k in range(6)]
    assert fusion.growth_series("SPlus", 4, 5) == [sum((2 * j + 1) ** 2 for j in range(k + 1)) for k in range(6)]
    assert fusion.growth_series("UPlus", 2, 0) == [1]
    b = fusion.growth_series("UPlus", 2, 3)
    assert b[1] == 1 + 2 * 4


def test_label_keys():
    assert fusion.label_key("OPlus", 4) == "r4"
    assert fusion.label_key("UPlus", "ob") == "r_ob"
    assert fusion.label_key("UPlus", "") == "r_e"
