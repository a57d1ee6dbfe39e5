import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from easyqg.diagram import (
    compose,
    empty_partition,
    generate_category,
    involute,
    rotate,
    semicircle,
    tensor,
    tl_trace,
)
from easyqg.errors import DomainError, SizeLimitError, StructureError
from easyqg.partitions import SetPartition, enumerate_partitions, is_member
from easyqg.weingarten import categorical_check, tpi

from strategies import set_partitions

CAP = semicircle("--", lower=True)  # no upper legs, two lower legs
CUP = semicircle("--", lower=False)
CROSS = SetPartition.make("--", "--", (0, 1, 1, 0))


def test_tensor_examples():
    assert tensor(CAP, CAP) == SetPartition.make("", "----", (0, 0, 1, 1))
    assert tensor(CROSS, empty_partition()) == CROSS
    assert tensor(empty_partition(), CROSS) == CROSS


def test_tensor_block_counts_over_p3():
    # [DERIVED] exhaustive over P(3) x P(3)
    p3 = enumerate_partitions("P", "", 3)
    for a, b in itertools.product(p3, p3):
        assert tensor(a, b).block_count == a.block_count + b.block_count


def test_compose_examples():
    res = compose(CAP, CUP)
    assert res.partition == empty_partition() and res.loops == 1
    ident = SetPartition.identity("--")
    assert compose(CROSS, ident).partition == CROSS and compose(CROSS, ident).loops == 0
    res = compose(CROSS, CROSS)
    assert res.partition == ident and res.loops == 0


def test_compose_middle_mismatch():
    with pytest.raises(StructureError):
        compose(CAP, SetPartition.identity("-"))
    with pytest.raises(StructureError):
        compose(SetPartition.identity("o"), SetPartition.identity("b"))


def test_involute_examples():
    assert involute(CAP) == CUP
    colored = SetPartition.make("", "ob", (0, 0))
    assert involute(colored) == SetPartition.make("bo", "", (0, 0))


def test_rotate_examples():
    r = rotate(CAP)
    assert r.shape == CAP.shape and r.block_count == 1
    with pytest.raises(DomainError):
        rotate(empty_partition())


def test_rotate_orbits_on_p22():
    for pi in enumerate_partitions("P", "--", "--"):
        x = pi
        for _ in range(4):
            x = rotate(x)
        assert x == pi


@settings(max_examples=80, deadline=None)
@given(set_partitions(min_legs=1, colors="ob"))
def test_rotate_order_and_blocks(pi):
    x = pi
    for step in range(pi.size):
        x = rotate(x)
        assert x.block_count == pi.block_count
    assert x == pi


@settings(max_examples=80, deadline=None)
@given(set_partitions(colors="ob"))
def test_involution(pi):
    assert involute(involute(pi)) == pi


@settings(max_examples=50, deadline=None)
@given(set_partitions(max_legs=4), set_partitions(max_legs=4), set_partitions(max_legs=4))
def test_tensor_associative(a, b, c):
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


@settings(max_examples=50, deadline=None)
@given(set_partitions(min_legs=1, max_legs=5, colors="ob"))
def test_rotation_preserves_matching_families(pi):
    for tag in ("MatchP2", "MatchNC2", "MatchPeven", "Ps(3)", "NCs(2)"):
        assert is_member(tag, pi) == is_member(tag, rotate(pi))


# -- category generation ---------------------------------------------------------


def _cells_up_to(size, colors):
    for n in range(size + 1):
        for k in range(n + 1):
            for w in itertools.product(colors, repeat=n):
                yield "".join(w[:k]), "".join(w[k:])


def _assert_generates(cat, tag, size, colors):
    for upper, lower in _cells_up_to(size, colors):
        want = set(enumerate_partitions(tag, upper, lower))
        assert set(cat.cell(upper, lower)) == want, (tag, upper, lower)


def test_axioms_generate_nc2():
    _assert_generates(generate_category([], 6), "NC2", 6, "-")


def test_crossing_generates_p2():
    _assert_generates(generate_category([CROSS], 6), "P2", 6, "-")


def test_four_block_generates_nceven():
    _assert_generates(generate_category([SetPartition.one_block("--", "--")], 6), "NCeven", 6, "-")


def test_colored_axioms_generate_matching_noncrossing():
    _assert_generates(generate_category([], 4, colored=True), "MatchNC2", 4, "ob")


def test_colored_crossing_generates_matching_pairings():
    gen = SetPartition.make("ob", "bo", (0, 1, 1, 0))
    _assert_generates(generate_category([gen], 4), "MatchP2", 4, "ob")


@pytest.mark.slow
def test_singleton_and_fork_generate_nc():
    gens = [SetPartition.one_block("", "-"), SetPartition.one_block("--", "-")]
    _assert_generates(generate_category(gens, 6), "NC", 6, "-")


def test_generated_category_is_closed():
    cat = generate_category([CROSS], 4)
    members = [p for c in cat.cells() for p in cat.cell(*c)]
    for p in members:
        assert involute(p) in cat
        if p.size:
            assert rotate(p) in cat
    for a, b in itertools.product(members, members):
        if a.size + b.size <= 4:
            assert tensor(a, b) in cat
        if a.lower == b.upper and a.k + b.l <= 4:
            assert compose(a, b).partition in cat
    assert SetPartition.identity("-") in cat and CAP in cat and CUP in cat


def test_generation_limits():
    with pytest.raises(SizeLimitError):
        generate_category([], 10)
    with pytest.raises(StructureError):
        generate_category([SetPartition.one_block("o-", "")])


# -- Temperley-Lieb traces ------------------------------------------------------------


def test_tl_trace_examples():
    for N in range(1, 5):
        assert tl_trace(SetPartition.identity("---"), N) == N ** 3
    cupcap = SetPartition.make("--", "--", (0, 0, 1, 1))
    assert tl_trace(cupcap, 3) == 3
    with pytest.raises(DomainError):
        tl_trace(SetPartition.one_block("--", "--"), 2)


def test_tl_trace_is_matrix_trace():
    for pi in enumerate_partitions("NC2", "---", "---"):
        for N in range(1, 5):
            assert tl_trace(pi, N) == int(np.trace(tpi(pi, N)))


def test_loops_compatible_with_traces():
    # Tr(T_pi T_sigma) = N^c tlTrace(sigma over pi) on NC2(2,2)
    nc = enumerate_partitions("NC2", "--", "--")
    for pi, sigma in itertools.product(nc, nc):
        res = compose(sigma, pi)
        for N in range(1, 5):
            lhs = int(np.trace(tpi(pi, N) @ tpi(sigma, N)))
            assert lhs == N ** res.loops * tl_trace(res.partition, N)


def test_categorical_checks():
    rep = categorical_check(CUP, CAP, 3)
    assert rep["passed"] and rep["loops"] == 1
    ident = SetPartition.identity("--")
    assert categorical_check(ident, ident, 3)["passed"]
    p22 = enumerate_partitions("P", "--", "--")
    for a, b in itertools.product(p22, p22):
        assert categorical_check(a, b, 2)["passed"]
