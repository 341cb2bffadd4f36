from __future__ import annotations

from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import alt_maps
from schurbound import fieldmat as fm
from schurbound.altmap import AltMap, quotient_by_radical
from schurbound.errors import HypothesisViolated
from schurbound.fieldmat import FpMatrix
from schurbound.fixtures import example1_map, intro_map, special_map
from schurbound.greedy import construct_pair_basis, is_tree_of_height_one
from schurbound.grouplab import construct_thm43
from schurbound.psirank import (
    dim_im_psi,
    lb_estimate,
    lb_nontree,
    lb_special_thm38,
    psi_matrix,
    psi_vector,
    script_w,
    w_vectors,
)
from schurbound.trigraph import complement, count_triangles, graph_of_pairset


def psi_row_by_hand(A, i, j, k):
    """Independent expansion into a dict (t, u) -> coefficient."""
    out = {}
    for (a, b), c in (((i, j), k), ((j, k), i), ((k, i), j)):
        for t, x in enumerate(A.value(a, b)):
            out[(t, c)] = (out.get((t, c), 0) + x) % A.p
    return [out.get((t, u), 0) for t in range(A.m) for u in range(1, A.n + 1)]


def test_single_triple():
    P = psi_matrix(construct_thm43(3, 3, 3, 3).map)
    assert P.matrix.shape == (1, 9) and any(P.matrix.entries())


def test_intro_shape_and_ranks():
    A = intro_map(3)
    P = psi_matrix(A)
    assert P.matrix.shape == (20, 24)
    assert dim_im_psi(A) == 12
    assert dim_im_psi(quotient_by_radical(A)[0]) == 8


def test_special_rank():
    assert dim_im_psi(special_map(3)) == 8


def test_two_dimensional_u():
    A = AltMap(5, 2, 1, {(1, 2): (1,)})
    assert psi_matrix(A).matrix.shape == (0, 2)
    assert dim_im_psi(A) == 0


@given(alt_maps())
def test_rows_match_definition(A):
    P = psi_matrix(A)
    assert list(P.triples) == sorted(combinations(range(1, A.n + 1), 3), key=lambda t: (t[2], t[1], t[0]))
    for t in P.triples:
        assert P.row(t) == psi_row_by_hand(A, *t)


@given(alt_maps(max_n=6))
def test_row_orientation_signs(A):
    # Psi is alternating: permuting a triple multiplies the row by the sign
    for t in combinations(range(1, A.n + 1), 3):
        base = psi_vector(A, *t)
        for perm in permutations(range(3)):
            sign = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
            got = psi_vector(A, *(t[q] for q in perm))
            assert got == [(sign * x) % A.p for x in base]
    # repeated index vanishes
    if A.n >= 2:
        assert not any(psi_vector(A, 1, 1, 2))


def test_example1_script_w():
    pb = construct_pair_basis(example1_map(3))
    W = script_w(pb.pairs, 5)
    assert sorted(W) == [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5)]
    assert (1, 4, 5) not in W
    # ordered by the triple order
    assert W == sorted(W, key=lambda t: (t[2], t[1], t[0]))


def test_script_w_small_cases():
    assert script_w([(1, 2)], 4) == [(1, 2, 3), (1, 2, 4)]
    star = [(1, 2), (1, 3), (1, 4)]
    brute = [t for t in combinations(range(1, 7), 3) if any(set(pr) <= set(t) for pr in star)]
    assert len(script_w(star, 6)) == len(brute) == 9


def test_w_vector_example():
    A = example1_map(3)
    v = w_vectors(A, [(1, 2)])
    # {1,2,4}: v1 (x) e4 + v3 (x) e1, at columns t*n + (u-1)
    row = psi_vector(A, 1, 2, 4)
    expected = [0] * 20
    expected[0 * 5 + 3] = 1
    expected[2 * 5 + 0] = 1
    assert row == expected
    assert row in v


def test_example2_dependency():
    A = example1_map(3)
    r124, r134, r145 = (psi_vector(A, *t) for t in ((1, 2, 4), (1, 3, 4), (1, 4, 5)))
    assert [(a + b) % 3 for a, b in zip(r124, r134)] == r145
    W = w_vectors(A, construct_pair_basis(A).pairs)
    assert fm.rank(FpMatrix.from_rows(W, 3)) == len(W) == 8


@given(alt_maps(), st.randoms(use_true_random=False))
def test_w_independent_and_bounds(A, rnd):
    order = list(range(1, A.n + 1))
    rnd.shuffle(order)
    pb = construct_pair_basis(A, order)
    W = w_vectors(A, pb.pairs, order)
    size = len(script_w(pb.pairs, A.n, order))
    assert len(W) == size
    if W:
        assert fm.rank(FpMatrix.from_rows(W, A.p)) == size
    assert lb_estimate(A.n, A.m) <= size <= dim_im_psi(A)
    tri = count_triangles(complement(graph_of_pairset(pb.pairs, A.n)))
    assert size == comb(A.n, 3) - tri
    if not is_tree_of_height_one(pb.pairs)[0]:
        assert size >= lb_nontree(A.n, A.m)


@pytest.mark.parametrize("n, m, expected", [(5, 4, 6), (3, 3, 1), (6, 4, 10)])
def test_lb_estimate(n, m, expected):
    assert lb_estimate(n, m) == expected


@pytest.mark.parametrize("n, m, expected", [(5, 4, 8), (6, 3, 10), (5, 3, 7)])
def test_lb_nontree(n, m, expected):
    assert lb_nontree(n, m) == expected


def test_lb_nontree_attained_by_example1():
    pb = construct_pair_basis(example1_map(3))
    assert len(script_w(pb.pairs, 5)) == lb_nontree(5, 4)


@given(st.integers(3, 12))
def test_lb_nontree_minimal_n(m):
    assert lb_nontree(m + 2, m) == sum(range(1, m + 1)) + (m - 2)


def test_lb_special():
    assert lb_special_thm38(5, 3) == 7
    assert lb_special_thm38(6, 3) == 10
    with pytest.raises(HypothesisViolated):
        lb_special_thm38(5, 4)


def test_lb_domains():
    with pytest.raises(HypothesisViolated):
        lb_nontree(5, 1)
    with pytest.raises(ValueError):
        lb_estimate(3, 4)
