import numpy as np
import pytest
from hypothesis import given

import oracles
from strategies import subspaces
from walshnet.f2core import F2Matrix, Subspace, dual, enumerate_bits
from walshnet.weights import (
    dick_weight,
    iter_weights,
    max_weight,
    min_weight,
    span_chunks,
    weight_distribution,
    weights_array,
)


def test_zero_matrix():
    assert dick_weight(F2Matrix.zeros(3, 4)) == 0


@pytest.mark.parametrize("i,j", [(1, 1), (1, 4), (3, 2), (2, 3)])
def test_one_hot_weight_is_column(i, j):
    assert dick_weight(F2Matrix.unit(3, 4, i, j)) == j


def test_all_ones():
    x = F2Matrix.from_rows([[1, 1, 1], [1, 1, 1]])
    assert dick_weight(x) == 2 * (1 + 2 + 3) == max_weight(2, 3) == 12


@given(subspaces())
def test_weight_matches_oracle(p):
    for x in enumerate_bits(p):
        w = dick_weight(F2Matrix(p.s, p.n, x))
        assert w == oracles.weight(x, p.s, p.n)
        assert (w == 0) == (x == 0)
        assert 0 <= w <= max_weight(p.s, p.n)


@given(subspaces())
def test_vectorised_weights(p):
    for chunk in span_chunks(p):
        expected = [oracles.weight(int(x), p.s, p.n) for x in chunk]
        assert weights_array(chunk, p.s, p.n).tolist() == expected


@given(subspaces())
def test_incremental_gray_update(p):
    for x, w in iter_weights(p):
        assert w == oracles.weight(x, p.s, p.n)


def test_span_chunks_cover_large_space_once():
    p = Subspace.full(2, 9)
    seen = np.concatenate(list(span_chunks(p)))
    assert seen[0] == 0
    assert len(np.unique(seen)) == seen.size == 2**18


class TestMinWeight:
    def test_single_high_column(self):
        assert min_weight(Subspace.from_bits(1, 2, [0b10])) == 2

    def test_single_low_column(self):
        assert min_weight(Subspace.from_bits(1, 2, [0b01])) == 1

    def test_full_space(self):
        assert min_weight(Subspace.full(3, 4)) == 1

    def test_zero_space_rejected(self):
        with pytest.raises(ValueError):
            min_weight(Subspace.zero(1, 2))

    def test_frozen_example(self):
        a = F2Matrix.from_rows([[1, 0, 1], [0, 1, 1]]).bits
        b = F2Matrix.from_rows([[0, 1, 0], [1, 1, 0]]).bits
        assert min_weight(dual(Subspace.from_bits(2, 3, [a, b]))) == 3

    @given(subspaces())
    def test_matches_oracle(self, p):
        d = dual(p)
        if d.dim == 0:
            return
        delta = min_weight(d)
        assert delta == oracles.min_dual_weight(list(p.basis), p.s, p.n)
        assert all(oracles.weight(x, p.s, p.n) >= delta for x in enumerate_bits(d) if x)

    def test_wide_matrices_use_scalar_walk(self):
        # sn > 64 bypasses the uint64 path
        p = Subspace.from_bits(1, 70, [(1 << 69) | (1 << 5), 1 << 68])
        assert min_weight(p) == 69
        assert weight_distribution(p).counts == {0: 1, 69: 1, 76: 1, 145: 1}


class TestWeightDistribution:
    def test_zero_space(self):
        assert weight_distribution(Subspace.zero(2, 2)).counts == {0: 1}

    def test_full_one_by_two(self):
        assert weight_distribution(Subspace.full(1, 2)).counts == {0: 1, 1: 1, 2: 1, 3: 1}

    @given(subspaces())
    def test_totals_and_min(self, p):
        dist = weight_distribution(p)
        assert dist.total == 2**p.dim
        assert dist.counts[0] == 1
        assert all(0 <= w <= max_weight(p.s, p.n) for w in dist.counts)
        if p.dim:
            assert dist.min_positive() == min_weight(p)

    def test_csv(self):
        assert weight_distribution(Subspace.full(1, 2)).to_csv() == "weight,count\n0,1\n1,1\n2,1\n3,1\n"
