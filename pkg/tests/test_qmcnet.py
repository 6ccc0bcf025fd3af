import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

import oracles
from strategies import subspaces
from walshnet.f2core import EnumerationCapError, F2Matrix, Subspace, enumerate_bits
from walshnet.qmcnet import (
    derive_seeds,
    dyadic_decimal,
    integrand,
    integration_error,
    qmc_integrate,
    random_net,
    to_points,
)


def _phi(x, s, n):
    # digit map straight from the cell layout
    return tuple(sum(Fraction(bit, 2 ** (j + 1)) for j, bit in enumerate(row)) for row in oracles.cells(x, s, n))


class TestToPoints:
    def test_zero_net(self):
        q = to_points(Subspace.zero(3, 4))
        assert q.points.tolist() == [[0.0, 0.0, 0.0]]

    def test_full_one_digit(self):
        assert sorted(to_points(Subspace.full(1, 1)).points[:, 0]) == [0.0, 0.5]

    def test_three_quarters(self):
        p = Subspace.from_bits(1, 2, [F2Matrix.from_rows([[1, 1]]).bits])
        assert sorted(to_points(p).points[:, 0]) == [0.0, 0.75]

    @given(subspaces(max_size=12))
    def test_matches_digit_map(self, p):
        q = to_points(p)
        got = [tuple(Fraction(int(k), 2**p.n) for k in row) for row in q.digits]
        expected = [_phi(x, p.s, p.n) for x in enumerate_bits(p)]
        assert sorted(got) == sorted(expected)
        assert len(set(got)) == len(q) == 2**p.dim
        assert (q.points >= 0).all() and (q.points <= 1 - 2.0**-p.n).all()
        assert np.array_equal(q.points * 2**p.n, q.digits)

    def test_wide_net_scalar_path(self):
        p = Subspace.from_bits(2, 40, [1 | (1 << 79), 1 << 41])
        q = to_points(p)
        expected = sorted(tuple(float(c) for c in _phi(x, 2, 40)) for x in enumerate_bits(p))
        assert sorted(map(tuple, q.points.tolist())) == expected

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            to_points(Subspace.full(1, 12), cap=10)

    def test_csv_exact_decimals(self):
        q = to_points(Subspace.full(1, 2))
        assert q.to_csv() == "x1\n0\n0.5\n0.75\n0.25\n"

    @pytest.mark.parametrize("k,n,text", [(0, 3, "0"), (1, 1, "0.5"), (3, 2, "0.75"), (1, 10, "0.0009765625")])
    def test_dyadic_decimal(self, k, n, text):
        assert dyadic_decimal(k, n) == text


class TestIntegrate:
    @given(subspaces(max_size=12))
    def test_constant_is_exact(self, p):
        f = integrand("const1", p.s)
        assert qmc_integrate(to_points(p), f) == 1.0
        assert integration_error(p, f) == 0.0

    @pytest.mark.parametrize("n", [1, 2, 3, 6, 10])
    def test_linear_on_full_net(self, n):
        f = integrand("linear", 1)
        assert qmc_integrate(to_points(Subspace.full(1, n)), f) == (2**n - 1) / 2 ** (n + 1)

    def test_product_bounded(self):
        f = integrand("product", 2)
        for seed in range(10):
            value = qmc_integrate(to_points(random_net(2, 6, 6, seed)), f)
            assert 0.0 <= value <= 1.0

    def test_closed_form_integrals(self):
        assert integrand("product", 3).exact_integral == 0.125
        assert integrand("linear", 4).exact_integral == 0.5
        assert integrand("expprod", 2).exact_integral == pytest.approx((math.e - 1) ** 2)

    def test_expprod_converges_on_full_net(self):
        f = integrand("expprod", 1)
        err = integration_error(Subspace.full(1, 14), f)
        # left Riemann sum error ~ (e - 1) / 2^15
        assert err == pytest.approx((math.e - 1) / 2**15, rel=1e-3)

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            qmc_integrate(to_points(Subspace.zero(2, 2)), integrand("linear", 3))

    def test_unknown_function(self):
        with pytest.raises(KeyError):
            integrand("sinc", 1)


class TestRandomNet:
    def test_zero_dim(self):
        assert random_net(3, 4, 0, 9) == Subspace.zero(3, 4)

    def test_only_one_line(self):
        assert random_net(1, 1, 1, 9) == Subspace.full(1, 1)

    def test_deterministic(self):
        assert random_net(2, 5, 4, 123) == random_net(2, 5, 4, 123)
        assert derive_seeds(4, 5) == derive_seeds(4, 5)

    def test_dimension(self):
        rng = random.Random(3)
        for _ in range(100):
            s, n = rng.randint(1, 4), rng.randint(1, 6)
            m = rng.randint(0, s * n)
            assert random_net(s, n, m, rng).dim == m

    def test_m_too_large(self):
        with pytest.raises(ValueError):
            random_net(2, 2, 5, 0)

    def test_roughly_uniform_over_lines(self):
        # each of the 15 lines of F2^4 should show up about equally often
        counts = {}
        for seed in range(3000):
            p = random_net(2, 2, 1, seed)
            counts[p.basis] = counts.get(p.basis, 0) + 1
        assert len(counts) == 15
        assert max(counts.values()) < 2 * min(counts.values())
