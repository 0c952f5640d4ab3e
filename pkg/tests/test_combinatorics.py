import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from inar1.combinatorics import (
    R_MAX,
    MomentVector,
    convert,
    cumulants_from_factorial_cumulants,
    cumulants_from_moments,
    factorial_cumulants_from_cumulants,
    factorial_moments_from_moments,
    moments_from_cumulants,
    moments_from_factorial_moments,
    stirling_first_signed,
    stirling_second,
    stirling_second_sum,
    stirling_table,
)
from inar1.errors import DomainError


def set_partitions(n, k):
    """Count partitions of {0..n-1} into k non-empty blocks by brute force."""
    count = 0
    for labels in itertools.product(range(k), repeat=n):
        # canonical labelling: first appearance order 0, 1, 2, ...
        seen = []
        for x in labels:
            if x not in seen:
                seen.append(x)
        if len(seen) == k and seen == list(range(k)):
            count += 1
    return count


class TestStirling:
    def test_second_kind_examples(self):
        assert stirling_second(0, 0) == 1
        assert stirling_second(4, 2) == 7
        for r in range(1, 15):
            assert stirling_second(r, 1) == 1
            assert stirling_second(r, r) == 1
            assert stirling_second(r, 0) == 0

    @pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 2), (6, 4), (7, 3)])
    def test_second_kind_counts_set_partitions(self, n, k):
        assert stirling_second(n, k) == set_partitions(n, k)

    def test_first_kind_examples(self):
        assert stirling_first_signed(1, 1) == 1
        assert stirling_first_signed(3, 2) == -3
        assert stirling_first_signed(4, 2) == 11
        assert stirling_first_signed(5, 0) == 0

    def test_first_kind_recurrence(self):
        for r in range(1, R_MAX):
            for j in range(1, r + 1):
                assert stirling_first_signed(r + 1, j) == stirling_first_signed(r, j - 1) - r * stirling_first_signed(r, j)

    def test_alternating_sum_agrees_with_recurrence(self):
        for r in range(21):
            for j in range(r + 1):
                assert stirling_second_sum(r, j) == stirling_second(r, j)

    def test_tables_are_inverse(self):
        s = stirling_table("first_signed", 15).astype(object)
        S = stirling_table("second", 15).astype(object)
        prod = s.dot(S)
        assert (prod == np.eye(16, dtype=int).astype(object)).all()

    def test_values_are_exact_integers(self):
        # S(25, 12) has 21 digits; must not have gone through floats
        v = stirling_second(25, 12)
        assert isinstance(v, int)
        assert v == sum((-1) ** (12 - i) * math.comb(12, i) * i**25 for i in range(13)) // math.factorial(12)

    @pytest.mark.parametrize("r,j", [(-1, 0), (3, 4), (R_MAX + 1, 1), (2, -1)])
    def test_out_of_range(self, r, j):
        with pytest.raises(DomainError):
            stirling_second(r, j)
        with pytest.raises(DomainError):
            stirling_first_signed(r, j)


class TestConversions:
    def test_poisson_factorial_cumulants(self):
        a = 1.7
        fc = MomentVector("factorial_cumulants", [a] + [0.0] * 5)
        c = cumulants_from_factorial_cumulants(fc)
        assert np.allclose(c.as_array(), a, rtol=0, atol=1e-14)
        back = factorial_cumulants_from_cumulants(MomentVector("cumulants", [a] * 6))
        assert np.allclose(back.as_array(), [a, 0, 0, 0, 0, 0], atol=1e-13)

    def test_second_cumulant_from_factorial(self):
        c = cumulants_from_factorial_cumulants(MomentVector("factorial_cumulants", [0.3, -0.2]))
        assert c[1] == pytest.approx(0.3)
        assert c[2] == pytest.approx(-0.2 + 0.3)

    def test_bernoulli_moments(self):
        p = 0.35
        m = moments_from_factorial_moments(MomentVector("factorial_moments", [p, 0, 0, 0, 0]))
        assert np.allclose(m.as_array(), p, atol=1e-15)
        fm = factorial_moments_from_moments(MomentVector("moments", [p] * 5))
        assert np.allclose(fm.as_array(), [p, 0, 0, 0, 0], atol=1e-13)

    def test_low_order_identities(self):
        m = MomentVector("moments", [1.5, 4.0, 13.0])
        assert factorial_moments_from_moments(m)[2] == pytest.approx(4.0 - 1.5)
        c = cumulants_from_moments(m)
        assert c[1] == 1.5
        assert c[2] == pytest.approx(4.0 - 1.5**2)

    def test_poisson_moments_are_touchard(self):
        # moments of Poisson(lam) are Touchard polynomials sum_j S(r, j) lam^j
        lam = 0.8
        m = moments_from_cumulants(MomentVector("cumulants", [lam] * 6))
        expect = [sum(stirling_second(r, j) * lam**j for j in range(r + 1)) for r in range(1, 7)]
        assert np.allclose(m.as_array(), expect, rtol=1e-13)

    def test_kind_mismatch(self):
        with pytest.raises(DomainError):
            cumulants_from_moments(MomentVector("cumulants", [1.0]))

    def test_moment_vector_validation(self):
        with pytest.raises(DomainError):
            MomentVector("moments", [])
        with pytest.raises(DomainError):
            MomentVector("moments", [1.0, float("nan")])
        with pytest.raises(DomainError):
            MomentVector("momentz", [1.0])
        v = MomentVector("moments", [1, 2, 3])
        assert v.order == 3 and v[3] == 3.0
        with pytest.raises(IndexError):
            v[0]


KINDS = ["moments", "factorial_moments", "cumulants", "factorial_cumulants"]
values = st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=1, max_size=8)


@given(values)
def test_round_trips(vals):
    for a, b in [
        ("cumulants", "factorial_cumulants"),
        ("moments", "factorial_moments"),
        ("moments", "cumulants"),
    ]:
        v = MomentVector(a, vals)
        back = convert(convert(v, b), a)
        assert np.allclose(back.as_array(), v.as_array(), rtol=0, atol=1e-12 * _magnitude(v))


def _magnitude(vec):
    # largest entry over every representation of vec: the round-off yardstick
    return max(max(1.0, np.abs(convert(vec, k).as_array()).max()) for k in KINDS)


@given(st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=1, max_size=8), st.sampled_from(KINDS), st.sampled_from(KINDS))
def test_commuting_square(vals, src, dst):
    v = MomentVector(src, vals)
    direct = convert(v, dst)
    scale = _magnitude(v)
    for via in KINDS:
        other = convert(v, dst, via=[via])
        assert np.allclose(other.as_array(), direct.as_array(), rtol=0, atol=1e-10 * scale)
