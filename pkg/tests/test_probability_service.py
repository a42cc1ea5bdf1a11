from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from allocgrid.schemas import BinomialSpec
from allocgrid.services import ProbabilityService

from .strategies import probabilities


def spec(n, p):
    return BinomialSpec(trials=n, success_prob=Fraction(p))


class TestBinomialCoefficient:

    @pytest.mark.parametrize("n, k, expected", [(5, 3, 10), (7, 0, 1), (10, 11, 0), (10, -1, 0), (0, 0, 1)])
    def test_examples(self, n, k, expected):
        assert ProbabilityService.binomial_coefficient(n, k) == expected

    def test_large_value_is_exact(self):
        # C(100, 50)
        assert ProbabilityService.binomial_coefficient(100, 50) == 100891344545564193334812497256

    @given(st.integers(0, 60), st.integers(0, 60))
    def test_symmetry(self, n, k):
        assert ProbabilityService.binomial_coefficient(n, k) == ProbabilityService.binomial_coefficient(n, n - k)

    @given(st.integers(1, 60), st.integers(1, 60))
    def test_pascal_rule(self, n, k):
        c = ProbabilityService.binomial_coefficient
        assert c(n, k) == c(n - 1, k - 1) + c(n - 1, k)


class TestBinomialDistribution:

    @pytest.mark.parametrize(
        "n, p, k, expected",
        [
            (5, Fraction(2, 3), 3, Fraction(80, 243)),
            (4, Fraction(1, 2), 0, Fraction(1, 16)),
            (3, Fraction(2, 3), 5, Fraction(0)),
        ],
    )
    def test_pmf_examples(self, n, p, k, expected):
        assert ProbabilityService.binomial_pmf(spec(n, p), k) == expected

    @pytest.mark.parametrize(
        "n, p, k, expected",
        [
            (2, Fraction(2, 3), 1, Fraction(8, 9)),
            (5, Fraction(2, 3), 3, Fraction(64, 81)),
            (7, Fraction(1, 3), 0, Fraction(1)),
            (7, Fraction(1, 3), 8, Fraction(0)),
        ],
    )
    def test_tail_examples(self, n, p, k, expected):
        assert ProbabilityService.binomial_tail_ge(spec(n, p), k) == expected

    def test_cdf_boundaries(self):
        s = spec(4, Fraction(2, 3))
        assert ProbabilityService.binomial_cdf_le(s, -1) == 0
        assert ProbabilityService.binomial_cdf_le(s, 4) == 1
        assert ProbabilityService.binomial_cdf_le(s, 1) == Fraction(9, 81)

    def test_zero_trials(self):
        s = spec(0, Fraction(1, 2))
        assert ProbabilityService.binomial_pmf(s, 0) == 1
        assert ProbabilityService.binomial_tail_ge(s, 1) == 0

    @given(st.integers(0, 40), probabilities())
    def test_pmf_sums_to_one(self, n, p):
        s = spec(n, p)
        assert sum(ProbabilityService.binomial_pmf(s, k) for k in range(n + 1)) == 1

    @given(st.integers(0, 40), probabilities(), st.integers(-2, 42))
    def test_tail_recurrence(self, n, p, k):
        s = spec(n, p)
        tail = ProbabilityService.binomial_tail_ge
        assert tail(s, k) == tail(s, k + 1) + ProbabilityService.binomial_pmf(s, k)

    @given(st.integers(0, 40), probabilities(), st.integers(-2, 42))
    def test_cdf_complements_tail(self, n, p, k):
        s = spec(n, p)
        assert ProbabilityService.binomial_cdf_le(s, k) + ProbabilityService.binomial_tail_ge(s, k + 1) == 1

    def test_invalid_probability_rejected(self):
        with pytest.raises(ValueError):
            BinomialSpec(trials=3, success_prob=Fraction(1))
