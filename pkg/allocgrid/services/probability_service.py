"""
Exact binomial primitives over arbitrary-precision integers
"""
import logging
from fractions import Fraction
from math import gcd

from ..schemas.probability import BinomialSpec

logger = logging.getLogger(__name__)


class ProbabilityService:

    @staticmethod
    def binomial_coefficient(n: int, k: int) -> int:
        """C(n, k) by running product; 0 outside 0 <= k <= n"""
        if k < 0 or k > n:
            return 0
        k = min(k, n - k)
        result = 1
        for i in range(1, k + 1):
            factor = n - k + i
            # result * factor / i is integral; cancel the common part first
            g = gcd(factor, i)
            factor //= g
            divisor = i // g
            result = (result // divisor) * factor
        return result

    @staticmethod
    def binomial_pmf(spec: BinomialSpec, k: int) -> Fraction:
        """P[B(n, p) = k], exactly"""
        n = spec.trials
        if k < 0 or k > n:
            return Fraction(0)
        num, den = spec.success_prob.numerator, spec.success_prob.denominator
        weight = ProbabilityService.binomial_coefficient(n, k) * num**k * (den - num) ** (n - k)
        return Fraction(weight, den**n)

    @staticmethod
    def binomial_tail_ge(spec: BinomialSpec, k: int) -> Fraction:
        """P[B(n, p) >= k]: 1 when k <= 0, 0 when k > n"""
        n = spec.trials
        if k <= 0:
            return Fraction(1)
        if k > n:
            return Fraction(0)
        return Fraction(ProbabilityService._weight_sum(spec, k, n), spec.success_prob.denominator**n)

    @staticmethod
    def binomial_cdf_le(spec: BinomialSpec, k: int) -> Fraction:
        """P[B(n, p) <= k]: 0 when k < 0, 1 when k >= n"""
        n = spec.trials
        if k < 0:
            return Fraction(0)
        if k >= n:
            return Fraction(1)
        return Fraction(ProbabilityService._weight_sum(spec, 0, k), spec.success_prob.denominator**n)

    @staticmethod
    def _weight_sum(spec: BinomialSpec, lo: int, hi: int) -> int:
        """Σ_{j=lo..hi} C(n,j) num^j (den-num)^(n-j), all over the common den^n"""
        n = spec.trials
        num = spec.success_prob.numerator
        rest = spec.success_prob.denominator - num
        coeff = ProbabilityService.binomial_coefficient(n, lo)
        total = 0
        for j in range(lo, hi + 1):
            total += coeff * num**j * rest ** (n - j)
            coeff = coeff * (n - j) // (j + 1)
        return total
