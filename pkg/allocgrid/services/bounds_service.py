"""
Upper bounds on the optimal recovery probability and the certified gap of
maximal spreading.
"""
import logging
from fractions import Fraction
from math import ceil

import numpy as np

from ..exceptions import RegimeError
from ..schemas.allocation import ProblemInstance
from ..schemas.bounds import BoundsReport
from ..schemas.probability import BinomialSpec
from .allocation_service import AllocationService
from .probability_service import ProbabilityService

logger = logging.getLogger(__name__)


class BoundsService:

    @staticmethod
    def lemma1_upper_bound(instance: ProblemInstance) -> Fraction:
        """Σ_r min(rT/n, 1) · P[B(n, p) = r], valid for every feasible allocation"""
        n, T = instance.n, instance.T
        spec = BinomialSpec(trials=n, success_prob=instance.p)
        total = Fraction(0)
        for r in range(1, n + 1):
            total += min(Fraction(r) * T / n, Fraction(1)) * ProbabilityService.binomial_pmf(spec, r)
        return total

    @staticmethod
    def theorem1_gap(instance: ProblemInstance) -> Fraction:
        """δ(n, p, T) = pT · P[B(n−1, p) <= ⌈n/T⌉ − 2]"""
        n, p, T = instance.n, instance.p, instance.T
        threshold = ceil(Fraction(n) / T)
        if threshold <= 1:
            # T >= n: maximal spreading puts a full copy on every node
            return Fraction(0)
        spec = BinomialSpec(trials=n - 1, success_prob=p)
        return p * T * ProbabilityService.binomial_cdf_le(spec, threshold - 2)

    @staticmethod
    def chernoff_envelope(instance: ProblemInstance) -> float:
        """pT · exp(−((n−1)p/2)(1 − 1/(pT))²); only defined for pT > 1"""
        n, p, T = instance.n, instance.p, instance.T
        pT = p * T
        if pT <= 1:
            raise RegimeError(f"Chernoff envelope needs pT > 1, got pT = {pT}")
        exponent = -float((n - 1) * p / 2 * (1 - 1 / pT) ** 2)
        return float(pT) * float(np.exp(exponent))

    @staticmethod
    def markov_cap(p: Fraction, T: Fraction) -> Fraction:
        """min(pT, 1): no allocation does better, informative when pT < 1"""
        return min(Fraction(p) * Fraction(T), Fraction(1))

    @staticmethod
    def bounds_report(instance: ProblemInstance) -> BoundsReport:
        logger.info(f"📐 Computing bounds for n={instance.n}, p={instance.p}, T={instance.T}")
        chernoff = None
        if instance.p * instance.T > 1:
            chernoff = BoundsService.chernoff_envelope(instance)
        else:
            logger.info("ℹ️ pT <= 1: Chernoff envelope does not apply")
        report = BoundsReport(
            lemma1_upper=BoundsService.lemma1_upper_bound(instance),
            theorem1_gap=BoundsService.theorem1_gap(instance),
            chernoff_envelope=chernoff,
            markov_cap=BoundsService.markov_cap(instance.p, instance.T),
            spread_all_p_s=AllocationService.symmetric_recovery_probability(instance.p, instance.T, instance.n),
        )
        logger.info(f"✅ Bounds ready - gap {report.theorem1_gap}")
        return report
