"""
Recovery probability of arbitrary and symmetric allocations.

Evaluation scales every amount to a common denominator D (the object size 1
becomes D) and runs a saturating subset-sum DP over the states {0..D}.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import ceil, gcd, lcm
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import settings
from ..exceptions import AllocationError, SizeLimitError
from ..schemas.allocation import (
    Allocation,
    ProblemInstance,
    SubsetCount,
    SubsetProfile,
    SymmetricSpec,
)
from ..schemas.probability import BinomialSpec
from ..utils.rational import parse_rational
from .probability_service import ProbabilityService

logger = logging.getLogger(__name__)


def scale_to_integers(amounts: Sequence[Fraction], max_denominator: Optional[int] = None) -> Tuple[List[int], int]:
    """
    Integer weights and target for a list of amounts.

    Weights are clamped to the target (one node holding >= 1 suffices) and the
    whole system is divided by its gcd.
    """
    limit = settings.MAX_DENOMINATOR if max_denominator is None else max_denominator
    denominator = lcm(*(Fraction(x).denominator for x in amounts)) if amounts else 1
    if denominator > limit:
        logger.error(f"❌ Common denominator {denominator} exceeds cap {limit}")
        raise SizeLimitError(
            f"Common denominator {denominator} exceeds the DP cap {limit}; "
            f"use amounts with smaller denominators or raise ALLOCGRID_MAX_DENOMINATOR"
        )
    weights = [min(int(x * denominator), denominator) for x in amounts]
    g = gcd(denominator, *weights)
    return [w // g for w in weights], denominator // g


def success_weight(weights: Sequence[int], target: int, num: int, den: int) -> Tuple[int, int]:
    """
    Saturating subset-sum DP with Bernoulli(num/den) inclusion per node.

    Returns (mass, exponent): the success probability is mass / den**exponent.
    Zero-weight nodes never change the state and are skipped.
    """
    active = [w for w in weights if w > 0]
    dist = np.zeros(target + 1, dtype=object)
    dist[0] = 1
    stay_factor = den - num
    for w in active:
        moved = dist * num
        new = dist * stay_factor
        if w < target:
            new[w:target] += moved[: target - w]
        new[target] += moved[target - w:].sum()
        dist = new
    return int(dist[target]), len(active)


class AllocationService:

    @staticmethod
    def parse_allocation(text: str, n: Optional[int] = None) -> Allocation:
        """Comma-separated rationals; zeros may be left out when n is known"""
        parts = [part for part in (s.strip() for s in text.split(",")) if part]
        amounts = [parse_rational(part) for part in parts]
        if n is not None:
            if len(amounts) > n:
                raise AllocationError(f"{len(amounts)} amounts given for only {n} nodes")
            amounts += [Fraction(0)] * (n - len(amounts))
        return Allocation(amounts=amounts)

    @staticmethod
    def validate_against(instance: ProblemInstance, alloc: Allocation) -> Tuple[Fraction, ...]:
        """Checks length and budget; returns the amounts zero-padded to n"""
        if len(alloc.amounts) > instance.n:
            raise AllocationError(
                f"Allocation has {len(alloc.amounts)} amounts but the instance has n = {instance.n}"
            )
        if alloc.total > instance.T:
            raise AllocationError(f"Allocation uses {alloc.total} which exceeds the budget T = {instance.T}")
        return alloc.padded(instance.n)

    @staticmethod
    def recovery_probability_dp(instance: ProblemInstance, alloc: Allocation) -> Fraction:
        amounts = AllocationService.validate_against(instance, alloc)
        weights, target = scale_to_integers(amounts)
        logger.debug(f"🧮 DP over {target + 1} states for {len(weights)} nodes")
        p = instance.p
        mass, exponent = success_weight(weights, target, p.numerator, p.denominator)
        return Fraction(mass, p.denominator**exponent)

    @staticmethod
    def recovery_probability_enum(instance: ProblemInstance, alloc: Allocation) -> Fraction:
        """Power-set evaluation; an independent cross-check of the DP"""
        if instance.n > settings.ENUM_NODE_LIMIT:
            raise SizeLimitError(
                f"Power-set evaluation over n = {instance.n} nodes refused "
                f"(limit {settings.ENUM_NODE_LIMIT}); use the DP evaluator"
            )
        amounts = AllocationService.validate_against(instance, alloc)
        n, p = instance.n, instance.p
        total = Fraction(0)
        for size in range(1, n + 1):
            weight = p**size * (1 - p) ** (n - size)
            hits = sum(1 for subset in combinations(amounts, size) if sum(subset) >= 1)
            total += hits * weight
        # the empty access set holds 0 < 1 and never succeeds
        return total

    @staticmethod
    def symmetric_recovery_probability(p: Fraction, T: Fraction, m: int) -> Fraction:
        """P_S(p, T, m) = P[B(m, p) >= ⌈m/T⌉]"""
        if m < 1:
            raise ValueError(f"m must be at least 1, got {m}")
        if T < 1:
            raise ValueError(f"T must be at least 1, got {T}")
        threshold = ceil(Fraction(m) / Fraction(T))
        return ProbabilityService.binomial_tail_ge(BinomialSpec(trials=m, success_prob=p), threshold)

    @staticmethod
    def expand_symmetric(spec: SymmetricSpec) -> Allocation:
        share = Fraction(spec.T) / spec.m
        return Allocation(amounts=[share] * spec.m + [Fraction(0)] * (spec.n - spec.m))

    @staticmethod
    def expected_accessed_amount(instance: ProblemInstance, alloc: Allocation) -> Fraction:
        """E[W] = p * Σ x_i; recovery probability never exceeds it (Markov)"""
        AllocationService.validate_against(instance, alloc)
        return instance.p * alloc.total

    @staticmethod
    def subset_success_counts(instance: ProblemInstance, alloc: Allocation) -> SubsetProfile:
        """
        S_r = number of r-subsets whose amounts reach 1, for r = 0..n.

        DP over (subset size, saturated scaled sum); each S_r is bounded by
        min(C(n-1, r-1) * T, C(n, r)).
        """
        amounts = AllocationService.validate_against(instance, alloc)
        weights, target = scale_to_integers(amounts)
        n = instance.n

        # table[r][s]: number of r-subsets of processed nodes with saturated sum s
        table = np.zeros((n + 1, target + 1), dtype=object)
        table[0, 0] = 1
        for w in weights:
            shifted = np.zeros_like(table)
            if w == 0:
                shifted[1:, :] = table[:-1, :]
            else:
                if w < target:
                    shifted[1:, w:target] = table[:-1, : target - w]
                shifted[1:, target] = table[:-1, target - w:].sum(axis=1)
            table = table + shifted

        binomial = ProbabilityService.binomial_coefficient
        spec = BinomialSpec(trials=n, success_prob=instance.p)
        counts = []
        rebuilt = Fraction(0)
        for r in range(n + 1):
            successful = int(table[r, target])
            total = binomial(n, r)
            bound = min(binomial(n - 1, r - 1) * Fraction(instance.T), Fraction(total))
            counts.append(
                SubsetCount(r=r, successful_subsets=successful, total_subsets=total, upper_bound=bound)
            )
            rebuilt += Fraction(successful, total) * ProbabilityService.binomial_pmf(spec, r)
        logger.info(f"📊 Subset profile built for n = {n}, recovery probability {rebuilt}")
        return SubsetProfile(counts=counts, recovery_probability=rebuilt)
