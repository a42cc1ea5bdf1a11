"""
Ground-truth generators: exhaustive search over 1/q-quantized allocations and
a seeded Monte Carlo estimator.
"""
import logging
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Iterator, Optional, Tuple

import numpy as np

from ..config import settings
from ..exceptions import RegimeError, SizeLimitError
from ..schemas.allocation import Allocation, ProblemInstance
from ..schemas.oracle import MonteCarloEstimate, QuantizedSearchResult
from ..utils.parallel import ordered_map
from .allocation_service import AllocationService, scale_to_integers, success_weight

logger = logging.getLogger(__name__)

GENERATOR_NAME = "PCG64"


def _few_parts(total: int, parts: int) -> int:
    # closed forms for at most three parts
    if parts == 0:
        return 1 if total == 0 else 0
    if parts == 1:
        return 1
    if parts == 2:
        return total // 2 + 1
    return ((total + 3) ** 2 + 6) // 12


def count_partitions(total: int, parts: int, cap: Optional[int] = None) -> int:
    """
    Number of non-increasing tuples of `parts` nonnegative integers summing to `total`.

    With `cap` set, counting stops as soon as the result is known to exceed it
    and the partial count (still above `cap`) is returned.
    """
    width = min(parts, total)
    if width <= 3:
        return _few_parts(total, width)
    lower = _few_parts(total, 3)
    if cap is not None and lower > cap:
        return lower
    # ways[b] = partitions of b into parts of size <= k, k growing to `width`
    ways = [1] + [0] * total
    for size in range(1, width + 1):
        for b in range(size, total + 1):
            ways[b] += ways[b - size]
        if cap is not None and ways[total] > cap:
            break
    return ways[total]


def _non_increasing(total: int, parts: int, cap: int) -> Iterator[Tuple[int, ...]]:
    # depth is bounded by the nonzero entries; the tail is zero padding
    if total == 0:
        yield (0,) * parts
        return
    if parts == 0:
        return
    for first in range(min(total, cap), ceil(total / parts) - 1, -1):
        for rest in _non_increasing(total - first, parts - 1, first):
            yield (first,) + rest


def _better(prob: Fraction, units: Tuple[int, ...], best: Optional[Tuple[Fraction, Tuple[int, ...]]]) -> bool:
    if best is None:
        return True
    if prob != best[0]:
        return prob > best[0]
    return units < best[1]


def _search_branch(args) -> Tuple[Optional[Fraction], Optional[Tuple[int, ...]], int]:
    """All tuples with a fixed first element; runs in worker processes"""
    first, budget, n, q, num, den = args
    best = None
    evaluated = 0
    for rest in _non_increasing(budget - first, n - 1, first):
        units = (first,) + rest
        mass, exponent = success_weight([min(a, q) for a in units], q, num, den)
        prob = Fraction(mass, den**exponent)
        evaluated += 1
        if _better(prob, units, best):
            best = (prob, units)
    if best is None:
        return None, None, evaluated
    return best[0], best[1], evaluated


def _simulate_chunk(args) -> int:
    weights, target, num, den, size, seed_seq = args
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    # one node at a time keeps memory at O(size)
    totals = np.zeros(size, dtype=np.int64)
    for weight in weights:
        if weight:
            accessed = rng.integers(0, den, size=size) < num
            np.add(totals, weight, out=totals, where=accessed)
    return int(np.count_nonzero(totals >= target))


class OracleService:

    @staticmethod
    def default_quantum(instance: ProblemInstance) -> int:
        """lcm of the denominators of T and p"""
        return lcm(instance.T.denominator, instance.p.denominator)

    @staticmethod
    def brute_force_best(
        instance: ProblemInstance,
        q: Optional[int] = None,
        max_enum: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> QuantizedSearchResult:
        """
        Best allocation among those whose amounts are multiples of 1/q.

        Only full-budget (adding storage never hurts), non-increasing
        (permutations are equivalent) tuples are enumerated. Ties go to the
        lexicographically smallest tuple.
        """
        q = OracleService.default_quantum(instance) if q is None else q
        if q < 1:
            raise RegimeError(f"Quantum denominator q must be positive, got {q}")
        cap = settings.MAX_ENUM if max_enum is None else max_enum
        workers = settings.WORKERS if workers is None else workers

        n = instance.n
        budget = floor(q * instance.T)
        count = count_partitions(budget, n, cap=cap)
        if count > cap:
            logger.error(f"❌ At least {count} quantized allocations, above the cap {cap}")
            raise SizeLimitError(
                f"Search over q = {q} needs at least {count} allocations, above the cap {cap}; "
                f"try a smaller q or raise ALLOCGRID_MAX_ENUM"
            )

        logger.info(f"🔎 Enumerating {count} allocations (n={n}, q={q}, budget units={budget})")
        p = instance.p
        jobs = [
            (first, budget, n, q, p.numerator, p.denominator)
            for first in range(ceil(budget / n), budget + 1)
        ]
        best = None
        evaluated = 0
        for prob, units, branch_count in ordered_map(_search_branch, jobs, workers):
            evaluated += branch_count
            if units is not None and _better(prob, units, best):
                best = (prob, units)

        best_prob, best_units = best
        allocation = Allocation(amounts=[Fraction(a, q) for a in best_units])
        logger.info(f"✅ Best quantized allocation {best_units} / {q} with probability {best_prob}")
        return QuantizedSearchResult(
            best_allocation=allocation,
            best_probability=best_prob,
            quantum_denominator=q,
            allocations_evaluated=evaluated,
        )

    @staticmethod
    def monte_carlo_estimate(
        instance: ProblemInstance,
        alloc: Allocation,
        trials: int,
        seed: int,
        workers: Optional[int] = None,
    ) -> MonteCarloEstimate:
        """
        Fraction of simulated access patterns that recover the object.

        Trials are cut into chunks of settings.MC_CHUNK_TRIALS; chunk i draws
        from PCG64(SeedSequence(seed).spawn(chunks)[i]), so the result depends
        on (inputs, seed, chunk size, numpy version) only.
        """
        if trials < 1:
            raise RegimeError(f"Monte Carlo needs at least one trial, got {trials}")
        if not 0 <= seed < 2**64:
            raise RegimeError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        p = instance.p
        if p.denominator >= 2**63:
            raise SizeLimitError(f"Denominator of p = {p} is too large for integer sampling")
        workers = settings.WORKERS if workers is None else workers

        amounts = AllocationService.validate_against(instance, alloc)
        weights, target = scale_to_integers(amounts)

        chunk = settings.MC_CHUNK_TRIALS
        sizes = [chunk] * (trials // chunk)
        if trials % chunk:
            sizes.append(trials % chunk)
        children = np.random.SeedSequence(seed).spawn(len(sizes))
        jobs = [
            (weights, target, p.numerator, p.denominator, size, child)
            for size, child in zip(sizes, children)
        ]
        logger.info(f"🎲 Simulating {trials} access patterns in {len(jobs)} chunks (seed {seed})")
        successes = sum(ordered_map(_simulate_chunk, jobs, workers))

        estimate = successes / trials
        standard_error = float(np.sqrt(estimate * (1 - estimate) / trials))
        return MonteCarloEstimate(
            estimate=estimate,
            standard_error=standard_error,
            trials=trials,
            successes=successes,
            seed=seed,
            generator=GENERATOR_NAME,
            generator_version=np.__version__,
            chunk_trials=chunk,
        )
