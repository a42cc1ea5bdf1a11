import tracemalloc
from fractions import Fraction
from math import ceil, lcm, sqrt

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from allocgrid.exceptions import RegimeError, SizeLimitError
from allocgrid.schemas import Allocation, ProblemInstance
from allocgrid.services import AllocationService, BoundsService, OracleService, SymmetricService
from allocgrid.services.oracle_service import _better, count_partitions


@st.composite
def small_instances(draw):
    n = draw(st.integers(2, 6))
    p_den = draw(st.integers(2, 4))
    p = Fraction(draw(st.integers(1, p_den - 1)), p_den)
    t_den = draw(st.integers(1, 2))
    T = Fraction(draw(st.integers(t_den, n * t_den)), t_den)
    return ProblemInstance(n=n, p=p, T=T)


def sandwich_quantum(instance):
    """Default quantum refined so the best symmetric allocation's 1/k shares are representable"""
    report = SymmetricService.exhaustive_symmetric(instance)
    threshold = ceil(Fraction(report.best_m) / instance.T)
    return lcm(OracleService.default_quantum(instance), threshold)


class TestPartitionCount:

    @pytest.mark.parametrize("total, parts, expected", [(7, 5, 13), (4, 2, 3), (0, 3, 1), (5, 1, 1), (3, 0, 0)])
    def test_examples(self, total, parts, expected):
        assert count_partitions(total, parts) == expected

    def test_parts_beyond_total_are_zero_padding(self):
        assert count_partitions(5, 50) == count_partitions(5, 5) == 7
        assert count_partitions(10, 10**6) == 42

    def test_cap_leaves_small_counts_exact(self):
        assert count_partitions(10, 10, cap=10**6) == 42

    @pytest.mark.parametrize("total, parts", [(10**12, 5), (10**12, 2), (300, 300)])
    def test_stops_once_cap_exceeded(self, total, parts):
        assert count_partitions(total, parts, cap=10**4) > 10**4


class TestBruteForce:

    def test_counterexample_quantum(self, counterexample_instance, counterexample_allocation):
        result = OracleService.brute_force_best(counterexample_instance, q=3)
        assert result.best_probability >= Fraction(220, 243)
        assert AllocationService.recovery_probability_dp(
            counterexample_instance, counterexample_allocation
        ) <= result.best_probability
        assert result.allocations_evaluated == count_partitions(7, 5)

    def test_default_quantum(self, counterexample_instance):
        assert OracleService.default_quantum(counterexample_instance) == 3

    def test_two_copies_beat_one(self):
        result = OracleService.brute_force_best(ProblemInstance(n=3, p=Fraction(1, 2), T=2), q=1)
        assert result.best_allocation.amounts == (1, 1, 0)
        assert result.best_probability == Fraction(3, 4)

    @pytest.mark.parametrize("n, p", [(3, Fraction(1, 3)), (5, Fraction(3, 4))])
    def test_full_budget_unique_tuple(self, n, p):
        result = OracleService.brute_force_best(ProblemInstance(n=n, p=p, T=n), q=1)
        assert result.best_allocation.amounts == (1,) * n
        assert result.best_probability == 1 - (1 - p) ** n

    def test_result_shape(self, counterexample_instance):
        result = OracleService.brute_force_best(counterexample_instance, q=6)
        amounts = result.best_allocation.padded(counterexample_instance.n)
        assert all((x * 6).denominator == 1 for x in amounts)
        assert list(amounts) == sorted(amounts, reverse=True)
        assert sum(amounts) == Fraction(14, 6)

    def test_whole_copy_beats_split_at_unit_budget(self):
        result = OracleService.brute_force_best(ProblemInstance(n=2, p=Fraction(1, 2), T=1), q=2)
        # (2, 0) -> 1/2 beats (1, 1) -> 1/4
        assert result.best_allocation.amounts == (1, 0)

    def test_ties_go_to_lexicographically_smallest_tuple(self):
        best = (Fraction(3, 4), (2, 1, 0))
        assert _better(Fraction(3, 4), (1, 1, 1), best)
        assert not _better(Fraction(3, 4), (2, 2, 0), best)
        assert _better(Fraction(4, 5), (3, 0, 0), best)

    def test_cap_exceeded(self, counterexample_instance):
        with pytest.raises(SizeLimitError):
            OracleService.brute_force_best(counterexample_instance, q=30, max_enum=100)

    def test_huge_quantum_refused_before_counting(self):
        instance = ProblemInstance(n=5, p=Fraction(1, 2), T=2)
        with pytest.raises(SizeLimitError):
            OracleService.brute_force_best(instance, q=10**12)

    def test_many_nodes_small_budget(self):
        result = OracleService.brute_force_best(ProblemInstance(n=1500, p=Fraction(1, 2), T=1), q=1)
        assert result.best_allocation.amounts[0] == 1
        assert sum(result.best_allocation.amounts) == 1
        assert result.best_probability == Fraction(1, 2)
        assert result.allocations_evaluated == 1

    def test_rejects_nonpositive_quantum(self, counterexample_instance):
        with pytest.raises(RegimeError):
            OracleService.brute_force_best(counterexample_instance, q=0)

    def test_worker_pool_gives_identical_result(self, counterexample_instance):
        serial = OracleService.brute_force_best(counterexample_instance, q=6, workers=1)
        pooled = OracleService.brute_force_best(counterexample_instance, q=6, workers=2)
        assert pooled == serial

    @settings(max_examples=50, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
    @given(small_instances())
    def test_sandwich(self, instance):
        q = sandwich_quantum(instance)
        assume(count_partitions(int(q * instance.T), instance.n) <= 20_000)
        best = OracleService.brute_force_best(instance, q=q).best_probability
        assert SymmetricService.exhaustive_symmetric(instance).best_p_s <= best
        assert best <= BoundsService.lemma1_upper_bound(instance)

    @settings(max_examples=25)
    @given(small_instances(), st.integers(1, 3), st.integers(2, 3))
    def test_refinement_never_hurts(self, instance, q, factor):
        assume(count_partitions(int(q * factor * instance.T), instance.n) <= 20_000)
        coarse = OracleService.brute_force_best(instance, q=q).best_probability
        fine = OracleService.brute_force_best(instance, q=q * factor).best_probability
        assert fine >= coarse


class TestMonteCarlo:

    def test_deterministic_for_fixed_seed(self, counterexample_instance, counterexample_allocation):
        first = OracleService.monte_carlo_estimate(counterexample_instance, counterexample_allocation, 5000, seed=42)
        second = OracleService.monte_carlo_estimate(counterexample_instance, counterexample_allocation, 5000, seed=42)
        assert first == second
        assert first.generator == "PCG64"

    def test_worker_pool_gives_identical_result(self, counterexample_instance, counterexample_allocation, monkeypatch):
        from allocgrid.config import settings as app_settings

        monkeypatch.setattr(app_settings, "MC_CHUNK_TRIALS", 1000)
        serial = OracleService.monte_carlo_estimate(
            counterexample_instance, counterexample_allocation, 4500, seed=9, workers=1
        )
        pooled = OracleService.monte_carlo_estimate(
            counterexample_instance, counterexample_allocation, 4500, seed=9, workers=2
        )
        assert serial == pooled
        assert serial.chunk_trials == 1000

    def test_zero_allocation(self):
        instance = ProblemInstance(n=4, p=Fraction(1, 2), T=2)
        estimate = OracleService.monte_carlo_estimate(instance, Allocation(amounts=[0, 0, 0, 0]), 1000, seed=1)
        assert estimate.estimate == 0
        assert estimate.standard_error == 0
        assert estimate.successes == 0

    def test_single_copy(self):
        instance = ProblemInstance(n=2, p=Fraction(1, 2), T=1)
        estimate = OracleService.monte_carlo_estimate(instance, Allocation(amounts=[1]), 10**5, seed=123)
        assert abs(estimate.estimate - 0.5) <= 4 * estimate.standard_error
        assert estimate.standard_error == pytest.approx(sqrt(estimate.estimate * (1 - estimate.estimate) / 10**5))

    def test_counterexample(self, counterexample_instance, counterexample_allocation):
        estimate = OracleService.monte_carlo_estimate(
            counterexample_instance, counterexample_allocation, 10**5, seed=2024
        )
        assert abs(estimate.estimate - 220 / 243) <= 4 * estimate.standard_error

    def test_chunk_memory_independent_of_node_count(self):
        n = 400
        instance = ProblemInstance(n=n, p=Fraction(1, 2), T=2)
        allocation = Allocation(amounts=[Fraction(1, 200)] * n)
        tracemalloc.start()
        try:
            estimate = OracleService.monte_carlo_estimate(instance, allocation, 65536, seed=5, workers=1)
            _, peak = tracemalloc.get_traced_memory()
        finally:
            tracemalloc.stop()
        assert estimate.trials == 65536
        # a dense trials x nodes draw matrix alone would be ~200 MB
        assert peak < 32 * 2**20

    @pytest.mark.parametrize("trials, seed", [(0, 1), (10, -1), (10, 2**64)])
    def test_invalid_arguments(self, counterexample_instance, counterexample_allocation, trials, seed):
        with pytest.raises(RegimeError):
            OracleService.monte_carlo_estimate(counterexample_instance, counterexample_allocation, trials, seed)

    def test_random_pairs_agree_with_exact_value(self):
        rng = np.random.default_rng(31)
        trials = 10**5
        agreeing = 0
        for _ in range(20):
            n = int(rng.integers(2, 9))
            p_den = int(rng.integers(2, 11))
            p = Fraction(int(rng.integers(1, p_den)), p_den)
            quantum = int(rng.integers(1, 5))
            budget = int(rng.integers(quantum, n * quantum + 1))
            units = rng.multinomial(budget, [1 / n] * n)
            instance = ProblemInstance(n=n, p=p, T=Fraction(budget, quantum))
            allocation = Allocation(amounts=[Fraction(int(u), quantum) for u in units])
            exact = float(AllocationService.recovery_probability_dp(instance, allocation))
            estimate = OracleService.monte_carlo_estimate(instance, allocation, trials, seed=int(rng.integers(0, 2**32)))
            tolerance = 4 * sqrt(exact * (1 - exact) / trials)
            if abs(estimate.estimate - exact) <= tolerance:
                agreeing += 1
        assert agreeing >= 19

    def test_seed_consistency(self, counterexample_instance, counterexample_allocation):
        exact = 220 / 243
        trials = 2000
        within = 0
        for seed in range(100):
            estimate = OracleService.monte_carlo_estimate(
                counterexample_instance, counterexample_allocation, trials, seed=seed
            )
            if abs(estimate.estimate - exact) <= 3 * estimate.standard_error:
                within += 1
        # expected misses are well below one; 95 leaves ample room
        assert within >= 95
