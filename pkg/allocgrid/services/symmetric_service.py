"""
Optimal symmetric allocations: candidate reduction, the Δ(p, T, k) formula
and the sufficient conditions that classify (p, T) regions.
"""
import logging
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, List, Tuple

from ..exceptions import RegimeError
from ..schemas.allocation import ProblemInstance
from ..schemas.probability import BinomialSpec
from ..schemas.symmetric import (
    CandidateEntry,
    CandidateReport,
    DeltaValue,
    RegionClass,
    RegionFlags,
    Verdict,
)
from .allocation_service import AllocationService
from .probability_service import ProbabilityService

logger = logging.getLogger(__name__)


class SymmetricService:

    @staticmethod
    def candidate_ms(n: int, T: Fraction) -> List[int]:
        """Largest integer ⌊kT⌋ of each interval ((k-1)T, kT], k = 1..⌊n/T⌋, plus n"""
        T = Fraction(T)
        intervals = floor(Fraction(n) / T)
        return sorted({floor(k * T) for k in range(1, intervals + 1)} | {n})

    @staticmethod
    def _report(p: Fraction, T: Fraction, ms: Iterable[int]) -> CandidateReport:
        entries = [
            CandidateEntry(m=m, p_s=AllocationService.symmetric_recovery_probability(p, T, m))
            for m in ms
        ]
        best = max(entry.p_s for entry in entries)
        # smallest m wins ties: fewer nonempty nodes
        best_m = next(entry.m for entry in entries if entry.p_s == best)
        return CandidateReport(candidates=entries, best_m=best_m, best_p_s=best)

    @staticmethod
    def optimal_symmetric(instance: ProblemInstance) -> CandidateReport:
        ms = SymmetricService.candidate_ms(instance.n, instance.T)
        logger.info(f"🔍 Scanning {len(ms)} candidate m values for n={instance.n}, p={instance.p}, T={instance.T}")
        report = SymmetricService._report(instance.p, instance.T, ms)
        logger.info(f"✅ Best symmetric allocation: m = {report.best_m}, P_S = {report.best_p_s}")
        return report

    @staticmethod
    def exhaustive_symmetric(instance: ProblemInstance) -> CandidateReport:
        """Every m in 1..n; validates the candidate reduction"""
        logger.debug(f"🔍 Exhaustive scan over m = 1..{instance.n}")
        return SymmetricService._report(instance.p, instance.T, range(1, instance.n + 1))

    @staticmethod
    def _delta_terms(T: Fraction, k: int) -> Tuple[int, int, int]:
        T = Fraction(T)
        if T <= 1:
            raise RegimeError(f"Δ(p, T, k) needs T > 1, got T = {T}")
        if k < 1:
            raise RegimeError(f"Δ(p, T, k) needs k >= 1, got k = {k}")
        low = floor(k * T)
        high = floor((k + 1) * T)
        return low, high, high - low

    @staticmethod
    def delta_closed_form(p: Fraction, T: Fraction, k: int) -> DeltaValue:
        """Δ evaluated from the branch-comparison closed form"""
        low, high, alpha = SymmetricService._delta_terms(T, k)
        p = Fraction(p)
        q = 1 - p
        ratio = p / q
        binomial = ProbabilityService.binomial_coefficient
        inner = Fraction(0)
        for i in range(1, min(alpha - 1, k) + 1):
            for j in range(i + 1, alpha + 1):
                inner += binomial(low, k - i) * binomial(alpha, j) * ratio ** (j - i)
        inner -= binomial(low, k)
        value = p**k * q ** (high - k) * inner
        return DeltaValue(k=k, alpha=alpha, value=value)

    @staticmethod
    def delta_direct(p: Fraction, T: Fraction, k: int) -> DeltaValue:
        """Δ as a difference of two binomial tails"""
        low, high, alpha = SymmetricService._delta_terms(T, k)
        tail = ProbabilityService.binomial_tail_ge
        value = tail(BinomialSpec(trials=high, success_prob=p), k + 1) - tail(
            BinomialSpec(trials=low, success_prob=p), k
        )
        return DeltaValue(k=k, alpha=alpha, value=value)

    @staticmethod
    def condition_theorem2(p: Fraction, T: Fraction) -> bool:
        """Maximal spreading (or its last interval candidate) is optimal when T >= ⌈4/(3p)⌉"""
        return Fraction(T) >= ceil(Fraction(4) / (3 * Fraction(p)))

    @staticmethod
    def condition_lemma2(p: Fraction, T: Fraction) -> bool:
        p, T = Fraction(p), Fraction(T)
        if T < 2:
            return False
        t = floor(T)
        return (1 - p) ** t + 2 * t * p * (1 - p) ** (t - 1) - 1 <= 0

    @staticmethod
    def condition_theorem3(p: Fraction, T: Fraction) -> bool:
        """Minimal spreading m = ⌊T⌋ is optimal when T <= ⌊1/p⌋"""
        return Fraction(T) <= floor(1 / Fraction(p))

    @staticmethod
    def condition_lemma3(p: Fraction, T: Fraction) -> Tuple[bool, bool]:
        """(T = 1/p ∈ Z+, T < 1/p with the ⌈T⌉-1 exponent inequality)"""
        p, T = Fraction(p), Fraction(T)
        if T <= 1:
            raise RegimeError(f"Lemma 3 conditions need T > 1, got T = {T}")
        eq_flag = T == 1 / p and T.denominator == 1
        exponent = ceil(T) - 1
        ineq_flag = T < 1 / p and p * (1 - p) ** exponent <= (1 / T) * (1 - 1 / T) ** exponent
        return eq_flag, ineq_flag

    @staticmethod
    def condition_lemma4(p: Fraction, T: Fraction) -> bool:
        p, T = Fraction(p), Fraction(T)
        if T <= 1:
            raise RegimeError(f"Lemma 4 condition needs T > 1, got T = {T}")
        return p <= Fraction(2, ceil(T)) - 1 / T

    @staticmethod
    def classify_region(p: Fraction, T: Fraction) -> RegionClass:
        p, T = Fraction(p), Fraction(T)
        if not 0 < p < 1:
            raise RegimeError(f"p must lie strictly in (0, 1), got {p}")
        if T < 1:
            raise RegimeError(f"T must be at least 1, got {T}")

        if T == 1:
            # the whole budget fits one node: {1, 0, ..., 0} is optimal
            lemma3_eq = lemma3_ineq = lemma4 = False
        else:
            lemma3_eq, lemma3_ineq = SymmetricService.condition_lemma3(p, T)
            lemma4 = SymmetricService.condition_lemma4(p, T)
        flags = RegionFlags(
            theorem2=SymmetricService.condition_theorem2(p, T),
            theorem3=SymmetricService.condition_theorem3(p, T),
            lemma2=SymmetricService.condition_lemma2(p, T),
            lemma3_eq=lemma3_eq,
            lemma3_ineq=lemma3_ineq,
            lemma4=lemma4,
        )

        min_spread = flags.min_spread or T == 1
        if flags.max_spread and min_spread:
            verdict = Verdict.BOTH
        elif flags.max_spread:
            verdict = Verdict.MAX_SPREAD
        elif min_spread:
            verdict = Verdict.MIN_SPREAD
        else:
            verdict = Verdict.UNRESOLVED
        logger.debug(f"🗺️ Region at p={p}, T={T}: {verdict.value}")
        return RegionClass(verdict=verdict, flags=flags)

    @staticmethod
    def reciprocal_budget_scan(n: int, T: Fraction) -> dict:
        """At p = 1/T: exhaustive best m and whether minimal spreading attains it"""
        T = Fraction(T)
        if T <= 1:
            raise RegimeError(f"p = 1/T needs T > 1, got T = {T}")
        instance = ProblemInstance(n=n, p=1 / T, T=T)
        report = SymmetricService.exhaustive_symmetric(instance)
        minimal_m = floor(T)
        minimal_p_s = next(c.p_s for c in report.candidates if c.m == minimal_m)
        return {
            "best_m": report.best_m,
            "argmax_ms": report.argmax_ms,
            "best_p_s": report.best_p_s,
            "minimal_m": minimal_m,
            "minimal_optimal": minimal_p_s == report.best_p_s,
        }
