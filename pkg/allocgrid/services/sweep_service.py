"""
Tabular parameter sweeps (budget curves, region maps, gap asymptotics).

Every sweep evaluates independent grid points, optionally in a process pool,
and assembles rows in grid order into a pandas DataFrame.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd

from ..config import settings
from ..exceptions import RegimeError
from ..schemas.allocation import ProblemInstance
from ..utils.parallel import ordered_map
from ..utils.rational import format_rational
from .bounds_service import BoundsService
from .symmetric_service import SymmetricService

logger = logging.getLogger(__name__)


def rational_grid(start: Fraction, stop: Fraction, step: Fraction) -> List[Fraction]:
    """start, start + step, ... up to and including stop"""
    if step <= 0:
        raise RegimeError(f"Grid step must be positive, got {step}")
    if stop < start:
        raise RegimeError(f"Grid end {stop} lies before its start {start}")
    count = int((stop - start) // step)
    return [start + i * step for i in range(count + 1)]


def open_unit_grid(step: Fraction) -> List[Fraction]:
    """step, 2*step, ... strictly inside (0, 1)"""
    if not 0 < step < 1:
        raise RegimeError(f"p step must lie in (0, 1), got {step}")
    return [v for v in rational_grid(step, Fraction(1), step) if v < 1]


def _budget_point(args) -> dict:
    n, p, T = args
    instance = ProblemInstance(n=n, p=p, T=T)
    curves = SymmetricService.exhaustive_symmetric(instance)
    optimal = SymmetricService.optimal_symmetric(instance)
    upper = BoundsService.lemma1_upper_bound(instance)
    row = {"T": format_rational(T), "T_float": float(T)}
    for entry in curves.candidates:
        row[f"ps_m{entry.m}"] = format_rational(entry.p_s)
        row[f"ps_m{entry.m}_float"] = float(entry.p_s)
    row.update(
        {
            "best_m": optimal.best_m,
            "best_ps": format_rational(optimal.best_p_s),
            "best_ps_float": float(optimal.best_p_s),
            "lemma1_upper": format_rational(upper),
            "lemma1_upper_float": float(upper),
        }
    )
    return row


def _region_point(args) -> dict:
    p, T = args
    region = SymmetricService.classify_region(p, T)
    row = {
        "T": format_rational(T),
        "T_float": float(T),
        "p": format_rational(p),
        "p_float": float(p),
        "verdict": region.verdict.value,
    }
    row.update(region.flags.model_dump())
    return row


def _gap_point(args) -> dict:
    n, p, T = args
    instance = ProblemInstance(n=n, p=p, T=T)
    report = BoundsService.bounds_report(instance)
    return {
        "n": n,
        "theorem1_gap": format_rational(report.theorem1_gap),
        "theorem1_gap_float": float(report.theorem1_gap),
        "chernoff_envelope": report.chernoff_envelope,
        "lemma1_upper": format_rational(report.lemma1_upper),
        "lemma1_upper_float": float(report.lemma1_upper),
        "spread_all_p_s": format_rational(report.spread_all_p_s),
        "spread_all_p_s_float": float(report.spread_all_p_s),
    }


def _reciprocal_point(args) -> dict:
    n, T = args
    scan = SymmetricService.reciprocal_budget_scan(n, T)
    return {
        "T": format_rational(T),
        "T_float": float(T),
        "p": format_rational(1 / T),
        "best_m": scan["best_m"],
        "argmax_ms": " ".join(str(m) for m in scan["argmax_ms"]),
        "minimal_m": scan["minimal_m"],
        "minimal_optimal": scan["minimal_optimal"],
        "best_ps": format_rational(scan["best_p_s"]),
        "best_ps_float": float(scan["best_p_s"]),
    }


class SweepService:

    @staticmethod
    def _collect(func, jobs: Sequence, workers: Optional[int]) -> pd.DataFrame:
        workers = settings.WORKERS if workers is None else workers
        logger.info(f"🗂️ Evaluating {len(jobs)} grid points with {workers} worker(s)")
        rows = ordered_map(func, list(jobs), workers)
        return pd.DataFrame(rows)

    @staticmethod
    def budget_sweep(n: int, p: Fraction, t_grid: Sequence[Fraction], workers: Optional[int] = None) -> pd.DataFrame:
        """P_S(p, T, m) for every m, the best m and the Lemma 1 bound, per grid T"""
        return SweepService._collect(_budget_point, [(n, p, T) for T in t_grid], workers)

    @staticmethod
    def region_sweep(
        t_grid: Sequence[Fraction], p_grid: Sequence[Fraction], workers: Optional[int] = None
    ) -> pd.DataFrame:
        """classify_region over the (T, p) grid, T-major order"""
        return SweepService._collect(_region_point, [(p, T) for T in t_grid for p in p_grid], workers)

    @staticmethod
    def gap_asymptotics(
        p: Fraction, T: Fraction, n_values: Sequence[int], workers: Optional[int] = None
    ) -> pd.DataFrame:
        """δ(n, p, T) and its Chernoff envelope for each n"""
        return SweepService._collect(_gap_point, [(n, p, T) for n in n_values], workers)

    @staticmethod
    def reciprocal_scan(n: int, t_grid: Sequence[Fraction], workers: Optional[int] = None) -> pd.DataFrame:
        """Best symmetric m along the curve p = 1/T"""
        return SweepService._collect(_reciprocal_point, [(n, T) for T in t_grid], workers)
