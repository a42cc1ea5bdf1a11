"""
Single-instance commands: eval, symmetric, bounds, region, profile
"""
import logging
from fractions import Fraction
from math import ceil
from typing import Iterable, Optional, Tuple

import pandas as pd

from ..schemas.allocation import ProblemInstance
from ..services.allocation_service import AllocationService
from ..services.bounds_service import BoundsService
from ..services.symmetric_service import SymmetricService
from ..utils.rational import format_rational, parse_rational
from .output import CommandOutput, add_format_flags

logger = logging.getLogger(__name__)


def add_instance_flags(parser) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of storage nodes (n >= 2)")
    parser.add_argument("--p", required=True, help="access probability, e.g. 2/3 or 0.6")
    parser.add_argument("--T", required=True, help="storage budget, 1 <= T <= n")


def instance_from(args) -> ProblemInstance:
    return ProblemInstance(n=args.n, p=args.p, T=args.T)


def instance_parameters(instance: ProblemInstance) -> dict:
    return {"n": instance.n, "p": format_rational(instance.p), "T": format_rational(instance.T)}


def quantity_frame(rows: Iterable[Tuple[str, Optional[Fraction], Optional[float]]]) -> pd.DataFrame:
    """quantity / exact / decimal rows; exact may be absent for float-only values"""
    records = []
    for name, exact, decimal in rows:
        if decimal is None and exact is not None:
            decimal = float(exact)
        records.append(
            {
                "quantity": name,
                "exact": format_rational(exact) if exact is not None else None,
                "decimal": decimal,
            }
        )
    return pd.DataFrame(records, columns=["quantity", "exact", "decimal"])


def handle_eval(args) -> CommandOutput:
    instance = instance_from(args)
    alloc = AllocationService.parse_allocation(args.alloc, instance.n)
    if args.method == "enum":
        probability = AllocationService.recovery_probability_enum(instance, alloc)
    else:
        probability = AllocationService.recovery_probability_dp(instance, alloc)
    logger.info(f"✅ Recovery probability {probability} via {args.method}")
    frame = quantity_frame(
        [
            ("recovery_probability", probability, None),
            ("expected_accessed_amount", AllocationService.expected_accessed_amount(instance, alloc), None),
            ("markov_cap", BoundsService.markov_cap(instance.p, instance.T), None),
        ]
    )
    parameters = instance_parameters(instance)
    parameters.update(alloc=",".join(format_rational(x) for x in alloc.padded(instance.n)), method=args.method)
    return CommandOutput(
        frame=frame,
        parameters=parameters,
        result={"recovery_probability": format_rational(probability)},
    )


def handle_symmetric(args) -> CommandOutput:
    instance = instance_from(args)
    if args.exhaustive:
        report = SymmetricService.exhaustive_symmetric(instance)
    else:
        report = SymmetricService.optimal_symmetric(instance)
    frame = pd.DataFrame(
        [
            {
                "m": entry.m,
                "threshold": ceil(Fraction(entry.m) / instance.T),
                "p_s": format_rational(entry.p_s),
                "p_s_float": float(entry.p_s),
                "best": entry.p_s == report.best_p_s,
            }
            for entry in report.candidates
        ]
    )
    parameters = instance_parameters(instance)
    parameters["exhaustive"] = args.exhaustive
    return CommandOutput(
        frame=frame,
        parameters=parameters,
        result=report.model_dump(mode="json"),
        footer=[
            f"best_m: {report.best_m}",
            f"best_p_s: {format_rational(report.best_p_s)} ({float(report.best_p_s):.6f})",
            f"tied_ms: {' '.join(str(m) for m in report.argmax_ms)}",
        ],
    )


def handle_bounds(args) -> CommandOutput:
    instance = instance_from(args)
    report = BoundsService.bounds_report(instance)
    frame = quantity_frame(
        [
            ("lemma1_upper", report.lemma1_upper, None),
            ("spread_all_p_s", report.spread_all_p_s, None),
            ("theorem1_gap", report.theorem1_gap, None),
            ("markov_cap", report.markov_cap, None),
            ("chernoff_envelope", None, report.chernoff_envelope),
        ]
    )
    return CommandOutput(
        frame=frame,
        parameters=instance_parameters(instance),
        result=report.model_dump(mode="json"),
    )


def handle_region(args) -> CommandOutput:
    p, T = parse_rational(args.p), parse_rational(args.T)
    region = SymmetricService.classify_region(p, T)
    flags = region.flags.model_dump()
    frame = pd.DataFrame([{"condition": name, "holds": value} for name, value in flags.items()])
    return CommandOutput(
        frame=frame,
        parameters={"p": format_rational(p), "T": format_rational(T)},
        result=region.model_dump(mode="json"),
        footer=[f"verdict: {region.verdict.value}"],
    )


def handle_profile(args) -> CommandOutput:
    instance = instance_from(args)
    alloc = AllocationService.parse_allocation(args.alloc, instance.n)
    profile = AllocationService.subset_success_counts(instance, alloc)
    frame = pd.DataFrame(
        [
            {
                "r": count.r,
                "successful_subsets": count.successful_subsets,
                "total_subsets": count.total_subsets,
                "upper_bound": format_rational(count.upper_bound),
                "upper_bound_float": float(count.upper_bound),
            }
            for count in profile.counts
        ]
    )
    parameters = instance_parameters(instance)
    parameters["alloc"] = ",".join(format_rational(x) for x in alloc.padded(instance.n))
    return CommandOutput(
        frame=frame,
        parameters=parameters,
        result=profile.model_dump(mode="json"),
        footer=[
            f"recovery_probability: {format_rational(profile.recovery_probability)} "
            f"({float(profile.recovery_probability):.6f})"
        ],
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="recovery probability of one allocation")
    add_instance_flags(parser)
    parser.add_argument("--alloc", required=True, help='comma-separated amounts, e.g. "2/3,2/3,1/3,1/3,1/3"')
    parser.add_argument("--method", choices=["dp", "enum"], default="dp", help="subset-sum DP or power-set oracle")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_eval)

    parser = subparsers.add_parser("symmetric", help="optimal symmetric allocation")
    add_instance_flags(parser)
    parser.add_argument("--exhaustive", action="store_true", help="scan every m = 1..n instead of the candidates")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_symmetric)

    parser = subparsers.add_parser("bounds", help="upper bounds and the maximal-spreading gap")
    add_instance_flags(parser)
    add_format_flags(parser)
    parser.set_defaults(handler=handle_bounds)

    parser = subparsers.add_parser("region", help="which spreading is provably optimal at (p, T)")
    parser.add_argument("--p", required=True, help="access probability")
    parser.add_argument("--T", required=True, help="storage budget, T >= 1")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_region)

    parser = subparsers.add_parser("profile", help="successful r-subset counts of one allocation")
    add_instance_flags(parser)
    parser.add_argument("--alloc", required=True, help="comma-separated amounts")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_profile)
