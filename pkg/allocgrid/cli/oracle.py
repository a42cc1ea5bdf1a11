"""
Oracle commands: search (quantized brute force) and mc (Monte Carlo)
"""
import pandas as pd

from ..services.allocation_service import AllocationService
from ..services.oracle_service import OracleService
from ..utils.rational import format_rational
from .evaluation import add_instance_flags, instance_from, instance_parameters, quantity_frame
from .output import CommandOutput, add_format_flags


def handle_search(args) -> CommandOutput:
    instance = instance_from(args)
    result = OracleService.brute_force_best(instance, q=args.q)
    amounts = result.best_allocation.padded(instance.n)
    frame = pd.DataFrame(
        [
            {"node": i + 1, "amount": format_rational(x), "amount_float": float(x)}
            for i, x in enumerate(amounts)
        ]
    )
    parameters = instance_parameters(instance)
    parameters["q"] = result.quantum_denominator
    return CommandOutput(
        frame=frame,
        parameters=parameters,
        result=result.model_dump(mode="json"),
        footer=[
            f"best_probability: {format_rational(result.best_probability)} ({float(result.best_probability):.6f})",
            f"quantum_denominator: {result.quantum_denominator}",
            f"allocations_evaluated: {result.allocations_evaluated}",
        ],
    )


def handle_mc(args) -> CommandOutput:
    instance = instance_from(args)
    alloc = AllocationService.parse_allocation(args.alloc, instance.n)
    estimate = OracleService.monte_carlo_estimate(instance, alloc, trials=args.trials, seed=args.seed)
    rows = [
        ("estimate", None, estimate.estimate),
        ("standard_error", None, estimate.standard_error),
    ]
    if args.compare_exact:
        exact = AllocationService.recovery_probability_dp(instance, alloc)
        rows.append(("exact", exact, None))
        if estimate.standard_error > 0:
            rows.append(("z_score", None, (estimate.estimate - float(exact)) / estimate.standard_error))
    parameters = instance_parameters(instance)
    parameters.update(
        alloc=",".join(format_rational(x) for x in alloc.padded(instance.n)),
        trials=args.trials,
        seed=args.seed,
    )
    return CommandOutput(
        frame=quantity_frame(rows),
        parameters=parameters,
        result=estimate.model_dump(mode="json"),
        footer=[f"generator: {estimate.generator} (numpy {estimate.generator_version})"],
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("search", help="best allocation over amounts that are multiples of 1/q")
    add_instance_flags(parser)
    parser.add_argument("--q", type=int, default=None, help="quantum denominator (default: lcm of denominators of T and p)")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_search)

    parser = subparsers.add_parser("mc", help="Monte Carlo estimate of the recovery probability")
    add_instance_flags(parser)
    parser.add_argument("--alloc", required=True, help="comma-separated amounts")
    parser.add_argument("--trials", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--compare-exact", action="store_true", help="also report the exact DP value")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_mc)
