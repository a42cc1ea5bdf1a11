"""
Grid commands: sweep-budget, sweep-region, gap-asymptotics, reciprocal
"""
from ..exceptions import RegimeError
from ..services.sweep_service import SweepService, open_unit_grid, rational_grid
from ..utils.rational import format_rational, parse_rational
from .output import CommandOutput, add_format_flags


def handle_sweep_budget(args) -> CommandOutput:
    p = parse_rational(args.p)
    t_min = parse_rational(args.t_min)
    t_max = parse_rational(args.t_max) if args.t_max is not None else parse_rational(args.n)
    t_step = parse_rational(args.t_step)
    frame = SweepService.budget_sweep(args.n, p, rational_grid(t_min, t_max, t_step))
    return CommandOutput(
        frame=frame,
        parameters={
            "n": args.n,
            "p": format_rational(p),
            "t_min": format_rational(t_min),
            "t_max": format_rational(t_max),
            "t_step": format_rational(t_step),
        },
    )


def handle_sweep_region(args) -> CommandOutput:
    t_min, t_max, t_step = (parse_rational(v) for v in (args.t_min, args.t_max, args.t_step))
    p_step = parse_rational(args.p_step)
    frame = SweepService.region_sweep(rational_grid(t_min, t_max, t_step), open_unit_grid(p_step))
    return CommandOutput(
        frame=frame,
        parameters={
            "t_min": format_rational(t_min),
            "t_max": format_rational(t_max),
            "t_step": format_rational(t_step),
            "p_step": format_rational(p_step),
        },
    )


def handle_gap_asymptotics(args) -> CommandOutput:
    p, T = parse_rational(args.p), parse_rational(args.T)
    try:
        n_values = [int(v) for v in args.n_list.split(",") if v.strip()]
    except ValueError as exc:
        raise RegimeError(f"--n-list must be comma-separated integers: {exc}") from exc
    frame = SweepService.gap_asymptotics(p, T, n_values)
    return CommandOutput(
        frame=frame,
        parameters={"p": format_rational(p), "T": format_rational(T), "n_list": n_values},
    )


def handle_reciprocal(args) -> CommandOutput:
    t_min, t_max, t_step = (parse_rational(v) for v in (args.t_min, args.t_max, args.t_step))
    frame = SweepService.reciprocal_scan(args.n, rational_grid(t_min, t_max, t_step))
    return CommandOutput(
        frame=frame,
        parameters={
            "n": args.n,
            "t_min": format_rational(t_min),
            "t_max": format_rational(t_max),
            "t_step": format_rational(t_step),
        },
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("sweep-budget", help="P_S against T for every symmetric m")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--p", required=True)
    parser.add_argument("--t-min", default="1")
    parser.add_argument("--t-max", default=None, help="defaults to n")
    parser.add_argument("--t-step", default="1/10")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_sweep_budget)

    parser = subparsers.add_parser("sweep-region", help="optimality verdicts over a (T, p) grid")
    parser.add_argument("--t-min", default="1")
    parser.add_argument("--t-max", default="6")
    parser.add_argument("--t-step", default="1/20")
    parser.add_argument("--p-step", default="1/50")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_sweep_region)

    parser = subparsers.add_parser("gap-asymptotics", help="maximal-spreading gap and Chernoff envelope against n")
    parser.add_argument("--p", required=True)
    parser.add_argument("--T", required=True)
    parser.add_argument("--n-list", default="50,100,200")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_gap_asymptotics)

    parser = subparsers.add_parser("reciprocal", help="best symmetric m along p = 1/T")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--t-min", default="3/2")
    parser.add_argument("--t-max", default="4")
    parser.add_argument("--t-step", default="1/10")
    add_format_flags(parser)
    parser.set_defaults(handler=handle_reciprocal)
