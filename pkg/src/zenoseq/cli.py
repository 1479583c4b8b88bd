"""Command-line front-end with deterministic, machine-readable output.

Exit codes: 0 success, 2 invalid input, 3 divergent/no finite limit,
4 internal cross-check failure. Rationals in JSON are strings ("p/q"),
never floating numbers, and each result rational carries both its exact
form and a decimal approximation. Output is built fully in memory and
written in one flush, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import floatsum, processes, race
from .errors import DivergenceError
from .rational import parse, render, to_decimal_string

SCHEMA_VERSION = 1
DEFAULT_DIGITS = 6


class InternalCheckError(Exception):
    """Closed form and recurrence disagreed on a value about to be emitted."""


def _pair(value: Fraction, digits: int) -> dict[str, str]:
    return {"exact": render(value), "decimal": to_decimal_string(value, digits)}


def _scalar(label: str, value: Fraction, digits: int) -> str:
    return f"{label} = {render(value)} ({to_decimal_string(value, digits)})"


def _envelope(command: str, inputs: dict, results: dict) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    return json.dumps(doc, indent=2) + "\n"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = []
    for row in [header, *rows]:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    return "\n".join([",".join(header), *(",".join(row) for row in rows)]) + "\n"


def _race_config(args) -> race.RaceConfig:
    return race.RaceConfig(x0=args.x0, sa=args.sa, st=args.st)


def cmd_catchup(args) -> str:
    config = _race_config(args)
    result = race.catch_up(config)
    if args.json:
        return _envelope(
            "catchup",
            {"x0": render(config.x0), "sa": render(config.sa), "st": render(config.st)},
            {
                "t_inf": _pair(result.t_inf, args.digits),
                "x_inf": _pair(result.x_inf, args.digits),
            },
        )
    return (
        _scalar("t_inf", result.t_inf, args.digits)
        + "\n"
        + _scalar("x_inf", result.x_inf, args.digits)
        + "\n"
    )


def _step_rows(config: race.RaceConfig, count: int):
    """Recurrence events with the leader's lead per step, cross-checked.

    The lead x0*r^(n+1) comes from the closed form (valid for any ratio,
    ratio 1 included); for ratio != 1 every emitted time and position is
    also compared against its closed form before anything is printed.
    """
    events = race.step_sequence(config, count)
    r = config.ratio
    gaps = []
    lead = config.x0 * r
    for ev in events:
        gaps.append(lead)
        lead *= r
    if r != 1:
        for ev, gap in zip(events, gaps):
            if race.t_n_closed(config, ev.n) != ev.t or race.x_n_closed(config, ev.n) != ev.x:
                raise InternalCheckError(
                    f"closed form and recurrence disagree at step {ev.n}"
                )
    for cur, nxt in zip(events, events[1:]):
        if nxt.x - cur.x != gaps[cur.n]:
            raise InternalCheckError(
                f"gap closed form and recurrence disagree at step {cur.n}"
            )
    return events, gaps


def cmd_steps(args) -> str:
    if not 1 <= args.n <= race.MAX_STEPS:
        raise ValueError(f"--n must be between 1 and {race.MAX_STEPS}")
    config = _race_config(args)
    events, gaps = _step_rows(config, args.n)
    if args.format == "json":
        return _envelope(
            "steps",
            {
                "x0": render(config.x0),
                "sa": render(config.sa),
                "st": render(config.st),
                "n": args.n,
            },
            {
                "steps": [
                    {
                        "n": ev.n,
                        "t": _pair(ev.t, args.digits),
                        "x": _pair(ev.x, args.digits),
                        "gap": _pair(gap, args.digits),
                    }
                    for ev, gap in zip(events, gaps)
                ]
            },
        )
    rows = [
        [str(ev.n), render(ev.t), render(ev.x), render(gap)]
        for ev, gap in zip(events, gaps)
    ]
    header = ["n", "t_n", "x_n", "gap"]
    if args.format == "csv":
        return _csv(header, rows)
    return _table(header, rows)


def cmd_within(args) -> str:
    config = _race_config(args)
    n = race.steps_to_within(config, args.eps)
    residual = race.catch_up(config).t_inf - race.t_n_closed(config, n)
    return f"n = {n}\n" + _scalar("residual", residual, args.digits) + "\n"


def cmd_process(args) -> str:
    if args.k < 0:
        raise ValueError("--k must be >= 0")
    proc = processes.GeometricEventProcess(first_interval=args.first, ratio=args.ratio)
    times = processes.event_times(proc, args.k + 1)
    rows = [[str(k), render(t)] for k, t in enumerate(times)]
    out = _table(["k", "t_k"], rows)
    if proc.ratio < 1:
        limit = processes.accumulation_point(proc)
        out += _scalar("accumulation point", limit, args.digits) + "\n"
    else:
        # Partial sums are well defined regardless of convergence, so the
        # event table still prints and this is not an error exit.
        out += "accumulation point: divergent (ratio >= 1)\n"
    return out


def cmd_dichotomy(args) -> str:
    if not 1 <= args.n <= race.MAX_STEPS:
        raise ValueError(f"--n must be between 1 and {race.MAX_STEPS}")
    config = processes.DichotomyConfig(length=args.length, speed=args.speed)
    events = processes.dichotomy_sequence(config, args.n)
    total = processes.accumulation_point(processes.dichotomy_process(config))
    rows = [[str(ev.n), render(ev.t), render(ev.x)] for ev in events]
    return _table(["n", "t_n", "x_n"], rows) + _scalar("total time", total, args.digits) + "\n"


def cmd_bounce(args) -> str:
    config = processes.BounceConfig(first_flight=args.first, time_ratio=args.ratio)
    rest = processes.accumulation_point(processes.bounce_process(config))
    return _scalar("rest time", rest, args.digits) + "\n"


def cmd_floaterr(args) -> str:
    if not 1 <= args.nmax <= race.MAX_STEPS:
        raise ValueError(f"--nmax must be between 1 and {race.MAX_STEPS}")
    config = _race_config(args)
    rows = []
    for pair in floatsum.error_sweep(config, args.nmax):
        for report in pair:
            rows.append(
                [
                    str(report.n),
                    report.method,
                    repr(report.value),
                    render(report.exact),
                    repr(float(report.abs_error)),
                    repr(float(report.rel_error)),
                ]
            )
    return _csv(["n", "method", "value", "exact", "abs_error", "rel_error"], rows)


def _add_race_arguments(sub) -> None:
    sub.add_argument("--x0", type=parse, required=True, help="leader's head start (rational)")
    sub.add_argument("--sa", type=parse, required=True, help="pursuer speed (rational)")
    sub.add_argument("--st", type=parse, required=True, help="leader speed (rational)")


def _add_digits(sub) -> None:
    sub.add_argument(
        "--digits",
        type=int,
        default=DEFAULT_DIGITS,
        help="fractional digits of the decimal approximations (default 6)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zenoseq",
        description="Exact analysis of convergent event sequences: chase races, "
        "halving walks, bouncing balls, and a float-vs-exact audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catchup", help="catch-up time and distance of the chase")
    _add_race_arguments(p)
    _add_digits(p)
    p.add_argument("--json", action="store_true", help="emit a JSON envelope")
    p.set_defaults(handler=cmd_catchup)

    p = sub.add_parser("steps", help="step-event table of the chase")
    _add_race_arguments(p)
    _add_digits(p)
    p.add_argument("--n", type=int, required=True, help="number of steps (1..10000)")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(handler=cmd_steps)

    p = sub.add_parser("within", help="first step whose residual time drops below eps")
    _add_race_arguments(p)
    _add_digits(p)
    p.add_argument("--eps", type=parse, required=True, help="residual threshold (rational)")
    p.set_defaults(handler=cmd_within)

    p = sub.add_parser("process", help="event times of a geometric event process")
    p.add_argument("--first", type=parse, required=True, help="duration of event 0 (rational)")
    p.add_argument("--ratio", type=parse, required=True, help="interval ratio (rational)")
    p.add_argument("--k", type=int, required=True, help="last event index to print")
    _add_digits(p)
    p.set_defaults(handler=cmd_process)

    p = sub.add_parser("dichotomy", help="half-the-remaining-distance walk")
    p.add_argument("--length", type=parse, required=True, help="track length (rational)")
    p.add_argument("--speed", type=parse, required=True, help="runner speed (rational)")
    p.add_argument("--n", type=int, required=True, help="number of steps (1..10000)")
    _add_digits(p)
    p.set_defaults(handler=cmd_dichotomy)

    p = sub.add_parser("bounce", help="rest time of a geometrically damped bouncer")
    p.add_argument("--first", type=parse, required=True, help="first flight time (rational)")
    p.add_argument("--ratio", type=parse, required=True, help="flight-time ratio (rational)")
    _add_digits(p)
    p.set_defaults(handler=cmd_bounce)

    p = sub.add_parser("floaterr", help="float summation audited against the exact oracle")
    _add_race_arguments(p)
    p.add_argument("--nmax", type=int, required=True, help="sweep end index (1..10000)")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(handler=cmd_floaterr)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.handler(args)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
