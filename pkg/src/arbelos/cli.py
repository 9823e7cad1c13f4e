#!/usr/bin/env python3
"""
Usage:
  arbelos compute --R <R> --T <T> [--format <format>]
  arbelos solve --R <R> --T <T> [--branch <branch>] [--format <format>]
  arbelos verify --R <R> --T <T> [--method <method>] [--samples <samples>] [--resolution <resolution>] [--seed <seed>] [--workers <workers>] [--format <format>]
  arbelos render --R <R> --n <n> --out <out> [--shade] [--no-labels] [--width <width>] [--margin <margin>] [--stroke <stroke>]
  arbelos sweep [--steps <steps>] [--format <format>]
  arbelos -h | --help

Options:
  -h, --help
  --R <R:length>                    Circumscribing radius.
  --T <T:length>                    Chord length PN.
  --n <n:length>                    Signed offset of N from the center O.
  --branch <branch:Branch>          Root given to R1, plus or minus [default: plus].
  --method <method:Method>          Oracle method, mc or grid [default: mc].
  --samples <samples:count>         Monte Carlo samples [default: 1000000].
  --resolution <resolution:count>   Grid cells per axis [default: 2048].
  --seed <seed:int>                 Generator seed [default: 42].
  --workers <workers:count>         Oracle worker threads [default: 1].
  --out <out:str>                   SVG file, or a dash for standard output.
  --shade                           Fill the knife region.
  --no-labels                       Leave out point labels.
  --width <width:length>            Canvas width in pixels [default: 400].
  --margin <margin:length>          Canvas margin in pixels [default: 20].
  --stroke <stroke:length>          Stroke width in pixels [default: 1.5].
  --steps <steps:count>             Sweep intervals over t [default: 10].
  --format <format:str>             Output format, human or json [default: human].

Exit status is 0 on success, 1 when verification fails and 2 on bad input
or an output file that cannot be written.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import fastlogging
from box import Box
from docopt import DocoptExit

from arbelos import arg, fig, geom, mc, norm, out, svg
from arbelos.err import ArbelosError, InvalidOptions
from arbelos.mc import Method, OracleConfig
from arbelos.norm import Branch

if "root" in fastlogging.domains:
    log = fastlogging.domains["root"]
else:
    log = logging.getLogger(__name__)

OK, FAILED, USAGE = 0, 1, 2
FORMATS = ("human", "json")

length = float


def count(text: str) -> int:
    """Positive integer given in decimal."""
    value = int(text)
    if value < 1:
        raise ValueError(f"{value} is not positive")
    return value


def _emit(args: Box, record: dict, note: Optional[str] = None) -> None:
    if args.format == "json":
        print(out.dumps(record))
        if note:
            log.warning(note)
        return

    width = max(map(len, record))
    for name, value in record.items():
        print(f"{name:<{width}}  {out.human(value)}")
    if note:
        print(f"note: {note}")


def compute(args: Box) -> int:
    config = geom.validate_config(args.R, args.T)
    state = norm.complete_state(norm.normalize(config), Branch.PLUS)
    record = {"R": config.R, "T": config.T, **state._asdict()}
    if args.format == "human":
        record["branch"] = Branch.PLUS.value
    record.update(geom.area_decomposition(config)._asdict())

    _emit(args, record, "degenerate: C2 vanishes" if config.T == 0 else None)
    return OK


def solve(args: Box) -> int:
    config = geom.validate_config(args.R, args.T)
    radii = geom.radii_from_chord(config, args.branch)

    record = {"R": config.R, "T": config.T, "branch": args.branch.value}
    _emit(args, {**record, **radii._asdict()})
    return OK


def verify(args: Box) -> int:
    config = geom.validate_config(args.R, args.T)
    oracle = OracleConfig(
        method=args.method,
        samples=args.samples,
        grid_resolution=args.resolution,
        seed=args.seed,
        workers=args.workers,
    )
    report = mc.verify_config(config, oracle)

    checks = [
        {
            "region": check.region.value,
            "closed_form": check.closed_form,
            "estimate": check.estimate.value,
            "std_error": check.estimate.std_error,
            "discrepancy": check.discrepancy,
            "pass": check.passed,
        }
        for check in report.checks
    ]
    if args.format == "json":
        print(
            out.dumps(
                {
                    "R": config.R,
                    "T": config.T,
                    "method": oracle.method.value,
                    "samples": oracle.samples,
                    "resolution": oracle.grid_resolution,
                    "seed": oracle.seed,
                    "pass": report.passed,
                    "regions": checks,
                }
            )
        )
    else:
        print(out.table(checks))
        print(f"overall: {'pass' if report.passed else 'FAIL'}")

    return OK if report.passed else FAILED


def render(args: Box) -> int:
    figure = fig.build_figure(args.R, args.n)
    options = svg.RenderOptions(
        canvas_width=args.width,
        margin=args.margin,
        shade_knife=args.shade,
        show_labels=not args.no_labels,
        stroke_width=args.stroke,
    )
    text = svg.render_figure(figure, options)

    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        log.info(f"Wrote {args.out}")
    return OK


def sweep(args: Box) -> int:
    if args.steps < 2:
        raise InvalidOptions(f"steps={args.steps} must be at least 2")

    rows = []
    for i in range(args.steps + 1):
        state = norm.complete_state(i / args.steps, Branch.PLUS)
        a_C1, a_C2 = norm.semicircle_area_ratios(state)
        rows.append(
            {
                **state._asdict(),
                "a_knife": norm.knife_area_ratio(state.t),
                "a_C1": a_C1,
                "a_C2": a_C2,
            }
        )

    print(out.dumps(rows) if args.format == "json" else out.table(rows))
    return OK


COMMANDS = {
    "compute": compute,
    "solve": solve,
    "verify": verify,
    "render": render,
    "sweep": sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = arg.parse(__doc__, globals(), argv)
        if args.format not in FORMATS:
            raise arg.UsageError(f"--format {args.format!r}: not one of {FORMATS}")

        command = next(name for name in COMMANDS if args[name])
        return COMMANDS[command](args)
    except DocoptExit as e:
        print(e, file=sys.stderr)
    except (arg.UsageError, ArbelosError, OSError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
    return USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
