"""Command-line entry points: curve-sample detection and the simulation
harness.

Exit codes: 0 on success, 2 on unusable input (missing or malformed file,
degenerate sample, bad flag values).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .adjusted import CalibrationConfig
from .core import BoundaryKind, run_outliergram
from .fbplot import functional_boxplot
from .report import report_json
from .sample import load_csv
from .simulation import ModelSpec, evaluate
from .svg import render_curves, render_fbplot, render_outliergram

_METHOD_NAMES = {"og": "outliergram", "og-adj": "adjusted_outliergram", "fbplot": "fbplot"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outliergram",
        description="Detect shape and magnitude outliers in samples of curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    detect = sub.add_parser("detect", help="run detection on a CSV of curves")
    detect.add_argument("--input", required=True, help="CSV file of curves")
    detect.add_argument("--adjusted", action="store_true",
                        help="calibrate the detection boundary on simulated null data")
    detect.add_argument("--factor", type=float, default=1.5,
                        help="boxplot factor for the standard rule (default 1.5)")
    detect.add_argument("--seed", type=int, default=None,
                        help="seed for the adjusted calibration")
    detect.add_argument("--report", help="write the JSON report here")
    detect.add_argument("--svg-dir", help="write SVG figures into this directory")
    detect.add_argument("--with-fbplot", action="store_true",
                        help="also flag magnitude outliers with the functional boxplot")

    simulate = sub.add_parser("simulate", help="replay seeded simulation runs")
    simulate.add_argument("--model", type=int, choices=(1, 2, 3), required=True)
    simulate.add_argument("--n", type=int, default=100, help="sample size per run")
    simulate.add_argument("--c", type=float, default=0.1, help="contamination rate")
    simulate.add_argument("--runs", type=int, default=100)
    simulate.add_argument("--method", choices=sorted(_METHOD_NAMES), default="og")
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--json", action="store_true",
                          help="machine-readable output (deterministic, no timing)")
    return parser


def _cmd_detect(args) -> int:
    try:
        sample = load_csv(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    kind = BoundaryKind.ADJUSTED if args.adjusted else BoundaryKind.STANDARD
    config = CalibrationConfig(seed=args.seed if args.seed is not None else 0)
    report = run_outliergram(sample, kind, factor=args.factor,
                             with_fbplot=args.with_fbplot, config=config)

    print(f"n={sample.n} p={sample.p} boundary={report.boundary.kind.value} "
          f"threshold={report.boundary.threshold:.6g}")
    if report.shape_outliers:
        for o in report.shape_outliers:
            print(f"shape outlier: {sample.label_of(o.index)} "
                  f"(index {o.index}, {o.stage.value})")
    else:
        print("no shape outliers")
    if args.with_fbplot:
        names = ", ".join(sample.label_of(i) for i in report.magnitude_outliers)
        print(f"magnitude outliers: {names if names else 'none'}")

    if args.report:
        Path(args.report).write_text(report_json(report, sample, seed=args.seed),
                                     encoding="utf-8")
    if args.svg_dir:
        svg_dir = Path(args.svg_dir)
        svg_dir.mkdir(parents=True, exist_ok=True)
        (svg_dir / "outliergram.svg").write_text(render_outliergram(report),
                                                 encoding="utf-8")
        (svg_dir / "curves.svg").write_text(render_curves(sample, report),
                                            encoding="utf-8")
        if args.with_fbplot:
            (svg_dir / "fbplot.svg").write_text(
                render_fbplot(sample, functional_boxplot(sample)), encoding="utf-8")
    return 0


def _cmd_simulate(args, parser: argparse.ArgumentParser) -> int:
    if args.runs < 1:
        parser.error("--runs must be at least 1")
    try:
        spec = ModelSpec(f"M{args.model}", n=args.n, c=args.c, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    start = time.perf_counter()
    result = evaluate(_METHOD_NAMES[args.method], spec, args.runs)
    elapsed = time.perf_counter() - start

    if args.json:
        payload = {
            "model": spec.model_id,
            "n": spec.n,
            "c": spec.c,
            "method": _METHOD_NAMES[args.method],
            "runs": result.runs,
            "seed": args.seed,
            "pc_mean": result.pc_mean,
            "pc_sd": result.pc_sd,
            "pf_mean": result.pf_mean,
            "pf_sd": result.pf_sd,
        }
        print(json.dumps(payload, indent=2))
    else:
        pc = ("-" if result.pc_mean is None
              else f"{result.pc_mean:.3f} ({result.pc_sd:.3f})")
        pf = f"{result.pf_mean:.3f} ({result.pf_sd:.3f})"
        print(f"model={spec.model_id} n={spec.n} c={spec.c} "
              f"method={_METHOD_NAMES[args.method]} runs={result.runs}")
        print(f"pc: {pc}   pf: {pf}   wall: {elapsed:.2f}s")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "detect":
        return _cmd_detect(args)
    return _cmd_simulate(args, parser)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
