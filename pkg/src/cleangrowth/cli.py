"""Command-line entry point.

    cleangrowth run [--config FILE] [--scenario LABEL] [--out DIR]
                    [--emit-plots] [--extend-until-disaster]
                    [--policy none|temporary|permanent]
                    [--horizon N] [--period-years R]
    cleangrowth verify [--seed N]
    cleangrowth calibrate [--config FILE]

`run` executes the scenario suite, writes one CSV per scenario plus a
summary CSV (and charts with --emit-plots), and prints the summary table.
`verify` runs the independent oracle suite and reports pass/fail lines.
`calibrate` prints the calibration report with every derived primitive.
Exit status is nonzero on any scenario or check failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import replace

from .calibration import calibration_report
from .config import default_suite, load_config
from .economy import SectorState, make_params
from .outputs import emit_outputs
from .policy import PolicyMode
from .simulate import run_suite
from .verify import check_foc_machine, check_identities, check_lockin

TABLE2_K = (0.0160, 0.102, 0.180, 0.201)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cleangrowth",
        description="Two-sector clean/dirty growth simulator with AI-accelerated innovation")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run the scenario suite and write CSV outputs")
    run_p.add_argument("--config", help="YAML config; defaults to the built-in suite")
    run_p.add_argument("--scenario", help="run only the scenario with this label")
    run_p.add_argument("--out", default="out", help="output directory (default: out)")
    run_p.add_argument("--emit-plots", action="store_true", help="write PNG charts")
    run_p.add_argument("--extend-until-disaster", action="store_true",
                       help="extend every run past the horizon until S hits 0")
    run_p.add_argument("--policy", choices=[m.value for m in PolicyMode],
                       help="override the policy mode of every scenario")
    run_p.add_argument("--horizon", type=int, help="override horizon_periods")
    run_p.add_argument("--period-years", type=float, help="override period length")

    ver_p = sub.add_parser("verify", help="run the independent oracle checks")
    ver_p.add_argument("--seed", type=int, default=20240501, help="RNG seed")

    cal_p = sub.add_parser("calibrate", help="print the calibration report")
    cal_p.add_argument("--config", help="YAML config; defaults to the built-in suite")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    suite = load_config(args.config) if args.config else default_suite()
    scenarios = suite.scenarios
    if args.scenario:
        scenarios = [sc for sc in scenarios if sc.label == args.scenario]
        if not scenarios:
            known = ", ".join(sc.label for sc in suite.scenarios)
            print(f"error: no scenario labelled {args.scenario!r} (have: {known})",
                  file=sys.stderr)
            return 2
    overrides = {}
    if args.extend_until_disaster:
        overrides["extend_until_disaster"] = True
    if args.policy:
        overrides["policy_mode"] = PolicyMode(args.policy)
    if args.horizon:
        overrides["horizon_periods"] = args.horizon
    if args.period_years:
        overrides["period_years"] = args.period_years
    if overrides:
        scenarios = [replace(sc, **overrides) for sc in scenarios]

    trajectories, rows = run_suite(scenarios)
    paths = emit_outputs(trajectories, rows, args.out, emit_plots=args.emit_plots)

    header = f"{'label':18s} {'AI impact':>9s} {'k':>7s} {'intervention':>12s} " \
             f"{'avoid disaster':>14s} {'switch year':>11s}"
    print(header)
    print("-" * len(header))
    for row in rows:
        impact = f"{row['ai_impact_10yr']:.1%}" if row["ai_impact_10yr"] is not None else "-"
        years = (f"{row['intervention_years']} years"
                 if row["intervention_years"] is not None else "-")
        switch = f"{row['switch_year']:g}" if row["switch_year"] is not None else "-"
        print(f"{row['label']:18s} {impact:>9s} {row['k']:7.4f} {years:>12s} "
              f"{row['avoid_disaster']:>14s} {switch:>11s}")
        if row["error"]:
            print(f"    failed: {row['error']}", file=sys.stderr)
    print(f"\nwrote {len(paths)} files to {args.out}")
    return 1 if any(row["error"] for row in rows) else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    params = make_params(1.0 / 3.0, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02)
    reports = []

    for _ in range(100):
        p = rng.uniform(0.2, 3.0)
        l = rng.uniform(0.05, 1.0)
        a = 10.0 ** rng.uniform(-2.0, 2.0)
        reports.append(check_foc_machine(p, l, a, params))

    for _ in range(100):
        state = SectorState(rng.uniform(-6.0, 6.0), rng.uniform(-6.0, 6.0))
        draw = make_params(rng.uniform(0.1, 0.9), rng.uniform(1.2, 20.0),
                           rng.uniform(0.05, 2.0), rng.uniform(0.2, 2.0),
                           rng.uniform(0.01, 1.0), rng.uniform(0.01, 1.0))
        reports.append(check_identities(state, draw))

    # Dirty-side starts deepen with k: at large k the clean corner is
    # transiently viable too, and the solver would take it.
    dirty_starts = {0.0160: 0.3, 0.102: 0.05, 0.180: 0.005, 0.201: 0.005}
    for k in TABLE2_K:
        reports.append(check_lockin("dirty", k, params, start_ratio=dirty_starts[k]))
        reports.append(check_lockin("clean", k, params, start_ratio=2.0))

    failures = [r for r in reports if not r.passed]
    passed = len(reports) - len(failures)
    for r in failures:
        print(r)
    print(f"[PASS] machine-demand grid oracle, identity sweep, lock-in: "
          f"{passed}/{len(reports)} checks passed")
    return 1 if failures else 0


def _cmd_calibrate(args: argparse.Namespace) -> int:
    suite = load_config(args.config) if args.config else default_suite()
    print(calibration_report(suite.inputs, suite.economy, suite.env.s_0))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_calibrate(args)


if __name__ == "__main__":
    sys.exit(main())
