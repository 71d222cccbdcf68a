"""Command-line interface.

Subcommands:
  bound          single-point report of the error bounds and advantage
  advantage-map  (k, p) sweep written as CSV or JSON
  spade          per-separation sweep of the mode-sorting strategy
  simulate       seeded Monte Carlo run, printed as JSON
  verify         grid-space versus closed-form equivalence check

Exit codes: 0 success, 2 bad flags, 3 degenerate scenario, 4 output I/O
error, 5 verification or statistical failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import DegenerateScenarioError, DomainError, GridAccuracyError
from .helstrom import bound_report, eigenvalues_sym2, useless_boundary
from .montecarlo import TrialConfig, run_simulation
from .oracle import equivalence_report
from .states import ScenarioParams, lambda_matrix, normalization
from .sweeps import SweepSpec, format_sig, render_csv, render_json, sweep_rows

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4
EXIT_VERIFY = 5


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:STEPS, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:STEPS, got {text!r}") from exc


def _add_scenario_flags(parser: argparse.ArgumentParser, with_k: bool = True, with_p: bool = True) -> None:
    if with_k:
        parser.add_argument("--k", type=float, required=True, help="separation in PSF widths")
    parser.add_argument("--gamma", type=float, default=0.0, help="coherence strength in [0, 1]")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--theta", type=float, default=0.0, help="coherence phase in radians")
    group.add_argument(
        "--theta-pi", type=float, dest="theta_pi", default=None,
        help="coherence phase as a multiple of pi",
    )
    if with_p:
        parser.add_argument("--p", type=float, default=0.5, help="prior probability of two sources")


def _theta(ns: argparse.Namespace) -> float:
    return ns.theta_pi * math.pi if ns.theta_pi is not None else ns.theta


def _scenario(ns: argparse.Namespace) -> ScenarioParams:
    return ScenarioParams(k=ns.k, gamma=ns.gamma, theta=_theta(ns), p=ns.p)


def _value_token(value: object) -> str:
    """Deterministic token for one output value (9 significant digits for
    floats, JSON-compatible for the rest)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_sig(value)
    return '"' + str(value) + '"'


def _print_record(fields: list[tuple[str, object]], as_json: bool) -> None:
    if as_json:
        body = ", ".join(f'"{key}": {_value_token(value)}' for key, value in fields)
        print("{" + body + "}")
    else:
        for key, value in fields:
            print(f"{key} = {_value_token(value)}")


def _emit(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_bound(ns: argparse.Namespace) -> int:
    try:
        params = _scenario(ns)
    except DegenerateScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lam = lambda_matrix(params)
    eig_low, eig_high = eigenvalues_sym2(lam)
    report = bound_report(params)
    fields: list[tuple[str, object]] = [
        ("k", params.k),
        ("gamma", params.gamma),
        ("theta", params.theta),
        ("p", params.p),
        ("delta", params.delta),
        ("normalization", normalization(params.delta, params.c)),
        ("lambda_11", lam.a11),
        ("lambda_12", lam.a12),
        ("lambda_22", lam.a22),
        ("eig_low", eig_low),
        ("eig_high", eig_high),
        ("o_err", report.o_err),
        ("d_err", report.d_err),
        ("a_qod", report.a_qod),
        ("p_star", useless_boundary(params.delta, params.c)),
        ("useless", report.useless),
    ]
    _print_record(fields, ns.format == "json")
    return EXIT_OK


def _sweep_spec(ns: argparse.Namespace, p_range: tuple[float, float, int]) -> SweepSpec:
    k_min, k_max, k_steps = ns.k_range
    p_min, p_max, p_steps = p_range
    return SweepSpec(
        k_min=k_min, k_max=k_max, k_steps=k_steps,
        p_min=p_min, p_max=p_max, p_steps=p_steps,
        gamma=ns.gamma, theta=_theta(ns),
    )


def _run_sweep(ns: argparse.Namespace, p_range: tuple[float, float, int]) -> int:
    try:
        spec = _sweep_spec(ns, p_range)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = sweep_rows(spec)
    text = render_csv(rows) if ns.format == "csv" else render_json(rows)
    return _emit(text, ns.output)


def _cmd_advantage_map(ns: argparse.Namespace) -> int:
    return _run_sweep(ns, ns.p_range)


def _cmd_spade(ns: argparse.Namespace) -> int:
    return _run_sweep(ns, (ns.p, ns.p, 1))


def _cmd_simulate(ns: argparse.Namespace) -> int:
    try:
        config = TrialConfig(
            params=_scenario(ns), n_photons=ns.photons, seed=ns.seed, epsilon=ns.epsilon
        )
    except DegenerateScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = run_simulation(config)
    fields: list[tuple[str, object]] = [
        ("n_trials", result.n_trials),
        ("n_errors", result.n_errors),
        ("error_rate", result.error_rate),
        ("std_err", result.std_err),
        ("analytic_p_err", result.analytic_p_err),
        ("z_score", result.z_score),
    ]
    if result.n_attempts is not None:
        fields.append(("n_attempts", result.n_attempts))
    _print_record(fields, as_json=True)
    return EXIT_OK if abs(result.z_score) <= 3.0 else EXIT_VERIFY


def _cmd_verify(ns: argparse.Namespace) -> int:
    try:
        report = equivalence_report(n_points=ns.grid_points)
    except (GridAccuracyError, DomainError) as exc:
        print(f"verify: FAIL ({exc})")
        return EXIT_VERIFY
    print(f"overlap max abs error = {format_sig(report.max_overlap_error)}")
    print(f"rho2 max abs error = {format_sig(report.max_rho2_error)}")
    print(f"helstrom max abs error = {format_sig(report.max_helstrom_error)}")
    print(f"tolerance = {format_sig(report.tolerance)}")
    if report.passed:
        print("verify: PASS")
        return EXIT_OK
    print("verify: FAIL")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohdet",
        description="Decide whether a faint optical scene holds one source or two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="single-point error bounds and advantage")
    _add_scenario_flags(bound)
    bound.add_argument("--format", choices=("text", "json"), default="text")
    bound.set_defaults(func=_cmd_bound)

    amap = sub.add_parser("advantage-map", help="(k, p) sweep of the advantage surface")
    _add_scenario_flags(amap, with_k=False, with_p=False)
    amap.add_argument("--k-range", type=_parse_range, required=True, metavar="MIN:MAX:STEPS")
    amap.add_argument("--p-range", type=_parse_range, required=True, metavar="MIN:MAX:STEPS")
    amap.add_argument("--output", default=None, help="output path (stdout when omitted)")
    amap.add_argument("--format", choices=("csv", "json"), default="csv")
    amap.set_defaults(func=_cmd_advantage_map)

    spade = sub.add_parser("spade", help="mode-sorting strategy versus separation")
    _add_scenario_flags(spade, with_k=False)
    spade.add_argument("--k-range", type=_parse_range, required=True, metavar="MIN:MAX:STEPS")
    spade.add_argument("--output", default=None, help="output path (stdout when omitted)")
    spade.add_argument("--format", choices=("csv", "json"), default="csv")
    spade.set_defaults(func=_cmd_spade)

    simulate = sub.add_parser("simulate", help="seeded Monte Carlo self-test")
    _add_scenario_flags(simulate)
    simulate.add_argument("--photons", type=int, default=100000, help="registered one-photon trials")
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--epsilon", type=float, default=None,
                          help="mean photon number per emission attempt (enables vacuum modelling)")
    simulate.set_defaults(func=_cmd_simulate)

    verify = sub.add_parser("verify", help="grid oracle versus closed form")
    verify.add_argument("--grid-points", type=int, dest="grid_points", default=4001)
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
