"""Command-line front door.

Each subcommand runs one exact computation or one seeded Monte Carlo
campaign and emits a deterministic report: CSV by default, JSON with
--format json, to stdout or to --out.  Identical invocations (including
the seed) produce byte-identical bytes; wall time goes to stderr only.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 a built-in
identity check came back false.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from fractions import Fraction

import numpy as np

from . import __version__
from .boarding import STRATEGIES, boarding_permutation
from .errors import InsufficientDataError, NumericalFailureError
from .formats import grid_lines, parse_partition, parse_permutation
from .hammersley import (
    DEFAULT_THETA_STEP,
    boundary_deviation,
    greedy_ne_path,
    limit_curve_table,
    longest_chain,
    path_steps,
    poisson_square,
    scaled_boundary,
    step_statistics,
)
from .permcore import lds, lis_bruteforce, lis_length, lis_patience, uniform_random
from .plancherel import (
    expected_lis_exact,
    plancherel_prob,
    sample_shape_growth,
    sample_shape_rsk,
)
from .reports import (
    Report,
    RunConfig,
    TableData,
    child_seed,
    format_value,
    make_rng,
    report_to_json,
    serialize_report,
)
from .rsk import rsk_insert, rsk_inverse
from .young import check_syt_sum_identity, enumerate_partitions, hook_lengths, syt_count_hlf


def _require_seed(args) -> int:
    if args.seed is None:
        raise ValueError("this subcommand draws randomness; pass an explicit --seed")
    return args.seed


def _emit_csv(path: str, columns, rows) -> None:
    """Plain header-plus-rows CSV for curve and distribution emissions."""
    import csv

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


# ---------------------------------------------------------------- subcommands


def run_lis(args) -> Report:
    perm = parse_permutation(args.permutation)
    result = lis_patience(perm)
    metrics = {
        "n": perm.n,
        "lis_length": result.lis_length,
        "lds_length": lds(perm),
        "pile_count": len(result.pile_sizes),
        "pile_sizes": list(result.pile_sizes),
    }
    identity_ok = True
    if args.check_bruteforce:
        oracle = lis_bruteforce(perm)
        metrics["bruteforce_lis"] = oracle
        identity_ok = oracle == result.lis_length
    table = TableData(
        name="piles",
        columns=("pile", "size", "cards_top_to_bottom"),
        rows=tuple(
            (i + 1, len(pile), list(pile)) for i, pile in enumerate(result.piles)
        ),
    )
    config = RunConfig.build(
        "lis", args.seed, args.format, args.out,
        permutation=args.permutation, check_bruteforce=args.check_bruteforce or None,
    )
    return Report(config=config, metrics=metrics, table=table, identity_ok=identity_ok)


def run_rsk(args) -> Report:
    perm = parse_permutation(args.permutation)
    pair = rsk_insert(perm)
    round_trip = rsk_inverse(pair)
    metrics = {
        "n": perm.n,
        "shape": list(pair.p.shape.parts),
        "p_rows": [list(row) for row in pair.p.rows],
        "q_rows": [list(row) for row in pair.q.rows],
        "first_row_length": pair.p.shape.parts[0],
        "round_trip_ok": round_trip == perm,
    }
    config = RunConfig.build(
        "rsk", args.seed, args.format, args.out, permutation=args.permutation
    )
    return Report(config=config, metrics=metrics, identity_ok=round_trip == perm)


def _render_rsk(report: Report) -> str:
    body = report_to_json(report)
    if report.config.fmt == "json":
        return body
    lines = ["P"]
    lines += grid_lines(report.metrics["p_rows"])
    lines.append("Q")
    lines += grid_lines(report.metrics["q_rows"])
    return "\n".join(lines) + "\n" + body


def run_hook(args) -> Report:
    shape = parse_partition(args.partition)
    grid = hook_lengths(shape)
    count = syt_count_hlf(shape)
    metrics = {"shape": list(shape.parts), "n": shape.n, "syt_count": count}
    table = TableData(
        name="hooks",
        columns=("row", "hooks"),
        rows=tuple((i + 1, list(row)) for i, row in enumerate(grid)),
    )
    config = RunConfig.build("hook", args.seed, args.format, args.out, partition=args.partition)
    return Report(config=config, metrics=metrics, table=table)


def run_syt_identity(args) -> Report:
    check = check_syt_sum_identity(args.n)
    metrics = {
        "n": check.n,
        "sum_of_squares": check.sum_of_squares,
        "factorial": check.factorial,
        "ok": check.ok,
    }
    config = RunConfig.build("syt-identity", args.seed, args.format, args.out, n=args.n)
    return Report(config=config, metrics=metrics, identity_ok=check.ok)


def run_plancherel(args) -> Report:
    seed = _require_seed(args)
    if args.n < 1:
        raise ValueError("n must be at least 1")
    if args.samples < 1:
        raise ValueError("need at least one sample")
    sampler = sample_shape_rsk if args.method == "rsk" else sample_shape_growth
    rng = make_rng(seed)
    counts: dict = {}
    for _ in range(args.samples):
        shape = sampler(args.n, rng).shape
        counts[shape] = counts.get(shape, 0) + 1
    rows = []
    for lam in enumerate_partitions(args.n):
        observed = counts.get(lam, 0)
        exact = float(plancherel_prob(lam))
        rows.append((list(lam.parts), observed, observed / args.samples, exact))
    table = TableData(name="shapes", columns=("shape", "count", "empirical", "exact"), rows=tuple(rows))
    metrics = {"n": args.n, "samples": args.samples, "distinct_shapes": len(counts)}
    config = RunConfig.build(
        "plancherel", seed, args.format, args.out,
        n=args.n, samples=args.samples, method=args.method,
    )
    return Report(config=config, metrics=metrics, table=table)


def run_expected_lis(args) -> Report:
    if args.n < 1:
        raise ValueError("n must be at least 1")
    if args.exact:
        rows = []
        last = Fraction(1)
        for n in range(1, args.n + 1):
            last = expected_lis_exact(n)
            rows.append((n, f"{last.numerator}/{last.denominator}", float(last)))
        table = TableData(name="expected_lis", columns=("n", "exact", "decimal"), rows=tuple(rows))
        metrics = {"n": args.n, "value": float(last), "ratio_sqrt_n": float(last) / math.sqrt(args.n)}
        config = RunConfig.build(
            "expected-lis", args.seed, args.format, args.out, n=args.n, exact=True
        )
        return Report(config=config, metrics=metrics, table=table)

    seed = _require_seed(args)
    if args.samples < 1:
        raise ValueError("Monte Carlo mode needs --samples at least 1")
    lengths = np.empty(args.samples)
    for i in range(args.samples):
        rng = make_rng(child_seed(seed, i))
        lengths[i] = lis_length(rng.permutation(args.n))
    mean = float(lengths.mean())
    se = float(lengths.std(ddof=1) / math.sqrt(args.samples)) if args.samples > 1 else 0.0
    metrics = {
        "n": args.n,
        "samples": args.samples,
        "mean_lis": mean,
        "se_mean": se,
        "ratio_sqrt_n": mean / math.sqrt(args.n),
    }
    config = RunConfig.build(
        "expected-lis", seed, args.format, args.out, n=args.n, samples=args.samples
    )
    return Report(config=config, metrics=metrics)


def run_bounds(args) -> Report:
    seed = _require_seed(args)
    if args.n < 1_000:
        raise ValueError("bounds experiments need n at least 1000")
    if args.replicas < 1:
        raise ValueError("need at least one replica")
    sqrt_n = math.sqrt(args.n)
    threshold = math.ceil((1.0 + args.delta) * math.e * sqrt_n)
    rows = []
    paths = []
    chain_lengths = []
    for i in range(args.replicas):
        rng = make_rng(child_seed(seed, i))
        pts = poisson_square(args.n, rng)
        path = greedy_ne_path(pts)
        chain = longest_chain(pts)
        paths.append(path)
        chain_lengths.append(chain)
        radii, cosines = path_steps(path)
        rows.append(
            (
                i,
                path.length,
                path.length / sqrt_n,
                chain,
                chain / sqrt_n,
                float(radii.mean()) if radii.size else math.nan,
                float(cosines.mean()) if cosines.size else math.nan,
            )
        )
    greedy_ratios = np.array([r[2] for r in rows])
    chain_ratios = np.array([r[4] for r in rows])
    pooled = step_statistics(paths)
    exceedances = int(sum(1 for c in chain_lengths if c >= threshold))
    # log10 of the first-moment bound on P(L >= k) for the permutation model
    k = threshold
    log10_bound = (
        math.lgamma(args.n + 1)
        - math.lgamma(k + 1)
        - math.lgamma(args.n - k + 1)
        - math.lgamma(k + 1)
    ) / math.log(10.0)
    def _se(values: np.ndarray) -> float:
        return float(values.std(ddof=1) / math.sqrt(values.size)) if values.size > 1 else 0.0

    metrics = {
        "n": args.n,
        "replicas": args.replicas,
        "mean_greedy_ratio": float(greedy_ratios.mean()),
        "se_greedy_ratio": _se(greedy_ratios),
        "mean_chain_ratio": float(chain_ratios.mean()),
        "se_chain_ratio": _se(chain_ratios),
        "mean_step_radius": pooled.mean_radius,
        "mean_step_cos": pooled.mean_cos,
        "pooled_steps": pooled.step_count,
        "pi_half": math.pi / 2.0,
        "two_over_pi": 2.0 / math.pi,
        "e_constant": math.e,
        "delta": args.delta,
        "exceedance_threshold": threshold,
        "exceedance_count": exceedances,
        "markov_log10_bound": log10_bound,
    }
    table = TableData(
        name="replicas",
        columns=(
            "replica",
            "greedy_length",
            "greedy_ratio",
            "chain_length",
            "chain_ratio",
            "mean_radius",
            "mean_cos",
        ),
        rows=tuple(rows),
    )
    config = RunConfig.build(
        "bounds", seed, args.format, args.out,
        n=args.n, replicas=args.replicas, delta=args.delta,
    )
    return Report(config=config, metrics=metrics, table=table)


def run_limit_shape(args) -> Report:
    seed = _require_seed(args)
    if args.n < 1_000:
        raise ValueError("limit-shape experiments need n at least 1000")
    if args.samples < 1:
        raise ValueError("need at least one sample")
    rows = []
    deviations = []
    boundary_rows = []
    for i in range(args.samples):
        rng = make_rng(child_seed(seed, i))
        shape = sample_shape_rsk(args.n, rng).shape
        dev = boundary_deviation(shape, args.n)
        deviations.append(dev)
        rows.append((i, len(shape.parts), shape.parts[0], dev))
        if args.emit_boundary:
            for x, y in scaled_boundary(shape, args.n):
                boundary_rows.append((i, float(x), float(y)))
    if args.emit_boundary:
        _emit_csv(args.emit_boundary, ("sample", "x", "y"), boundary_rows)
    if args.emit_curve:
        curve = limit_curve_table(args.theta_step)
        _emit_csv(
            args.emit_curve,
            ("theta", "x", "y"),
            [(float(t), float(x), float(y)) for t, x, y in curve],
        )
    devs = np.asarray(deviations)
    metrics = {
        "n": args.n,
        "samples": args.samples,
        "mean_deviation": float(devs.mean()),
        "se_deviation": float(devs.std(ddof=1) / math.sqrt(devs.size)) if devs.size > 1 else 0.0,
        "max_deviation": float(devs.max()),
    }
    table = TableData(
        name="samples",
        columns=("sample", "rows", "first_part", "sup_deviation"),
        rows=tuple(rows),
    )
    config = RunConfig.build(
        "limit-shape", seed, args.format, args.out,
        n=args.n, samples=args.samples, theta_step=args.theta_step,
        emit_boundary=args.emit_boundary, emit_curve=args.emit_curve,
    )
    return Report(config=config, metrics=metrics, table=table)


def run_tw(args) -> Report:
    from . import tracywidom

    solution = tracywidom.solve_painleve_ii(tol=args.tol)
    metrics = {
        "tolerance": solution.tolerance,
        "residual": solution.residual,
        "asymptote_mismatch": solution.asymptote_mismatch,
        "x_min": solution.x_min,
        "x_max": solution.x_max,
    }
    table = None
    if args.tabulate or args.moments:
        tw_table = tracywidom.tw_cdf_table(solution)
        if args.tabulate:
            _emit_csv(
                args.tabulate,
                ("t", "cdf", "density"),
                zip(tw_table.t, tw_table.cdf, tw_table.density),
            )
            metrics["tabulated_points"] = int(tw_table.t.size)
        if args.moments:
            mean, variance = tracywidom.tw_mean_variance(tw_table)
            metrics["mean"] = mean
            metrics["variance"] = variance
            metrics["sd"] = math.sqrt(variance)
    config = RunConfig.build(
        "tw", args.seed, args.format, args.out,
        tol=args.tol, tabulate=args.tabulate, moments=args.moments or None,
    )
    return Report(config=config, metrics=metrics, table=table)


def run_fluctuations(args) -> Report:
    from . import tracywidom

    seed = _require_seed(args)
    rng = make_rng(seed)
    result = tracywidom.fluctuation_experiment(args.n, args.samples, rng)
    if args.emit_cdf:
        values = result.normalized
        empirical = np.arange(1, values.size + 1) / values.size
        reference = tracywidom.reference_cdf(tracywidom._default_table(), values)
        _emit_csv(
            args.emit_cdf,
            ("value", "empirical", "reference"),
            zip(values, empirical, reference),
        )
    metrics = {
        "n": result.n,
        "samples": result.samples,
        "ks_distance": result.ks_distance,
        "sample_mean": result.sample_mean,
        "sample_variance": result.sample_variance,
        "reference_mean": result.reference_mean,
        "reference_variance": result.reference_variance,
    }
    config = RunConfig.build(
        "fluctuations", seed, args.format, args.out,
        n=args.n, samples=args.samples, emit_cdf=args.emit_cdf,
    )
    return Report(config=config, metrics=metrics, warnings=result.warnings)


def run_boarding(args) -> Report:
    deterministic = args.strategy in ("back-to-front", "front-to-back")
    reference = 2.0 * math.sqrt(args.n)
    if deterministic:
        perm = boarding_permutation(args.strategy, args.n)
        metrics = {
            "strategy": args.strategy,
            "n": args.n,
            "lis_length": lis_length(perm.values()),
            "two_sqrt_n": reference,
        }
        config = RunConfig.build(
            "boarding", args.seed, args.format, args.out,
            strategy=args.strategy, n=args.n,
        )
        return Report(config=config, metrics=metrics)

    seed = _require_seed(args)
    if args.samples < 1:
        raise ValueError("need at least one sample")
    lengths = np.empty(args.samples)
    for i in range(args.samples):
        rng = make_rng(child_seed(seed, i))
        perm = boarding_permutation(args.strategy, args.n, rng)
        lengths[i] = lis_length(perm.values())
    metrics = {
        "strategy": args.strategy,
        "n": args.n,
        "samples": args.samples,
        "mean_lis": float(lengths.mean()),
        "se_mean": float(lengths.std(ddof=1) / math.sqrt(args.samples)) if args.samples > 1 else 0.0,
        "min_lis": int(lengths.min()),
        "max_lis": int(lengths.max()),
        "two_sqrt_n": reference,
    }
    config = RunConfig.build(
        "boarding", seed, args.format, args.out,
        strategy=args.strategy, n=args.n, samples=args.samples,
    )
    return Report(config=config, metrics=metrics)


# --------------------------------------------------------------------- wiring

_RENDERERS = {"rsk": _render_rsk}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="master seed; required for any randomness")
    common.add_argument("--format", choices=("csv", "json"), default="csv", dest="format")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="lislab",
        description="Longest increasing subsequence experiments: exact combinatorics and seeded Monte Carlo.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("lis", parents=[common], help="patience sorting of one permutation")
    p.add_argument("permutation", help="comma-separated entries, e.g. 2,4,3,7,6,1,5")
    p.add_argument("--check-bruteforce", action="store_true", help="cross-check against the quadratic oracle (n <= 20)")
    p.set_defaults(handler=run_lis)

    p = sub.add_parser("rsk", parents=[common], help="insertion tableaux of one permutation")
    p.add_argument("permutation", help="comma-separated entries")
    p.set_defaults(handler=run_rsk)

    p = sub.add_parser("hook", parents=[common], help="hook lengths and the tableau count of a shape")
    p.add_argument("partition", help="comma-separated parts, e.g. 3,2,2")
    p.set_defaults(handler=run_hook)

    p = sub.add_parser("syt-identity", parents=[common], help="check the squared-count identity at one n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=run_syt_identity)

    p = sub.add_parser("plancherel", parents=[common], help="sample Plancherel shapes and compare to exact probabilities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--method", choices=("rsk", "hookwalk"), default="rsk")
    p.set_defaults(handler=run_plancherel)

    p = sub.add_parser("expected-lis", parents=[common], help="expected LIS length: exact (small n) or Monte Carlo")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="tabulate exact values for 1..n")
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(handler=run_expected_lis)

    p = sub.add_parser("bounds", parents=[common], help="greedy path and longest chain in Poisson geometry")
    p.add_argument("--n", type=float, default=1_000_000.0, help="point intensity (square area)")
    p.add_argument("--replicas", type=int, default=50)
    p.add_argument("--delta", type=float, default=0.1, help="exceedance margin over e*sqrt(n)")
    p.set_defaults(handler=run_bounds)

    p = sub.add_parser("limit-shape", parents=[common], help="scaled Plancherel diagrams against the limit curve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--theta-step", type=float, default=DEFAULT_THETA_STEP)
    p.add_argument("--emit-boundary", default=None, metavar="FILE", help="CSV polyline of each scaled boundary")
    p.add_argument("--emit-curve", default=None, metavar="FILE", help="CSV polyline of the reference curve")
    p.set_defaults(handler=run_limit_shape)

    p = sub.add_parser("tw", parents=[common], help="distribution table from the Painleve II solve")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--tabulate", default=None, metavar="FILE", help="CSV of t,cdf,density")
    p.add_argument("--moments", action="store_true", help="report mean and variance of the tabulated law")
    p.set_defaults(handler=run_tw)

    p = sub.add_parser("fluctuations", parents=[common], help="normalized LIS fluctuations against the reference law")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--emit-cdf", default=None, metavar="FILE", help="CSV of empirical vs reference CDF")
    p.set_defaults(handler=run_fluctuations)

    p = sub.add_parser("boarding", parents=[common], help="LIS statistics of airplane boarding strategies")
    p.add_argument("--strategy", choices=STRATEGIES, required=True)
    p.add_argument("--n", type=int, required=True, help="number of seats")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(handler=run_boarding)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    start = time.perf_counter()
    try:
        report = args.handler(args)
    except (NumericalFailureError, InsufficientDataError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.wall_time_s = time.perf_counter() - start

    render = _RENDERERS.get(report.config.subcommand, serialize_report)
    text = render(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"wall time: {report.wall_time_s:.3f}s", file=sys.stderr)
    return 0 if report.identity_ok else 4


if __name__ == "__main__":
    raise SystemExit(main())
