"""Command-line interface.

    cointkit run      --config run.toml [--alpha A] [--max-lag P] [--det-case C] [--format F]
    cointkit adf      --input panel.csv --var gdp [--diff] [--log] [--alpha A] [--max-lag L] [--det-case C]
    cointkit simulate --spec dgp.json --reps N [--alpha A]
    cointkit plot     --input panel.csv --vars gdp,ac --out fig.svg

Exit codes: 0 on success, 2 for bad usage or configuration, 10 + stage
index when a pipeline stage fails (see pipeline.STAGES), 1 otherwise.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .adf import adf_test
from .diagnostics import multivariate_jb, white_system_test
from .errors import CointkitError, ConfigError
from .johansen import reduced_rank_regression
from .pipeline import RunConfig, StageError, load_config, load_csv, run_pipeline, write_outputs
from .plot import render_plot
from .series import difference, log_transform
from .simulate import DgpSpec, generate, rejection_rate
from .varsel import var_fit


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cointkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run the full pipeline from a TOML config")
    run_p.add_argument("--config", required=True)
    run_p.add_argument("--alpha", type=float, default=None)
    run_p.add_argument("--max-lag", type=int, default=None)
    run_p.add_argument("--det-case", default=None, help="Johansen deterministic case")
    run_p.add_argument("--format", choices=("json", "text"), default=None)

    adf_p = sub.add_parser("adf", help="unit-root test on one CSV column")
    adf_p.add_argument("--input", required=True)
    adf_p.add_argument("--var", required=True)
    adf_p.add_argument("--diff", action="store_true", help="test the first difference")
    adf_p.add_argument("--log", action="store_true", help="log-transform the column first")
    adf_p.add_argument("--alpha", type=float, default=0.05)
    adf_p.add_argument("--max-lag", type=int, default=None)
    adf_p.add_argument("--det-case", default="constant",
                       choices=("none", "constant", "constant_and_trend"))
    adf_p.add_argument("--lags", default="auto")
    adf_p.add_argument("--format", choices=("json", "text"), default="text")

    sim_p = sub.add_parser("simulate", help="Monte Carlo rejection rate for a named test")
    sim_p.add_argument("--spec", required=True, help="JSON DGP + test description")
    sim_p.add_argument("--reps", type=int, required=True)
    sim_p.add_argument("--alpha", type=float, default=0.05)
    sim_p.add_argument("--format", choices=("json", "text"), default="text")

    plot_p = sub.add_parser("plot", help="SVG trend plot of CSV columns")
    plot_p.add_argument("--input", required=True)
    plot_p.add_argument("--vars", required=True, help="comma-separated column names")
    plot_p.add_argument("--out", required=True)
    plot_p.add_argument("--log", action="store_true")
    return parser


def _cmd_run(args) -> int:
    config = load_config(args.config)
    overrides = {}
    if args.alpha is not None:
        overrides["alpha"] = args.alpha
    if args.max_lag is not None:
        overrides["p_max"] = args.max_lag
    if args.det_case is not None:
        overrides["johansen_det"] = args.det_case
    if args.format is not None:
        overrides["formats"] = (args.format,)
    if overrides:
        config = dataclasses.replace(config, **overrides).validated()
    report = run_pipeline(config)
    written = write_outputs(report, config)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_adf(args) -> int:
    data = load_csv(args.input, RunConfig(input_path=args.input, log_columns=()))
    s = data[args.var]
    if args.log:
        s = log_transform(s)
    if args.diff:
        s = difference(s)
    if args.lags == "auto":
        lags = "auto"
    else:
        try:
            lags = int(args.lags)
        except ValueError:
            raise ConfigError(f"--lags must be an integer or 'auto', got {args.lags!r}") from None
    res = adf_test(s, args.det_case, lags=lags, max_lags=args.max_lag)
    if args.format == "json":
        print(json.dumps({
            "variable": s.name,
            "statistic": res.statistic,
            "p_value": res.p_value,
            "lags_used": res.lags_used,
            "deterministic": res.deterministic,
            "n_effective": res.n_effective,
            "critical_values": res.critical_values,
            "reject_unit_root": res.p_value <= args.alpha,
        }, indent=2))
    else:
        verdict = "rejected" if res.p_value <= args.alpha else "not rejected"
        print(f"ADF test for {s.name} ({res.deterministic}, {res.lags_used} lags, "
              f"n={res.n_effective})")
        print(f"  statistic {res.statistic:.6f}   p-value {res.p_value:.4f}")
        cvs = "   ".join(f"{k}: {v:.4f}" for k, v in res.critical_values.items())
        print(f"  critical values {cvs}")
        print(f"  unit root {verdict} at alpha={args.alpha:g}")
    return 0


_SIM_TESTS = ("adf", "johansen_trace", "white", "jb")


def _make_pvalue_fn(spec_dict: dict, alpha: float):
    test = spec_dict.get("test", "adf")
    if test == "adf":
        det = spec_dict.get("det", "constant")
        lags = spec_dict.get("lags", 0)

        def fn(dataset):
            return adf_test(dataset.variables[0], det, lags=lags).p_value
    elif test == "johansen_trace":
        det = spec_dict.get("det", "const")
        p = spec_dict.get("p", 1)

        def fn(dataset):
            return reduced_rank_regression(dataset, p, det, alpha).trace_rows[0].p_value
    elif test == "white":
        p = spec_dict.get("p", 1)

        def fn(dataset):
            fit = var_fit(dataset, p)
            return white_system_test(fit.residuals, fit.regressors[:, 1:], alpha).p_value
    elif test == "jb":
        p = spec_dict.get("p", 1)

        def fn(dataset):
            fit = var_fit(dataset, p)
            return multivariate_jb(fit.residuals).joint_jb_p
    else:
        raise ConfigError(f"unknown test {test!r}; expected one of {_SIM_TESTS}")
    return fn


def _cmd_simulate(args) -> int:
    spec_dict = json.loads(Path(args.spec).read_text(encoding="utf-8"))
    test_keys = {"test", "det", "lags", "p"}
    dgp_kwargs = {k: v for k, v in spec_dict.items() if k not in test_keys}
    for key in ("loading", "cointegration", "innovation_cov"):
        if key in dgp_kwargs and dgp_kwargs[key] is not None:
            dgp_kwargs[key] = tuple(tuple(row) for row in dgp_kwargs[key])
    spec = DgpSpec(**dgp_kwargs)
    fn = _make_pvalue_fn(spec_dict, args.alpha)
    summary = rejection_rate(fn, spec, args.reps, args.alpha)
    if args.format == "json":
        print(json.dumps({
            "rate": summary.rate,
            "rejections": summary.rejections,
            "completed": summary.completed,
            "failures": summary.failures,
            "reps": summary.reps,
            "alpha": summary.alpha,
        }, indent=2))
    else:
        print(f"rejection rate {summary.rate:.4f} "
              f"({summary.rejections}/{summary.completed} completed, "
              f"{summary.failures} failures, alpha={summary.alpha:g})")
    return 0


def _cmd_plot(args) -> int:
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    config = RunConfig(input_path=args.input, log_columns=None if args.log else ())
    data = load_csv(args.input, config)
    wanted = [f"l_{n}" if args.log else n for n in names]
    render_plot(data, wanted, args.out)
    print(f"wrote {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "adf":
            return _cmd_adf(args)
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "plot":
            return _cmd_plot(args)
        parser.error(f"unknown command {args.command!r}")
    except StageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (CointkitError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
