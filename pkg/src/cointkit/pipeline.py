"""End-to-end pipeline: CSV in, report tables and plot out.

A run walks the full chain: per-variable integration classification, VAR
lag selection, Johansen rank tests, the normalized long-run equation, VECM
estimation and residual diagnostics.  Each stage lands in one section of a
:class:`PipelineReport`, which renders to JSON (machine-readable, stable
key order) and text (numbers rounded to 6 decimals from the same values).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .adf import DETERMINISTIC_CASES, classify_integration
from .diagnostics import multivariate_jb, white_system_test
from .errors import (
    CointkitError,
    ConfigError,
    MissingColumn,
    NonPositiveValue,
    NotEnoughVariables,
    ParseError,
    YearGap,
)
from .johansen import DET_CASES, normalize_long_run, rank_decision, reduced_rank_regression
from .plot import render_plot
from .series import Dataset, Series, align, log_transform
from .varsel import select_lag
from .vecm import disequilibrium_correction, vecm_fit

STAGES = ("load", "adf", "lag_selection", "johansen", "long_run", "vecm", "diagnostics", "output")


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    variables: tuple[str, ...] = ()          # empty means every non-year column
    log_columns: tuple[str, ...] | None = None   # None means log everything
    alpha: float = 0.05
    p_max: int = 3
    adf_level_det: str = "constant_and_trend"
    adf_diff_det: str = "constant"
    johansen_det: str = "const"
    lag_rule: str = "majority"
    rank: int | None = None                  # override the trace decision
    normalize_on: str | None = None          # default: first variable
    ec_term_style: str = "per_relation"
    output_dir: str = "."
    formats: tuple[str, ...] = ("json", "text")
    plot: bool = False
    plot_vars: tuple[str, ...] = ()
    hard_stop_non_i1: bool = False

    def validated(self) -> "RunConfig":
        if not 0.0 < self.alpha <= 0.5:
            raise ConfigError(f"alpha must be in (0, 0.5], got {self.alpha}")
        if self.p_max < 1:
            raise ConfigError(f"p_max must be >= 1, got {self.p_max}")
        for det in (self.adf_level_det, self.adf_diff_det):
            if det not in DETERMINISTIC_CASES:
                raise ConfigError(f"unknown ADF deterministic case {det!r}")
        if self.johansen_det not in DET_CASES:
            raise ConfigError(f"unknown Johansen deterministic case {self.johansen_det!r}")
        if self.lag_rule not in ("majority", "aic", "sc", "hq"):
            raise ConfigError(f"unknown lag rule {self.lag_rule!r}")
        if self.ec_term_style not in ("per_relation", "lagged_first_relation"):
            raise ConfigError(f"unknown ec_term_style {self.ec_term_style!r}")
        unknown = set(self.formats) - {"json", "text"}
        if unknown:
            raise ConfigError(f"unknown report formats {sorted(unknown)}")
        return self


def load_config(path: str | Path) -> RunConfig:
    """Read a TOML run configuration."""
    try:
        import tomllib  # Python >= 3.11
    except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
        import tomli as tomllib
    raw = tomllib.loads(Path(path).read_text(encoding="utf-8"))
    key_map = {
        "input": "input_path",
        "output_dir": "output_dir",
        "variables": "variables",
        "log_transform": "log_columns",
        "alpha": "alpha",
        "p_max": "p_max",
        "adf_level_det": "adf_level_det",
        "adf_diff_det": "adf_diff_det",
        "johansen_det": "johansen_det",
        "lag_rule": "lag_rule",
        "rank": "rank",
        "normalize_on": "normalize_on",
        "ec_term_style": "ec_term_style",
        "formats": "formats",
        "plot": "plot",
        "plot_vars": "plot_vars",
        "hard_stop_non_i1": "hard_stop_non_i1",
    }
    kwargs: dict[str, Any] = {}
    for key, value in raw.items():
        if key not in key_map:
            raise ConfigError(f"unknown config key {key!r}")
        field_name = key_map[key]
        if field_name in ("variables", "log_columns", "formats", "plot_vars"):
            value = tuple(value)
        kwargs[field_name] = value
    if "input_path" not in kwargs:
        raise ConfigError("config must set 'input'")
    # input paths are relative to the config file
    base = Path(path).parent
    kwargs["input_path"] = str((base / kwargs["input_path"]).resolve())
    if "output_dir" in kwargs:
        kwargs["output_dir"] = str((base / kwargs["output_dir"]).resolve())
    return RunConfig(**kwargs).validated()


def load_csv(path: str | Path, config: RunConfig | None = None) -> Dataset:
    """Parse an annual panel CSV into a Dataset.

    The file needs a header with a ``year`` column; years must be contiguous.
    Columns named in config.log_columns (default: all) are log-transformed
    and renamed with the ``l_`` prefix.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(1, "empty file") from None
        header = [h.strip() for h in header]
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(lineno, f"expected {len(header)} fields, got {len(row)}")
            rows.append((lineno, [cell.strip() for cell in row]))
    if "year" not in header:
        raise MissingColumn("year")
    year_idx = header.index("year")
    wanted = list(config.variables) if config and config.variables else [
        h for h in header if h != "year"
    ]
    for name in wanted:
        if name not in header:
            raise MissingColumn(name)
    if not rows:
        raise ParseError(2, "no data rows")

    years: list[int] = []
    columns: dict[str, list[float]] = {name: [] for name in wanted}
    for lineno, row in rows:
        try:
            year = int(row[year_idx])
        except ValueError:
            raise ParseError(lineno, f"bad year {row[year_idx]!r}") from None
        years.append(year)
        for name in wanted:
            cell = row[header.index(name)]
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(lineno, f"bad number {cell!r} in column {name!r}") from None
            if not math.isfinite(value):
                raise ParseError(lineno, f"non-finite value in column {name!r}")
            columns[name].append(value)

    order = sorted(range(len(years)), key=lambda i: years[i])
    years = [years[i] for i in order]
    for prev, cur in zip(years, years[1:]):
        if cur == prev:
            raise ParseError(0, f"duplicate year {cur}")
        if cur != prev + 1:
            raise YearGap(prev + 1)

    log_cols = set(config.log_columns) if config and config.log_columns is not None else set(wanted)
    series = []
    for name in wanted:
        values = [columns[name][i] for i in order]
        s = Series.from_arrays(name, years, values)
        if name in log_cols:
            s = log_transform(s)
        series.append(s)
    return align(series)


@dataclass
class PipelineReport:
    sections: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {"sections": self.sections, "warnings": self.warnings}
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"

    def to_text(self) -> str:
        out: list[str] = []
        rule = "=" * 72
        for title, body in self.sections.items():
            out.append(rule)
            out.append(title.replace("_", " ").upper())
            out.append(rule)
            out.append(_render_section(title, body))
            out.append("")
        if self.warnings:
            out.append("WARNINGS")
            out += [f"  ! {w}" for w in self.warnings]
            out.append("")
        return "\n".join(out)


class StageError(CointkitError):
    """Wraps a failure with the pipeline stage it happened in."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage!r} failed: {cause}")

    @property
    def exit_code(self) -> int:
        return 10 + STAGES.index(self.stage)


def _f6(x: float) -> str:
    return f"{x:.6f}"


def _render_section(title: str, body: Any) -> str:
    lines: list[str] = []
    if title == "adf_table":
        lines.append(f"{'Variable':<12}{'Parameter':<12}{'ADF stat':>12}{'P-value':>10}  Decision")
        for row in body["rows"]:
            lines.append(
                f"{row['variable']:<12}{'Level':<12}{row['level']['statistic']:>12.6f}"
                f"{row['level']['p_value']:>10.4f}  {row['order']}"
            )
            lines.append(
                f"{'':<12}{'First diff.':<12}{row['first_difference']['statistic']:>12.6f}"
                f"{row['first_difference']['p_value']:>10.4f}"
            )
    elif title == "lag_table":
        lines.append(f"{'lags':<6}{'AIC':>12}{'SC':>12}{'HQ':>12}")
        starred = body["starred"]
        for row in body["rows"]:
            marks = {
                name: "*" if starred[name] == row["p"] else " " for name in ("aic", "sc", "hq")
            }
            lines.append(
                f"{row['p']:<6}{row['aic']:>11.6f}{marks['aic']}"
                f"{row['sc']:>11.6f}{marks['sc']}{row['hq']:>11.6f}{marks['hq']}"
            )
        lines.append(f"recommended lag: {body['recommended']} (rule: {body['rule']})")
    elif title == "johansen_table":
        lines.append(body["table_text"])
        lines.append(f"selected rank: {body['selected_rank']}")
    elif title == "long_run_equation":
        lines.append(body["equation"] if body.get("equation") else body.get("note", ""))
    elif title == "vecm_table":
        if "note" in body:
            lines.append(body["note"])
        for eq in body.get("equations", []):
            lines.append(f"Equation {eq['variable']}:")
            lines.append(f"  {'Variable':<14}{'Coefficient':>13}{'Std. Error':>12}{'t-stat':>10}  Sig.")
            for term in eq["terms"]:
                sig = "***" if term["significant"] else ""
                lines.append(
                    f"  {term['name']:<14}{term['coefficient']:>13.6f}"
                    f"{term['standard_error']:>12.5f}{term['t_statistic']:>10.5f}  {sig}"
                )
            lines.append(f"  R-squared          {eq['r_squared']:.6f}")
            lines.append(f"  Adjusted R-squared {eq['adjusted_r_squared']:.6f}")
            lines.append(f"  F-statistic        {eq['f_statistic']:.6f}")
        for corr in body.get("corrections", []):
            sig = " (significant)" if corr["significant"] else ""
            lines.append(
                f"{corr['term']}: loading {corr['loading']:.6f} corrects "
                f"{corr['percent']:.2f}% of last period's disequilibrium{sig}"
            )
    elif title == "heteroskedasticity":
        lines.append(f"Chi-sq = {body['chi_sq']:.4f}   df = {body['df']}   p-value = {body['p_value']:.4f}")
        lines.append(f"verdict: {body['verdict']}")
    elif title == "normality":
        lines.append(f"{'Component':<10}{'Skewness':>12}{'Chi-sq':>12}{'df':>4}{'Prob.':>10}")
        for c in body["components"]:
            lines.append(
                f"{c['component']:<10}{c['skewness']:>12.6f}{c['skew_chi_sq']:>12.6f}{1:>4}{c['skew_p']:>10.4f}"
            )
        lines.append(f"{'Joint':<10}{'':>12}{body['joint_skew_chi_sq']:>12.6f}{body['df_joint_skew']:>4}{body['joint_skew_p']:>10.4f}")
        lines.append(f"{'Component':<10}{'Kurtosis':>12}{'Chi-sq':>12}{'df':>4}{'Prob.':>10}")
        for c in body["components"]:
            lines.append(
                f"{c['component']:<10}{c['kurtosis']:>12.6f}{c['kurt_chi_sq']:>12.6f}{1:>4}{c['kurt_p']:>10.4f}"
            )
        lines.append(f"{'Joint':<10}{'':>12}{body['joint_kurt_chi_sq']:>12.6f}{body['df_joint_kurt']:>4}{body['joint_kurt_p']:>10.4f}")
        lines.append(f"{'Component':<10}{'Jarque-Bera':>14}{'df':>4}{'Prob.':>10}")
        for c in body["components"]:
            lines.append(f"{c['component']:<10}{c['jarque_bera']:>14.6f}{2:>4}{c['jb_p']:>10.4f}")
        lines.append(f"{'Joint':<10}{body['joint_jarque_bera']:>14.6f}{body['df_joint_jb']:>4}{body['joint_jb_p']:>10.4f}")
    else:
        lines.append(json.dumps(body, indent=2))
    return "\n".join(lines)


def _adf_dict(res) -> dict[str, Any]:
    return {
        "statistic": res.statistic,
        "p_value": res.p_value,
        "lags_used": res.lags_used,
        "deterministic": res.deterministic,
        "n_effective": res.n_effective,
    }


def run_pipeline(config: RunConfig) -> PipelineReport:
    """Execute every stage and assemble the report.

    Raises StageError naming the failing stage; non-I(1) variables produce
    a warning (or abort, when the config demands a hard stop).
    """
    config = config.validated()
    report = PipelineReport()

    try:
        data = load_csv(config.input_path, config)
    except (CointkitError, FileNotFoundError) as exc:
        raise StageError("load", exc) from exc

    try:
        decisions = [
            classify_integration(
                data[name],
                alpha=config.alpha,
                level_deterministic=config.adf_level_det,
                diff_deterministic=config.adf_diff_det,
            )
            for name in data.names
        ]
        report.sections["adf_table"] = {
            "alpha": config.alpha,
            "rows": [
                {
                    "variable": dec.variable,
                    "level": _adf_dict(dec.level),
                    "first_difference": _adf_dict(dec.first_difference),
                    "order": dec.order,
                }
                for dec in decisions
            ],
        }
        not_i1 = [dec.variable for dec in decisions if dec.order != "I1"]
        if not_i1:
            message = (
                f"variables not classified I(1) at alpha={config.alpha:g}: "
                f"{', '.join(not_i1)}; cointegration analysis assumes I(1) inputs"
            )
            if config.hard_stop_non_i1:
                raise CointkitError(message)
            report.warnings.append(message)
    except CointkitError as exc:
        raise StageError("adf", exc) from exc

    if data.n_vars < 2:
        raise StageError("johansen", NotEnoughVariables("Johansen analysis needs k >= 2"))

    try:
        lag_table = select_lag(data, config.p_max, config.lag_rule)
        report.sections["lag_table"] = {
            "rows": [
                {"p": row.p, "aic": row.aic, "sc": row.sc, "hq": row.hq}
                for row in lag_table.rows
            ],
            "starred": dict(lag_table.starred),
            "recommended": lag_table.recommended,
            "rule": lag_table.rule,
            "n_effective": lag_table.n_effective,
        }
    except CointkitError as exc:
        raise StageError("lag_selection", exc) from exc

    p = max(lag_table.recommended, 1)
    try:
        joh = reduced_rank_regression(data, p, config.johansen_det, config.alpha)
        decision = rank_decision(joh, config.alpha)
        rank = config.rank if config.rank is not None else decision.trace_rank
        if config.rank is not None and not 0 <= config.rank <= data.n_vars:
            raise ConfigError(f"rank override {config.rank} outside 0..{data.n_vars}")
        report.sections["johansen_table"] = {
            "det_case": joh.det_case,
            "p": joh.p,
            "T_effective": joh.T_effective,
            "eigenvalues": list(joh.eigenvalues),
            "trace": [
                {"rank": row.rank, "statistic": row.statistic, "p_value": row.p_value}
                for row in joh.trace_rows
            ],
            "max_eigen": [
                {"rank": row.rank, "statistic": row.statistic, "p_value": row.p_value}
                for row in joh.max_eigen_rows
            ],
            "trace_rank": decision.trace_rank,
            "max_eigen_rank": decision.max_eigen_rank,
            "selected_rank": rank,
            "rank_overridden": config.rank is not None,
            "table_text": decision.table_text,
        }
    except CointkitError as exc:
        raise StageError("johansen", exc) from exc

    try:
        normalize_on = config.normalize_on or data.names[0]
        if rank >= 1:
            longrun = normalize_long_run(joh, normalize_on, 0)
            report.sections["long_run_equation"] = {
                "normalized_on": longrun.normalized_on,
                "coefficients": {k: v for k, v in longrun.coefficients.items()},
                "equation": longrun.equation,
            }
        else:
            report.sections["long_run_equation"] = {
                "note": "no cointegrating relation selected (rank 0)",
            }
    except CointkitError as exc:
        raise StageError("long_run", exc) from exc

    try:
        model = vecm_fit(
            data, p, rank, config.johansen_det, config.alpha,
            ec_term_style=config.ec_term_style, johansen_result=joh,
        )
        vecm_section: dict[str, Any] = {
            "rank": model.rank,
            "p": model.p,
            "n_effective": int(model.residuals.shape[0]),
            "equations": [
                {
                    "variable": eq.variable,
                    "terms": [
                        {
                            "name": t.name,
                            "coefficient": t.coefficient,
                            "standard_error": t.standard_error,
                            "t_statistic": t.t_statistic,
                            "significant": t.significant,
                        }
                        for t in eq.terms
                    ],
                    "r_squared": eq.r_squared,
                    "adjusted_r_squared": eq.adjusted_r_squared,
                    "f_statistic": eq.f_statistic,
                }
                for eq in model.equations
            ],
        }
        if rank >= 1:
            target = f"d_{normalize_on}"
            corrections = disequilibrium_correction(model, target)
            vecm_section["corrections"] = [
                {
                    "term": c.term,
                    "loading": c.loading,
                    "percent": c.percent,
                    "significant": c.significant,
                }
                for c in corrections
            ]
        else:
            vecm_section["note"] = "rank 0: model reduces to a VAR in first differences"
        report.sections["vecm_table"] = vecm_section
    except CointkitError as exc:
        raise StageError("vecm", exc) from exc

    try:
        non_const = [i for i, name in enumerate(model.regressor_names) if name != "const"]
        het = white_system_test(model.residuals, model.regressors[:, non_const], config.alpha)
        report.sections["heteroskedasticity"] = {
            "chi_sq": het.chi_sq,
            "df": het.df,
            "p_value": het.p_value,
            "verdict": het.verdict,
        }
        jb = multivariate_jb(model.residuals)
        report.sections["normality"] = {
            "components": [
                {
                    "component": c.component,
                    "skewness": c.skewness,
                    "skew_chi_sq": c.skew_chi_sq,
                    "skew_p": c.skew_p,
                    "kurtosis": c.kurtosis,
                    "kurt_chi_sq": c.kurt_chi_sq,
                    "kurt_p": c.kurt_p,
                    "jarque_bera": c.jarque_bera,
                    "jb_p": c.jb_p,
                }
                for c in jb.components
            ],
            "joint_skew_chi_sq": jb.joint_skew_chi_sq,
            "joint_skew_p": jb.joint_skew_p,
            "joint_kurt_chi_sq": jb.joint_kurt_chi_sq,
            "joint_kurt_p": jb.joint_kurt_p,
            "joint_jarque_bera": jb.joint_jarque_bera,
            "joint_jb_p": jb.joint_jb_p,
            "df_joint_skew": jb.df_joint_skew,
            "df_joint_kurt": jb.df_joint_kurt,
            "df_joint_jb": jb.df_joint_jb,
            "n_obs": jb.n_obs,
        }
    except CointkitError as exc:
        raise StageError("diagnostics", exc) from exc

    return report


def write_outputs(report: PipelineReport, config: RunConfig, data: Dataset | None = None) -> list[Path]:
    """Write the configured report files (and plot) into the output directory."""
    outdir = Path(config.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    try:
        if "json" in config.formats:
            path = outdir / "report.json"
            path.write_text(report.to_json(), encoding="utf-8")
            written.append(path)
        if "text" in config.formats:
            path = outdir / "report.txt"
            path.write_text(report.to_text(), encoding="utf-8")
            written.append(path)
        if config.plot:
            if data is None:
                data = load_csv(config.input_path, config)
            names = list(config.plot_vars) if config.plot_vars else list(data.names[:2])
            path = outdir / "trend.svg"
            render_plot(data, names, str(path))
            written.append(path)
    except (OSError, CointkitError) as exc:
        raise StageError("output", exc) from exc
    return written
