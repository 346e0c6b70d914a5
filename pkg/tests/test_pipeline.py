import json
import math
import re
import shutil
from pathlib import Path

import pytest

from cointkit.errors import MissingColumn, NonPositiveValue, ParseError, YearGap
from cointkit.pipeline import (
    RunConfig,
    StageError,
    load_config,
    load_csv,
    run_pipeline,
    write_outputs,
)

DATA = Path(__file__).parent / "data"
FIXTURE = DATA / "macro_panel.csv"


def write_csv(tmp_path, rows, header="year,a,b"):
    path = tmp_path / "panel.csv"
    path.write_text("\n".join([header] + rows) + "\n", encoding="utf-8")
    return path


class TestLoadCsv:
    def test_fixture_shape(self):
        d = load_csv(FIXTURE, RunConfig(input_path=str(FIXTURE)))
        assert d.n_vars == 4 and d.n_obs == 25
        assert d.names == ("l_gdp", "l_ac", "l_gcf", "l_inf")
        assert d.years[0] == 1997 and d.years[-1] == 2021

    def test_no_log_columns(self):
        cfg = RunConfig(input_path=str(FIXTURE), log_columns=())
        d = load_csv(FIXTURE, cfg)
        assert d.names == ("gdp", "ac", "gcf", "inf")

    def test_selected_log_columns(self):
        cfg = RunConfig(input_path=str(FIXTURE), log_columns=("gdp",))
        d = load_csv(FIXTURE, cfg)
        assert d.names == ("l_gdp", "ac", "gcf", "inf")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_csv(tmp_path / "absent.csv", None)

    def test_missing_column(self, tmp_path):
        path = write_csv(tmp_path, ["2000,1.0,2.0", "2001,2.0,3.0"])
        cfg = RunConfig(input_path=str(path), variables=("a", "inf"))
        with pytest.raises(MissingColumn) as exc:
            load_csv(path, cfg)
        assert exc.value.name == "inf"

    def test_missing_year_column(self, tmp_path):
        path = write_csv(tmp_path, ["1,2.0,3.0"], header="idx,a,b")
        with pytest.raises(MissingColumn) as exc:
            load_csv(path, None)
        assert exc.value.name == "year"

    def test_year_gap(self, tmp_path):
        path = write_csv(tmp_path, ["2000,1,2", "2001,2,3", "2003,3,4"])
        with pytest.raises(YearGap) as exc:
            load_csv(path, None)
        assert exc.value.year == 2002

    def test_parse_error_reports_line(self, tmp_path):
        path = write_csv(tmp_path, ["2000,1,2", "2001,zap,3"])
        with pytest.raises(ParseError) as exc:
            load_csv(path, None)
        assert exc.value.line == 3

    def test_non_positive_value_for_log(self, tmp_path):
        path = write_csv(tmp_path, ["2000,1,2", "2001,-1,3"])
        with pytest.raises(NonPositiveValue):
            load_csv(path, RunConfig(input_path=str(path)))

    def test_unsorted_years_accepted(self, tmp_path):
        path = write_csv(tmp_path, ["2001,2,3", "2000,1,2", "2002,3,4"])
        d = load_csv(path, RunConfig(input_path=str(path), log_columns=()))
        assert d.years == (2000, 2001, 2002)
        assert d["a"].values == (1.0, 2.0, 3.0)


class TestRunConfig:
    def test_toml_round_trip(self, tmp_path):
        shutil.copy(FIXTURE, tmp_path / "macro_panel.csv")
        shutil.copy(DATA / "paper_style.toml", tmp_path / "run.toml")
        cfg = load_config(tmp_path / "run.toml")
        assert cfg.variables == ("gdp", "ac", "gcf", "inf")
        assert cfg.p_max == 3
        assert cfg.plot is True
        assert Path(cfg.input_path).exists()

    def test_bad_alpha_rejected(self):
        with pytest.raises(Exception):
            RunConfig(input_path="x.csv", alpha=0.7).validated()

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "bad.toml"
        path.write_text('input = "x.csv"\nwibble = 3\n')
        from cointkit.errors import ConfigError

        with pytest.raises(ConfigError):
            load_config(path)


class TestRunPipeline:
    @pytest.fixture(scope="class")
    @staticmethod
    def report():
        return run_pipeline(RunConfig(input_path=str(FIXTURE)))

    def test_all_sections_present(self, report):
        assert list(report.sections) == [
            "adf_table",
            "lag_table",
            "johansen_table",
            "long_run_equation",
            "vecm_table",
            "heteroskedasticity",
            "normality",
        ]

    def test_adf_rows_per_variable(self, report):
        rows = report.sections["adf_table"]["rows"]
        assert [r["variable"] for r in rows] == ["l_gdp", "l_ac", "l_gcf", "l_inf"]
        for r in rows:
            assert set(r["level"]) == {
                "statistic", "p_value", "lags_used", "deterministic", "n_effective",
            }

    def test_lag_table_covers_p_max(self, report):
        assert [r["p"] for r in report.sections["lag_table"]["rows"]] == [1, 2, 3]

    def test_johansen_has_both_tests(self, report):
        sec = report.sections["johansen_table"]
        assert len(sec["trace"]) == 4 and len(sec["max_eigen"]) == 4
        assert sec["T_effective"] == 25 - sec["p"]

    def test_equation_rendering_form(self, report):
        eq = report.sections["long_run_equation"]["equation"]
        pattern = (
            r"^l_gdp = -?\d+\.\d{6} \* l_ac [+-] \d+\.\d{6} \* l_gcf "
            r"[+-] \d+\.\d{6} \* l_inf$"
        )
        assert re.fullmatch(pattern, eq), eq

    def test_vecm_ec_rows_match_rank(self, report):
        sec = report.sections["vecm_table"]
        rank = report.sections["johansen_table"]["selected_rank"]
        ec_terms = [
            t["name"] for t in sec["equations"][0]["terms"] if t["name"].startswith("ec")
        ]
        assert len(ec_terms) == rank

    def test_rank_override(self):
        cfg = RunConfig(input_path=str(FIXTURE), rank=1)
        rep = run_pipeline(cfg)
        sec = rep.sections["vecm_table"]
        ec_terms = [
            t["name"] for t in sec["equations"][0]["terms"] if t["name"].startswith("ec")
        ]
        assert len(ec_terms) == 1
        assert rep.sections["johansen_table"]["rank_overridden"] is True

    def test_single_variable_stops_at_johansen(self, tmp_path, rng):
        import numpy as np

        walk = np.cumsum(rng.standard_normal(30))
        rows = [f"{2000 + i},{walk[i]:.6f}" for i in range(30)]
        path = write_csv(tmp_path, rows, header="year,a")
        with pytest.raises(StageError) as exc:
            run_pipeline(RunConfig(input_path=str(path), log_columns=()))
        assert exc.value.stage == "johansen"
        assert exc.value.exit_code == 13

    def test_missing_input_is_load_stage(self, tmp_path):
        with pytest.raises(StageError) as exc:
            run_pipeline(RunConfig(input_path=str(tmp_path / "nope.csv")))
        assert exc.value.stage == "load"

    def test_non_i1_variable_warns_but_proceeds(self, tmp_path, rng):
        # one obviously stationary column among random walks
        import numpy as np

        walks = np.cumsum(rng.standard_normal((40, 2)), axis=0)
        noise = rng.standard_normal(40) * 0.01 + 5.0
        rows = [
            f"{1980 + i},{math.exp(walks[i, 0]):.6f},{math.exp(walks[i, 1]):.6f},{noise[i]:.6f}"
            for i in range(40)
        ]
        path = write_csv(tmp_path, rows, header="year,a,b,c")
        report = run_pipeline(RunConfig(input_path=str(path)))
        assert any("not classified I(1)" in w for w in report.warnings)
        assert "normality" in report.sections

    def test_hard_stop_mode(self, tmp_path, rng):
        import numpy as np

        walks = np.cumsum(rng.standard_normal((40, 2)), axis=0)
        noise = rng.standard_normal(40) * 0.01 + 5.0
        rows = [
            f"{1980 + i},{math.exp(walks[i, 0]):.6f},{math.exp(walks[i, 1]):.6f},{noise[i]:.6f}"
            for i in range(40)
        ]
        path = write_csv(tmp_path, rows, header="year,a,b,c")
        with pytest.raises(StageError) as exc:
            run_pipeline(RunConfig(input_path=str(path), hard_stop_non_i1=True))
        assert exc.value.stage == "adf"


class TestRendering:
    @pytest.fixture(scope="class")
    @staticmethod
    def report():
        return run_pipeline(RunConfig(input_path=str(FIXTURE)))

    def test_json_parses_and_matches_text_rounding(self, report):
        payload = json.loads(report.to_json())
        text = report.to_text()
        eq_coefs = payload["sections"]["long_run_equation"]["coefficients"]
        for value in eq_coefs.values():
            assert f"{abs(value):.6f}" in text
        chi = payload["sections"]["heteroskedasticity"]["chi_sq"]
        assert f"{chi:.4f}" in text

    def test_text_contains_section_headers(self, report):
        text = report.to_text()
        for title in ("ADF TABLE", "LAG TABLE", "JOHANSEN TABLE", "VECM TABLE"):
            assert title in text

    def test_renderings_deterministic(self, report):
        assert report.to_json() == report.to_json()
        assert report.to_text() == report.to_text()

    def test_write_outputs(self, tmp_path):
        cfg = RunConfig(
            input_path=str(FIXTURE), output_dir=str(tmp_path / "out"), plot=True,
            plot_vars=("l_gdp", "l_ac"),
        )
        report = run_pipeline(cfg)
        written = write_outputs(report, cfg)
        names = {p.name for p in written}
        assert names == {"report.json", "report.txt", "trend.svg"}
        for p in written:
            assert p.exists() and p.stat().st_size > 0
