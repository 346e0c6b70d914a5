"""Write the frozen macro-panel CSV fixture used by the pipeline tests.

Four positive level series over 1997-2021 whose logs form a rank-2
cointegrated system (two common stochastic trends, relations tying the
third and fourth variables to the first two).  Offsets picked so the
levels span several orders of magnitude, which also exercises the plot's
dual-scale path.  Regenerating with the same seed reproduces the file
byte for byte; the committed copy under tests/data is the contract.
"""

import math
from pathlib import Path

from cointkit.simulate import DgpSpec, generate

SEED = 9
OFFSETS = {"gdp": 12.0, "ac": 3.0, "gcf": 10.0, "inf": 1.8}
BETA = ((-1.0, -1.0), (-1.0, 1.0), (1.0, 0.0), (0.0, 1.0))
LOADING = ((0.0, 0.0), (0.0, 0.0), (-0.55, 0.0), (0.0, -0.55))
SHOCK_STD = 0.08   # scale-free tests are unaffected; keeps levels plausible


def main() -> None:
    cov = tuple(
        tuple(SHOCK_STD**2 if i == j else 0.0 for j in range(4)) for i in range(4)
    )
    spec = DgpSpec(
        kind="cointegrated_system", k=4, T=25, seed=SEED,
        loading=LOADING, cointegration=BETA, innovation_cov=cov, start_year=1997,
    )
    d = generate(spec)
    names = list(OFFSETS)
    out = Path(__file__).resolve().parents[1] / "tests" / "data" / "macro_panel.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = ["year," + ",".join(names)]
    matrix = d.to_matrix()
    for i, year in enumerate(d.years):
        cells = [
            f"{math.exp(matrix[i, j] + OFFSETS[name]):.6f}"
            for j, name in enumerate(names)
        ]
        lines.append(f"{year}," + ",".join(cells))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
