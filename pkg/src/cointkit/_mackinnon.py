"""MacKinnon response-surface coefficients for the Dickey-Fuller t distribution.

Two published vintages are embedded, both for a single I(1) series:

* p-value surfaces from MacKinnon (1994), "Approximate asymptotic
  distribution functions for unit-root and cointegration tests", JBES 12:
  p = Phi(c0 + c1 t + c2 t^2 [+ c3 t^3]), with separate polynomials left and
  right of ``TAU_STAR`` and hard 0/1 clamps outside [TAU_MIN, TAU_MAX].
* finite-sample critical-value surfaces from MacKinnon (2010), "Critical
  values for cointegration tests", Queen's Economics Dept WP 1227:
  cv(n) = b0 + b1/n + b2/n^2 + b3/n^3 at the 1/5/10% levels.

Keys are the deterministic cases: "none", "constant", "constant_and_trend".
Regeneration is out of scope; update only by transcribing a newer vintage.
"""

TAU_STAR = {"none": -1.04, "constant": -1.61, "constant_and_trend": -2.89}
TAU_MIN = {"none": -19.04, "constant": -18.83, "constant_and_trend": -16.18}
TAU_MAX = {"none": float("inf"), "constant": 2.74, "constant_and_trend": 0.7}

# Phi(poly(tau)) coefficients, ascending order, for tau <= TAU_STAR ...
TAU_SMALLP = {
    "none": (0.6344, 1.2378, 0.032496),
    "constant": (2.1659, 1.4412, 0.038269),
    "constant_and_trend": (3.2512, 1.6047, 0.049588),
}
# ... and for tau > TAU_STAR.
TAU_LARGEP = {
    "none": (0.4797, 0.93557, -0.06999, 0.033066),
    "constant": (1.7339, 0.93202, -0.12745, -0.010368),
    "constant_and_trend": (2.5261, 0.61654, -0.37956, -0.060285),
}

# cv(n) polynomials in 1/n per significance level (2010 vintage; the
# "none" case keeps the 1996 values, which were never updated).
CRIT_LEVELS = (0.01, 0.05, 0.10)
CRIT_SURFACE = {
    "none": (
        (-2.56574, -2.2358, -3.627, 0.0),
        (-1.94100, -0.2686, -3.365, 31.223),
        (-1.61682, 0.2656, -2.714, 25.364),
    ),
    "constant": (
        (-3.43035, -6.5393, -16.786, -79.433),
        (-2.86154, -2.8903, -4.234, -40.040),
        (-2.56677, -1.5384, -2.809, 0.0),
    ),
    "constant_and_trend": (
        (-3.95877, -9.0531, -28.428, -134.155),
        (-3.41049, -4.3904, -9.036, -45.374),
        (-3.12705, -2.5856, -3.925, -22.380),
    ),
}
