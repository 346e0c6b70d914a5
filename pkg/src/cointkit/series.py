"""Annual time-series containers and the transforms feeding every estimator.

A :class:`Series` is a named vector of values on a contiguous integer year
axis; a :class:`Dataset` bundles several series sharing one axis.  Both are
immutable: every transform returns a new object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoCommonYears,
    NonPositiveValue,
    SeriesTooShort,
    ShapeMismatch,
    UnknownVariable,
    YearGap,
)


@dataclass(frozen=True)
class Series:
    """One annual indicator: a name, a contiguous year axis and values."""

    name: str
    years: tuple[int, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.years) != len(self.values):
            raise ShapeMismatch(
                f"{self.name}: {len(self.years)} years vs {len(self.values)} values"
            )
        if len(self.years) == 0:
            raise SeriesTooShort(f"{self.name}: empty series")
        for prev, cur in zip(self.years, self.years[1:]):
            if cur != prev + 1:
                raise YearGap(prev + 1)
        for year, value in zip(self.years, self.values):
            if not math.isfinite(value):
                raise ShapeMismatch(f"{self.name}: non-finite value in year {year}")
        object.__setattr__(self, "years", tuple(int(y) for y in self.years))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.years)

    def to_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @classmethod
    def from_arrays(cls, name: str, years: Iterable[int], values: Iterable[float]) -> "Series":
        return cls(name, tuple(int(y) for y in years), tuple(float(v) for v in values))


@dataclass(frozen=True)
class Dataset:
    """Ordered collection of series on an identical year axis."""

    variables: tuple[Series, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.variables:
            raise ShapeMismatch("dataset needs at least one series")
        axis = self.variables[0].years
        for s in self.variables[1:]:
            if s.years != axis:
                raise ShapeMismatch(f"{s.name}: year axis differs from {self.variables[0].name}")
        names = [s.name for s in self.variables]
        if len(set(names)) != len(names):
            raise ShapeMismatch(f"duplicate variable names: {names}")

    @property
    def years(self) -> tuple[int, ...]:
        return self.variables[0].years

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.variables)

    @property
    def n_obs(self) -> int:
        return len(self.variables[0])

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    def __getitem__(self, name: str) -> Series:
        for s in self.variables:
            if s.name == name:
                return s
        raise UnknownVariable(name)

    def to_matrix(self) -> np.ndarray:
        """T x k matrix, columns in variable order."""
        return np.column_stack([s.to_array() for s in self.variables])

    @classmethod
    def from_matrix(cls, names: Sequence[str], years: Sequence[int], data: np.ndarray) -> "Dataset":
        data = np.asarray(data, dtype=float)
        if data.ndim != 2 or data.shape[1] != len(names):
            raise ShapeMismatch(f"matrix shape {data.shape} vs {len(names)} names")
        return cls(tuple(Series.from_arrays(n, years, data[:, j]) for j, n in enumerate(names)))


def log_transform(s: Series) -> Series:
    """Natural log of a strictly positive series; the name gains an ``l_`` prefix."""
    for year, value in zip(s.years, s.values):
        if value <= 0.0:
            raise NonPositiveValue(year, value)
    return Series(f"l_{s.name}", s.years, tuple(math.log(v) for v in s.values))


def difference(s: Series, order: int = 1) -> Series:
    """Difference a series ``order`` times, dropping the first ``order`` years."""
    if order < 1:
        raise ShapeMismatch(f"difference order must be positive, got {order}")
    if len(s) <= order:
        raise SeriesTooShort(f"{s.name}: length {len(s)} cannot be differenced {order} times")
    vals = np.diff(s.to_array(), n=order)
    return Series(f"d{order}_{s.name}" if order > 1 else f"d_{s.name}", s.years[order:], tuple(vals))


def align(series: Sequence[Series]) -> Dataset:
    """Restrict the given series to their common year range.

    Raises NoCommonYears when the axes do not overlap.
    """
    if not series:
        raise ShapeMismatch("align needs at least one series")
    start = max(s.years[0] for s in series)
    stop = min(s.years[-1] for s in series)
    if start > stop:
        raise NoCommonYears(f"no overlap: latest start {start} after earliest end {stop}")
    trimmed = []
    for s in series:
        lo = start - s.years[0]
        hi = lo + (stop - start) + 1
        trimmed.append(Series(s.name, s.years[lo:hi], s.values[lo:hi]))
    return Dataset(tuple(trimmed))


@dataclass(frozen=True)
class LagDesign:
    """Aligned regression blocks for a lag-p system on T - p rows.

    Row t of every block refers to the same calendar year.
    """

    dy: np.ndarray          # current first differences, (T-p) x k
    y_lag1: np.ndarray      # levels at t-1, (T-p) x k
    dy_lags: np.ndarray     # lagged differences 1..p-1, (T-p) x k(p-1)
    intercept: np.ndarray   # (T-p) x 1 column of ones
    years: tuple[int, ...]  # year of each row
    p: int

    @property
    def n_rows(self) -> int:
        return self.dy.shape[0]


def lag_design(d: Dataset, p: int) -> LagDesign:
    """Build the difference/level/lagged-difference blocks for lag order p.

    The blocks share T - p rows covering years[p:]; ``dy_lags`` stacks the
    lag-1..p-1 differences of all variables, fastest over variables.
    """
    if p < 1:
        raise ShapeMismatch(f"lag order must be >= 1, got {p}")
    T = d.n_obs
    if T <= p + 1:
        raise SeriesTooShort(f"need T > p + 1, got T={T}, p={p}")
    y = d.to_matrix()
    dy_full = np.diff(y, axis=0)            # rows are years[1:]
    dy = dy_full[p - 1:]                     # years[p:]
    y_lag1 = y[p - 1:T - 1]                  # levels one year before each row
    lag_blocks = [dy_full[p - 1 - j:T - 1 - j] for j in range(1, p)]
    dy_lags = np.column_stack(lag_blocks) if lag_blocks else np.empty((T - p, 0))
    intercept = np.ones((T - p, 1))
    return LagDesign(dy, y_lag1, dy_lags, intercept, d.years[p:], p)
