"""Exception hierarchy shared across the toolkit."""


class CointkitError(Exception):
    """Base class for every error raised by this package."""


class NonPositiveValue(CointkitError):
    """A value outside the domain of the log transform."""

    def __init__(self, year: int, value: float):
        self.year = year
        self.value = value
        super().__init__(f"non-positive value {value!r} in year {year}")


class SeriesTooShort(CointkitError):
    """Not enough observations for the requested operation."""


class NoCommonYears(CointkitError):
    """Series year axes have an empty intersection."""


class ShapeMismatch(CointkitError):
    """Incompatible array dimensions."""


class RankDeficient(CointkitError):
    """Design matrix has (numerically) collinear columns."""


class SingularCovariance(CointkitError):
    """Residual covariance is not positive definite."""


class ZeroVariance(CointkitError):
    """A series is constant where variation is required."""


class SingularMomentMatrix(CointkitError):
    """A product-moment matrix in the eigenproblem is singular."""


class RankOutOfRange(CointkitError):
    """Hypothesized cointegration rank outside 0..k-1."""


class DimensionUnsupported(CointkitError):
    """No distribution table for this system dimension."""


class ZeroNormalizationCoefficient(CointkitError):
    """Cannot normalize a cointegrating vector on a zero coefficient."""


class UnstableSpec(CointkitError):
    """Simulated process would be explosive or ill-defined."""


class NotEnoughVariables(CointkitError):
    """System analysis needs at least two variables."""


class UnknownVariable(CointkitError):
    """Referenced variable name not present in the dataset."""


class ConfigError(CointkitError):
    """Invalid or inconsistent run configuration."""


class ParseError(CointkitError):
    """Malformed input file."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class MissingColumn(CointkitError):
    """Required CSV column absent."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing column {name!r}")


class YearGap(CointkitError):
    """Year axis is not contiguous."""

    def __init__(self, year: int):
        self.year = year
        super().__init__(f"missing year {year}")
