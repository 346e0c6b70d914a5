import numpy as np
import pytest

from cointkit.series import Dataset, Series


@pytest.fixture
def rng():
    return np.random.default_rng(20240551)


def make_series(values, name="x", start_year=2000):
    values = list(values)
    return Series.from_arrays(name, range(start_year, start_year + len(values)), values)


def make_dataset(matrix, names=None, start_year=2000):
    matrix = np.asarray(matrix, dtype=float)
    if names is None:
        names = [f"y{i + 1}" for i in range(matrix.shape[1])]
    years = range(start_year, start_year + matrix.shape[0])
    return Dataset.from_matrix(names, years, matrix)
