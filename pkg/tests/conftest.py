import numpy as np
import pytest

from mcdm_weights import CriterionSpec, load_fixture, validate_matrix

import golden


@pytest.fixture(scope="session")
def example1():
    return load_fixture("example1.csv")


@pytest.fixture(scope="session")
def example2():
    return load_fixture("example2.csv")


@pytest.fixture(scope="session")
def example1_golden_matrix():
    """Example 1 built straight from frozen values, bypassing the parser."""
    reverse_coded = ("Hard work", "Security")
    specs = [
        CriterionSpec(name, likert_reverse=name in reverse_coded)
        for name in golden.EXAMPLE1_CRITERIA
    ]
    return validate_matrix(
        np.array(golden.EXAMPLE1_VALUES),
        golden.EXAMPLE1_ALTERNATIVES,
        specs,
    )


def random_matrices(count, seed=20240501, max_rows=9, max_cols=7, lo=1.0, hi=100.0):
    """Seeded stream of (rows, cols, grid) triples for property tests."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        rows = int(rng.integers(2, max_rows))
        cols = int(rng.integers(1, max_cols))
        grid = rng.uniform(lo, hi, size=(rows, cols))
        yield rows, cols, grid
