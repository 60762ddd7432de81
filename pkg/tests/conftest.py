import pathlib

import pytest

from fuzzyverb import dataset as ds

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fg_dataset():
    return ds.four_gausses(10.0, 2.0, 21)


@pytest.fixture(scope="session")
def fg_stats(fg_dataset):
    return ds.stats(fg_dataset)
