import pathlib

import pytest

from bicatkit import samples

FIXTURE_DIR = (pathlib.Path(__file__).resolve().parent.parent
               / "src" / "bicatkit" / "fixtures")


@pytest.fixture(scope="session")
def fixture_dir() -> pathlib.Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def cocycle():
    return samples.nontrivial_cocycle_bicategory()


@pytest.fixture(scope="session")
def trivial_cocycle():
    return samples.trivial_cocycle_bicategory()


@pytest.fixture(scope="session")
def walking_arrow():
    return samples.walking_arrow_two_category()
