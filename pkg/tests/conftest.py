# tests/conftest.py
import pytest
import os

from hecke_spectra.algebra.factored import FactoredFunction
from hecke_spectra.algebra.qnumbers import q_integer
from hecke_spectra.spectral.hecke_spec import HeckeSpec
from hecke_spectra.spectral.presets import iwahori_spec, make_spec


@pytest.fixture(scope="session")
def project_root_dir() -> str:
    return os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))


@pytest.fixture(scope="session")
def data_dir(project_root_dir: str) -> str:
    path = os.path.join(project_root_dir, "data")
    if not os.path.isdir(path):
        pytest.fail(f"Data directory not found: {path}", pytrace=False)
    return path


@pytest.fixture(scope="session")
def jobs_dir(data_dir: str) -> str:
    return os.path.join(data_dir, "jobs")


@pytest.fixture(scope="session")
def a1_iwahori() -> HeckeSpec:
    return iwahori_spec("A1-adj")


@pytest.fixture(scope="session")
def a2_iwahori() -> HeckeSpec:
    return iwahori_spec("A2-adj")


@pytest.fixture(scope="session")
def b2_iwahori() -> HeckeSpec:
    return iwahori_spec("B2-adj")


@pytest.fixture(scope="session")
def g2_iwahori() -> HeckeSpec:
    return iwahori_spec("G2")


@pytest.fixture(scope="session")
def c1_unequal() -> HeckeSpec:
    """C1 with k_plus = k_minus = 2: residual points at alpha(r) = v^2 and -v^2."""
    return make_spec("C1", {0: 2}, {0: 2})


def cuspidal_target_value(m: int) -> FactoredFunction:
    """1 / ((m + 1) [m + 1]_q)."""
    return (q_integer(m + 1) * (m + 1)).inverse()


@pytest.fixture(scope="session")
def cuspidal_value():
    return cuspidal_target_value


@pytest.fixture(scope="session")
def cuspidal_source():
    """Rank-0 spec whose mu is 1 / ((m + 1) [m + 1]_q)."""
    def build(m: int) -> HeckeSpec:
        return make_spec("T0", {}, d=cuspidal_target_value(m))
    return build
