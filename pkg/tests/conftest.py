import pathlib

import pytest

from heatpipe2d.config import load_config
from heatpipe2d.domain import build_grid, table1_geometry
from heatpipe2d.wick import WickSpec

ROOT = pathlib.Path(__file__).resolve().parents[1]
CALIBRATION_FILE = ROOT / "configs" / "calibrated_60C.cfg"

# Filled by test_acceptance; printed at the end of the session.
ACCEPTANCE_LINES = []


@pytest.fixture
def geometry():
    return table1_geometry()


@pytest.fixture
def wick100():
    """Wick used by the hand-checked 1D examples: 100 um spheres, eps = 0.4."""
    return WickSpec(sphere_diameter=100e-6, porosity=0.4, thickness=0.7e-3, wetting_angle=10.0)


@pytest.fixture
def calibrated():
    return load_config(CALIBRATION_FILE)


@pytest.fixture
def coarse_grid(geometry):
    return build_grid(geometry, 44, 30)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
