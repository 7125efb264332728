import pytest
from hypothesis import HealthCheck, settings

from simscan.detector import Detector

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def detector():
    return Detector()
