import os

import pytest
from hypothesis import HealthCheck, settings

from arasonlab.services.hermitian import HermContext
from arasonlab.services.lab import GenConfig

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def gaussian():
    """Q(i)"""
    return HermContext.of(-1)


@pytest.fixture
def real_quadratic():
    """Q(sqrt 2)"""
    return HermContext.of(2)


@pytest.fixture
def small_cfg():
    return GenConfig(seed=7, trials=6, height_bound=30, delta_pool=[-1, 2, -2, 3, -3, 5, -7])


@pytest.fixture
def reports_dir(tmp_path):
    path = tmp_path / "reports"
    path.mkdir()
    return str(path)
