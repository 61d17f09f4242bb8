"""Shared fixtures and hypothesis profiles."""

from __future__ import annotations

import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from mproduct import formats
from mproduct.config import DEFAULT_TOLERANCES
from mproduct.tensor import TransformMatrix


settings.register_profile(
    "dev",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "ci",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240229)


@pytest.fixture(scope="session")
def example_m() -> TransformMatrix:
    return TransformMatrix(formats.load_example_matrix("transform_m"))


@pytest.fixture(scope="session")
def golden_tol():
    return DEFAULT_TOLERANCES.with_overrides(residual_tol=DEFAULT_TOLERANCES.golden_tol)
