"""Shared fixtures and deterministic hypothesis settings."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from adrcoder.assets import fixture_dictionary

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def fixture_dict():
    """The shipped Italian demo dictionary, built once per test session."""
    return fixture_dictionary()
