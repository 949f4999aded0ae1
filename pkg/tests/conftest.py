"""Shared pytest fixtures for the test suite.

This module provides common fixtures used across multiple test files.
"""

from __future__ import annotations

import tempfile
from collections.abc import Generator
from pathlib import Path
from typing import TYPE_CHECKING

import pytest
from typer.testing import CliRunner

from badseq_cli.config import VerifySettings
from badseq_cli.models import EvalBudget, FundamentalConfig, OmegaPreset

if TYPE_CHECKING:
    from _pytest.monkeypatch import MonkeyPatch


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for test files.

    Yields:
        Path to the temporary directory.
    """
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def isolated_cwd(temp_dir: Path, monkeypatch: MonkeyPatch) -> Path:
    """Run in an empty directory with no BADSEQ_ variables set.

    Keeps a developer's badseq.toml, .env or environment out of the tests.

    Returns:
        The working directory.
    """
    monkeypatch.chdir(temp_dir)
    for name in [
        "BADSEQ_LOG_LEVEL",
        "BADSEQ_BUDGET_MAX_NODES",
        "BADSEQ_BUDGET_MAX_STEPS",
        "BADSEQ_BUDGET_MAX_BITS",
        "BADSEQ_HIER_OMEGA",
        "BADSEQ_HIER_CONTROL",
        "BADSEQ_VERIFY_SEED",
        "BADSEQ_VERIFY_SAMPLES",
        "BADSEQ_VERIFY_MIN_COMPLETED",
        "BADSEQ_VERIFY_MAX_NODES",
    ]:
        monkeypatch.delenv(name, raising=False)
    return temp_dir


@pytest.fixture
def x_plus_1() -> FundamentalConfig:
    """Fundamental sequences with ω_x = x + 1.

    Returns:
        FundamentalConfig instance.
    """
    return FundamentalConfig(omega_at=OmegaPreset.X_PLUS_1)


@pytest.fixture
def x_only() -> FundamentalConfig:
    """Fundamental sequences with ω_x = x.

    Returns:
        FundamentalConfig instance.
    """
    return FundamentalConfig(omega_at=OmegaPreset.X)


@pytest.fixture
def small_budget() -> EvalBudget:
    """A budget small enough to make large computations refuse quickly.

    Returns:
        EvalBudget instance.
    """
    return EvalBudget(max_nodes=20_000, max_steps=20_000, max_bits=256)


@pytest.fixture
def tiny_budget() -> EvalBudget:
    """A budget that refuses almost everything.

    Returns:
        EvalBudget instance.
    """
    return EvalBudget(max_nodes=10, max_steps=10, max_bits=16)


@pytest.fixture
def verify_settings() -> VerifySettings:
    """Verification settings with few samples for fast runs.

    Returns:
        VerifySettings instance.
    """
    return VerifySettings(seed=7, samples=10, min_completed=0, max_nodes=5_000)


@pytest.fixture
def runner() -> CliRunner:
    """Create a CLI runner.

    Returns:
        CliRunner instance.
    """
    return CliRunner()
