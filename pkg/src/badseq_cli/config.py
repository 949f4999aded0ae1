"""Configuration management using Pydantic Settings.

Settings are read from environment variables, an optional ``.env`` file
and an optional TOML config file; CLI flags override them per command.
"""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Any

import tomli_w
from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from badseq_cli.models import EvalBudget, FundamentalConfig, OmegaPreset


def get_default_config_path() -> Path:
    """Get the default configuration file path.

    Returns:
        Path to badseq.toml in the current working directory.
    """
    return Path.cwd() / "badseq.toml"


class BudgetSettings(BaseSettings):
    """Default ceilings for explosive computations.

    Attributes:
        max_nodes: Search nodes, embedding checks and enumerated elements allowed.
        max_steps: Hierarchy evaluation steps allowed.
        max_bits: Bit length allowed for any natural produced.
    """

    model_config = SettingsConfigDict(
        env_prefix="BADSEQ_BUDGET_",
        env_file=".env",
        extra="ignore",
    )

    max_nodes: int = Field(10_000_000, gt=0, description="Search node ceiling")
    max_steps: int = Field(100_000, gt=0, description="Evaluation step ceiling")
    max_bits: int = Field(4096, gt=0, description="Bit-length ceiling")

    def to_budget(
        self,
        max_nodes: int | None = None,
        max_steps: int | None = None,
        max_bits: int | None = None,
    ) -> EvalBudget:
        """Build the budget, with optional per-command overrides.

        Returns:
            The EvalBudget in force.

        Raises:
            ValidationError: If an override is not positive.
        """
        return EvalBudget(
            max_nodes=self.max_nodes if max_nodes is None else max_nodes,
            max_steps=self.max_steps if max_steps is None else max_steps,
            max_bits=self.max_bits if max_bits is None else max_bits,
        )


class HierarchySettings(BaseSettings):
    """Fundamental-sequence and control defaults.

    Attributes:
        omega: Value of ω_x, "x" or "x+1".
        control: Control function expression.
    """

    model_config = SettingsConfigDict(
        env_prefix="BADSEQ_HIER_",
        env_file=".env",
        extra="ignore",
    )

    omega: OmegaPreset = Field(OmegaPreset.X_PLUS_1, description="Value of ω_x")
    control: str = Field("succ", description="Control function g")

    def fundamental_config(self, omega: OmegaPreset | None = None) -> FundamentalConfig:
        """Build the fundamental-sequence configuration.

        Args:
            omega: Per-command override.

        Returns:
            The configuration.
        """
        return FundamentalConfig(omega_at=omega or self.omega)


class VerifySettings(BaseSettings):
    """Verification run defaults.

    Attributes:
        seed: Random seed for sampled instances.
        samples: Number of random terms per sampled law.
        min_completed: Bridge instances that must finish within budget.
        max_nodes: Node ceiling for each instance, lower than the command default
            so that hopeless searches are skipped quickly.
    """

    model_config = SettingsConfigDict(
        env_prefix="BADSEQ_VERIFY_",
        env_file=".env",
        extra="ignore",
    )

    seed: int = Field(1, description="Random seed")
    samples: int = Field(1000, gt=0, description="Random terms per sampled law")
    min_completed: int = Field(20, ge=0, description="Bridge instances that must complete")
    max_nodes: int = Field(200_000, gt=0, description="Search node ceiling per instance")


class Settings(BaseSettings):
    """Main application settings combining all sub-settings.

    Attributes:
        budget: Budget defaults.
        hierarchy: Fundamental-sequence and control defaults.
        verify: Verification defaults.
        config_path: Path to the config file.
        log_level: Logging level.
    """

    model_config = SettingsConfigDict(
        env_prefix="BADSEQ_",
        env_file=".env",
        extra="ignore",
    )

    budget: BudgetSettings = Field(default_factory=BudgetSettings)
    hierarchy: HierarchySettings = Field(default_factory=HierarchySettings)
    verify: VerifySettings = Field(default_factory=VerifySettings)
    config_path: Path = Field(
        default_factory=get_default_config_path,
        description="Path to config file",
    )
    log_level: str = Field("WARNING", description="Logging level")

    @field_validator("log_level")
    @classmethod
    def upper_level(cls, v: str) -> str:
        """Normalize the level name to upper case."""
        return v.upper()

    @model_validator(mode="before")
    @classmethod
    def load_config_file(cls, data: dict[str, Any]) -> dict[str, Any]:
        """Load settings from config file if it exists.

        Args:
            data: Input data dict.

        Returns:
            Merged data dict with config file values.
        """
        config_path = data.get("config_path") or get_default_config_path()
        if isinstance(config_path, str):
            config_path = Path(config_path)

        if config_path.exists():
            with open(config_path, "rb") as f:
                file_config = tomllib.load(f)
            return _deep_merge(file_config, data)

        return data


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Deep merge two dictionaries.

    Args:
        base: Base dictionary.
        override: Override dictionary (values take precedence).

    Returns:
        Merged dictionary.
    """
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        elif value is not None:
            result[key] = value
    return result


def create_default_config(path: Path | None = None) -> Path:
    """Create a default config file template.

    Args:
        path: Path to create the config file. Uses default if None.

    Returns:
        Path to the created config file.
    """
    if path is None:
        path = get_default_config_path()

    path.parent.mkdir(parents=True, exist_ok=True)

    budget = EvalBudget()
    default_config = {
        "log_level": "WARNING",
        "budget": {
            "max_nodes": budget.max_nodes,
            "max_steps": budget.max_steps,
            "max_bits": budget.max_bits,
        },
        "hierarchy": {
            "omega": OmegaPreset.X_PLUS_1.value,
            "control": "succ",
        },
        "verify": {
            "seed": 1,
            "samples": 1000,
            "min_completed": 20,
            "max_nodes": 200_000,
        },
    }

    with open(path, "wb") as f:
        tomli_w.dump(default_config, f)

    return path


def load_settings(config_path: Path | None = None) -> Settings:
    """Load settings from environment and config file.

    This is the main entry point for loading configuration.

    Args:
        config_path: Optional path to config file.

    Returns:
        Configured Settings instance.
    """
    init_data: dict[str, Any] = {}
    if config_path:
        init_data["config_path"] = config_path

    return Settings(**init_data)
