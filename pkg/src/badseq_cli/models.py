"""Domain models shared by the library, the verifier and the CLI.

This module contains the budget and fundamental-sequence configuration
records, the enumerations used across the hierarchies, and the
report records rendered by the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from badseq_cli.errors import BudgetExceededError


class OmegaPreset(StrEnum):
    """Value assigned to ω at argument x by fundamental sequences.

    Attributes:
        X: ω_x = x.
        X_PLUS_1: ω_x = x + 1.
    """

    X = "x"
    X_PLUS_1 = "x+1"


class HierarchyKind(StrEnum):
    """Ordinal-indexed function hierarchies.

    Attributes:
        HARDY: Iterates h along the descent (h^α).
        LENGTH: Counts the successor steps of that descent (h_α).
        FAST: Fast-growing functions built by diagonal iteration (f_α).
    """

    HARDY = "hardy"
    LENGTH = "length"
    FAST = "fast"


class Trichotomy(StrEnum):
    """Shape of an ordinal term."""

    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


class ComplexityBranch(StrEnum):
    """Which case of the complexity classification applied.

    Attributes:
        BETA_DOMINATES: γ < ω and β ≥ ω, class F_β.
        GAMMA_PLUS_BETA: 2 ≤ γ < ω and β < ω, class F_{γ+β}.
        OUTSIDE: Neither case applies.
    """

    BETA_DOMINATES = "beta-dominates"
    GAMMA_PLUS_BETA = "gamma-plus-beta"
    OUTSIDE = "outside"


class OutcomeStatus(StrEnum):
    """Outcome of one verification instance."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


class VerifySuite(StrEnum):
    """Property suites run by ``badseq verify``."""

    ORDINALS = "ordinals"
    DESCENT = "descent"
    REFLECTION = "reflection"
    BIJECTION = "bijection"
    DERIVATIVES = "derivatives"
    HIERARCHIES = "hierarchies"
    LEAN = "lean"
    BRIDGE = "bridge"
    ALL = "all"


class EvalBudget(BaseModel):
    """Ceilings bounding every potentially explosive computation.

    Attributes:
        max_nodes: Search nodes, embedding checks and enumerated elements allowed.
        max_steps: Recursive evaluation steps allowed.
        max_bits: Bit length allowed for any natural produced.
    """

    model_config = ConfigDict(frozen=True)

    max_nodes: int = Field(10_000_000, gt=0, description="Search node ceiling")
    max_steps: int = Field(100_000, gt=0, description="Evaluation step ceiling")
    max_bits: int = Field(4096, gt=0, description="Bit-length ceiling for naturals")


class FundamentalConfig(BaseModel):
    """Fundamental-sequence configuration.

    Attributes:
        omega_at: Value of ω_x.
    """

    model_config = ConfigDict(frozen=True)

    omega_at: OmegaPreset = Field(OmegaPreset.X_PLUS_1, description="Value of ω_x")

    def omega(self, x: int) -> int:
        """Return ω_x for the configured preset.

        Args:
            x: The argument.

        Returns:
            x or x + 1.
        """
        return x + 1 if self.omega_at == OmegaPreset.X_PLUS_1 else x


@dataclass
class BudgetMeter:
    """Mutable consumption counter for one library call.

    Attributes:
        budget: The ceilings to enforce.
        nodes: Nodes charged so far.
        steps: Steps charged so far.
    """

    budget: EvalBudget
    nodes: int = 0
    steps: int = 0
    progress: dict[str, Any] = field(default_factory=dict)

    def charge_node(self, count: int = 1) -> None:
        """Charge search nodes.

        Raises:
            BudgetExceededError: If max_nodes is exceeded.
        """
        self.nodes += count
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError("max_nodes", self.budget.max_nodes, self.nodes, self.progress)

    def charge_step(self) -> None:
        """Charge one evaluation step.

        Raises:
            BudgetExceededError: If max_steps is exceeded.
        """
        self.steps += 1
        if self.steps > self.budget.max_steps:
            raise BudgetExceededError("max_steps", self.budget.max_steps, self.steps, self.progress)

    def check_bits(self, value: int) -> int:
        """Check a natural against the bit ceiling.

        Args:
            value: The natural to check.

        Returns:
            The value unchanged.

        Raises:
            BudgetExceededError: If the value is too wide.
        """
        bits = value.bit_length()
        if bits > self.budget.max_bits:
            raise BudgetExceededError("max_bits", self.budget.max_bits, bits, self.progress)
        return value


class LcsShape(BaseModel):
    """Shape of a lossy channel system: q states, m letters, c channels."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(..., ge=1, description="Number of control states")
    m: int = Field(..., ge=1, description="Message alphabet size")
    c: int = Field(..., ge=1, description="Number of channels")


class Classification(BaseModel):
    """Fast-growing class bounding a family of controlled bad sequences.

    Attributes:
        branch: Which case applied.
        index: Formatted ordinal α of the class F_α, None when outside.
        beta: Formatted exponent bound β.
        gamma: Formatted control level γ.
    """

    model_config = ConfigDict(frozen=True)

    branch: ComplexityBranch
    index: str | None = None
    beta: str
    gamma: str
    note: str = ""


class LengthBound(BaseModel):
    """Symbolic and numeric upper bound on bad sequence lengths.

    Attributes:
        alpha: Formatted ordinal the bound is indexed by.
        leanness: Leanness k of alpha.
        h: Formatted function h(x) = x·g(x).
        argument: Argument the length function is applied to.
        symbolic: Human-readable statement of the bound.
        numeric: Value of h_α at the argument, None if not computed.
        exceeded: Ceiling hit while computing numeric, if any.
        hardy_instance: The specialised Γ_p* bound when alpha = ω^(ω^(p-1)).
    """

    model_config = ConfigDict(frozen=True)

    alpha: str
    leanness: int
    h: str
    argument: int
    symbolic: str
    numeric: int | None = None
    exceeded: str | None = None
    hardy_instance: dict[str, int] | None = None


class ReportRecord(BaseModel):
    """Machine-readable record produced by every CLI command.

    Attributes:
        op: Command name.
        input: Parsed command inputs.
        result: Command result payload.
        budget: Budget in force and consumption.
        config: Fundamental-sequence and control configuration.
    """

    model_config = ConfigDict(frozen=True)

    op: str
    input: dict[str, Any] = Field(default_factory=dict)
    result: dict[str, Any] = Field(default_factory=dict)
    budget: dict[str, Any] = Field(default_factory=dict)
    config: dict[str, Any] = Field(default_factory=dict)

    def to_json(self) -> str:
        """Serialize with stable key order.

        Returns:
            JSON text.
        """
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True)


class InstanceOutcome(BaseModel):
    """Outcome of a single verification instance."""

    model_config = ConfigDict(frozen=True)

    suite: str
    index: int
    description: str
    status: OutcomeStatus
    detail: str = ""


class VerifyReport(BaseModel):
    """Aggregated result of a verification run.

    Attributes:
        suite: Suite that was requested.
        seed: Random seed used for sampling.
        passed: Instances that held.
        failed: Instances that violated their property.
        skipped: Instances abandoned on a budget ceiling.
        outcomes: Every instance, in execution order.
        errors: Messages for failed instances.
    """

    suite: str
    seed: int
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    outcomes: list[InstanceOutcome] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)

    @property
    def checked(self) -> int:
        """Total number of instances attempted."""
        return self.passed + self.failed + self.skipped

    @property
    def ok(self) -> bool:
        """Whether no instance failed."""
        return self.failed == 0

    def record(self, outcome: InstanceOutcome) -> None:
        """Add an outcome and update the counters.

        Args:
            outcome: The instance outcome to add.
        """
        self.outcomes.append(outcome)
        if outcome.status == OutcomeStatus.PASSED:
            self.passed += 1
        elif outcome.status == OutcomeStatus.FAILED:
            self.failed += 1
            self.add_error(f"[{outcome.suite} #{outcome.index}] {outcome.description}: {outcome.detail}")
        else:
            self.skipped += 1

    def add_error(self, error: str) -> None:
        """Add an error message to the report.

        Args:
            error: The error message to add.
        """
        self.errors.append(error)

    def completed(self, suite: str) -> int:
        """Count non-skipped instances of one suite.

        Args:
            suite: Suite name.

        Returns:
            Passed plus failed instances of that suite.
        """
        return sum(
            1 for o in self.outcomes if o.suite == suite and o.status != OutcomeStatus.SKIPPED
        )


class PresetReport(BaseModel):
    """Complexity report for one of the application presets.

    Attributes:
        name: Preset name ("lcs" or "pep").
        nwqo: Formatted nwqo the preset reduces to, None for unbounded alphabets.
        order_type: Formatted maximal order type.
        level: Formatted index of the fast-growing level the preset sits at.
        classification: Complexity classification record.
        gamma_raised: Whether the control level was raised to 2 for a finite exponent.
        numeric: Numeric values computed for small instances.
        exceeded: Ceiling hit while computing numeric values, if any.
        note: Remark on the numeric values, if any.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    nwqo: str | None = None
    order_type: str | None = None
    level: str
    classification: Classification
    gamma_raised: bool = False
    numeric: dict[str, int] = Field(default_factory=dict)
    exceeded: str | None = None
    note: str | None = None
