"""Verification orchestration service.

This module runs the property suites instance by instance, turning
budget refusals into skipped outcomes and collecting everything into a
VerifyReport.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import BadseqError, BudgetExceededError
from badseq_cli.models import (
    EvalBudget,
    InstanceOutcome,
    OutcomeStatus,
    VerifyReport,
    VerifySuite,
)
from badseq_cli.verify.suites import SUITES, Instance, SuiteContext

if TYPE_CHECKING:
    from badseq_cli.config import VerifySettings

logger = structlog.get_logger(__name__)


# Type for progress callback: (current, total, message)
ProgressCallback = Callable[[int, int, str], None]


def suites_for(suite: VerifySuite) -> list[VerifySuite]:
    """Expand ``all`` into every suite, in a fixed order.

    Args:
        suite: Requested suite.

    Returns:
        The suites to run.
    """
    if suite == VerifySuite.ALL:
        return list(SUITES)
    return [suite]


class VerifyService:
    """Runs property suites deterministically for a given seed.

    Every suite draws its samples from its own random source seeded
    with the run seed and the suite name, so a suite checks the same
    instances whether it runs alone or as part of ``all``.
    """

    def __init__(self, settings: VerifySettings, budget: EvalBudget) -> None:
        """Initialize the verification service.

        Args:
            settings: Seed, sample count and completion threshold defaults.
            budget: Ceilings applied to each instance.
        """
        self.settings = settings
        self.budget = budget

    def collect(self, suite: VerifySuite, seed: int) -> list[tuple[VerifySuite, Instance]]:
        """Build the instances of the requested suites.

        Args:
            suite: Requested suite.
            seed: Random seed.

        Returns:
            (suite, instance) pairs in execution order.
        """
        collected: list[tuple[VerifySuite, Instance]] = []
        for name in suites_for(suite):
            context = SuiteContext(
                rng=random.Random(f"{seed}:{name.value}"),
                budget=self.budget,
                samples=self.settings.samples,
            )
            collected.extend((name, instance) for instance in SUITES[name](context))
        return collected

    def run(
        self,
        suite: VerifySuite,
        seed: int | None = None,
        progress_callback: ProgressCallback | None = None,
    ) -> VerifyReport:
        """Run the requested suites.

        Args:
            suite: Suite name, or ``all``.
            seed: Random seed; the configured seed when None.
            progress_callback: Optional callback for progress updates.

        Returns:
            VerifyReport with one outcome per instance.
        """
        seed = self.settings.seed if seed is None else seed
        report = VerifyReport(suite=suite.value, seed=seed)
        instances = self.collect(suite, seed)
        total = len(instances)
        logger.info("Starting verification", suite=suite.value, seed=seed, instances=total)

        for index, (name, instance) in enumerate(instances):
            report.record(self._run_instance(name, index, instance))
            if progress_callback:
                progress_callback(index + 1, total, f"{name.value}: {instance.description}")

        if VerifySuite.BRIDGE in suites_for(suite):
            self._check_completions(report, total)

        logger.info(
            "Verification complete",
            suite=suite.value,
            passed=report.passed,
            failed=report.failed,
            skipped=report.skipped,
        )
        return report

    def _run_instance(self, suite: VerifySuite, index: int, instance: Instance) -> InstanceOutcome:
        """Run one instance, classifying its outcome."""
        log = logger.bind(suite=suite.value, index=index)
        status = OutcomeStatus.PASSED
        detail = ""
        try:
            violation = instance.check()
        except BudgetExceededError as e:
            log.debug("Instance skipped", ceiling=e.ceiling, progress=e.progress)
            status = OutcomeStatus.SKIPPED
            detail = f"{e.ceiling}={e.limit} exceeded"
        except BadseqError as e:
            log.error("Instance raised", instance=instance.description, error=str(e))
            status = OutcomeStatus.FAILED
            detail = str(e)
        else:
            if violation is not None:
                log.error("Property violated", instance=instance.description, detail=violation)
                status = OutcomeStatus.FAILED
                detail = violation

        return InstanceOutcome(
            suite=suite.value,
            index=index,
            description=instance.description,
            status=status,
            detail=detail,
        )

    def _check_completions(self, report: VerifyReport, index: int) -> None:
        """Fail the run when too few bridge instances finished within budget."""
        completed = report.completed(VerifySuite.BRIDGE.value)
        required = self.settings.min_completed
        if completed < required:
            logger.error("Too few bridge instances completed", completed=completed, required=required)
        report.record(
            InstanceOutcome(
                suite=VerifySuite.BRIDGE.value,
                index=index,
                description=f"at least {required} bridge instances complete",
                status=OutcomeStatus.PASSED if completed >= required else OutcomeStatus.FAILED,
                detail=f"{completed} completed",
            )
        )
