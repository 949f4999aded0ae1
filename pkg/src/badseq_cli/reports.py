"""Report records and their Rich rendering.

Every command builds one ReportRecord; ``--json`` prints it as JSON and
the default output renders it as tables.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from rich.markup import escape
from rich.table import Table

from badseq_cli.models import (
    EvalBudget,
    FundamentalConfig,
    OutcomeStatus,
    ReportRecord,
    VerifyReport,
)

if TYPE_CHECKING:
    from rich.console import Console

    from badseq_cli.nwqo.control import ControlFunction


def budget_usage(
    budget: EvalBudget,
    nodes: int | None = None,
    steps: int | None = None,
) -> dict[str, Any]:
    """Ceilings in force together with what a computation consumed.

    Args:
        budget: Ceilings in force.
        nodes: Search nodes used, if tracked.
        steps: Evaluation steps used, if tracked.

    Returns:
        The budget section of a report record.
    """
    usage: dict[str, Any] = budget.model_dump()
    if nodes is not None:
        usage["nodes_used"] = nodes
    if steps is not None:
        usage["steps_used"] = steps
    return usage


def build_record(
    op: str,
    inputs: dict[str, Any],
    result: dict[str, Any],
    budget: EvalBudget,
    config: FundamentalConfig,
    g: ControlFunction,
    nodes: int | None = None,
    steps: int | None = None,
) -> ReportRecord:
    """Assemble the record a command emits.

    Args:
        op: Command name.
        inputs: Parsed inputs, echoed back.
        result: Command result payload.
        budget: Ceilings in force.
        config: Fundamental-sequence configuration.
        g: Control function in force.
        nodes: Search nodes used, if tracked.
        steps: Evaluation steps used, if tracked.

    Returns:
        The report record.
    """
    return ReportRecord(
        op=op,
        input=inputs,
        result=result,
        budget=budget_usage(budget, nodes, steps),
        config={"omega": config.omega_at.value, "control": str(g)},
    )


def _flatten(prefix: str, value: Any) -> list[tuple[str, str]]:
    if isinstance(value, dict):
        rows: list[tuple[str, str]] = []
        for key, inner in value.items():
            rows.extend(_flatten(f"{prefix}.{key}" if prefix else str(key), inner))
        return rows
    if isinstance(value, list):
        return [(prefix, ", ".join(str(item) for item in value) or "(none)")]
    if value is None:
        return [(prefix, "-")]
    return [(prefix, str(value))]


def display_record(console: Console, record: ReportRecord) -> None:
    """Render a record as an input table and a result table.

    Args:
        console: Target console.
        record: The record to render.
    """
    if record.input:
        table = Table(title=f"{record.op}: input", show_header=False)
        table.add_column("Field", style="cyan")
        table.add_column("Value", style="green")
        for key, value in _flatten("", record.input):
            table.add_row(key, escape(value))
        console.print(table)

    table = Table(title=f"{record.op}: result")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="green")
    for key, value in _flatten("", record.result):
        table.add_row(key, escape(value))
    console.print(table)

    used = [f"{k}={v}" for k, v in record.budget.items() if k.endswith("_used")]
    if used:
        console.print(f"[dim]Budget used: {', '.join(used)}[/dim]")


def verify_record(report: VerifyReport, budget: EvalBudget) -> ReportRecord:
    """Machine-readable form of a verification run.

    Args:
        report: The run report.
        budget: Per-instance ceilings.

    Returns:
        The report record, listing every instance.
    """
    return ReportRecord(
        op="verify",
        input={"suite": report.suite, "seed": report.seed},
        result={
            "ok": report.ok,
            "passed": report.passed,
            "failed": report.failed,
            "skipped": report.skipped,
            "instances": [o.model_dump(mode="json") for o in report.outcomes],
        },
        budget=budget_usage(budget),
    )


def display_verify_report(console: Console, report: VerifyReport, verbose: bool = False) -> None:
    """Render per-suite counts, then failures.

    Args:
        console: Target console.
        report: The run report.
        verbose: Whether to list every instance, not only failures.
    """
    counts: dict[str, dict[OutcomeStatus, int]] = {}
    for outcome in report.outcomes:
        per_suite = counts.setdefault(outcome.suite, dict.fromkeys(OutcomeStatus, 0))
        per_suite[outcome.status] += 1

    table = Table(title=f"Verification Results (seed {report.seed})")
    table.add_column("Suite", style="cyan")
    table.add_column("Passed", style="green", justify="right")
    table.add_column("Failed", style="red", justify="right")
    table.add_column("Skipped", style="yellow", justify="right")
    for suite, per_suite in counts.items():
        table.add_row(
            suite,
            str(per_suite[OutcomeStatus.PASSED]),
            str(per_suite[OutcomeStatus.FAILED]),
            str(per_suite[OutcomeStatus.SKIPPED]),
        )
    table.add_row(
        "[bold]total[/bold]", str(report.passed), str(report.failed), str(report.skipped)
    )
    console.print(table)

    if verbose:
        for outcome in report.outcomes:
            console.print(
                f"  {outcome.status.value:<7} {outcome.suite} #{outcome.index} "
                f"{escape(outcome.description)}"
            )

    if report.errors:
        console.print("\n[red]Failures:[/red]")
        for error in report.errors:
            console.print(f"  - {escape(error)}")
