"""CLI interface for controlled bad sequence bounds.

This module provides the command-line interface using Typer with
Rich for terminal output. Every command can also emit its report
record as JSON.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, NoReturn

import structlog
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskID, TextColumn
from rich.table import Table

from badseq_cli import __version__
from badseq_cli.applications import control_level, lcs_report, pep_report
from badseq_cli.config import (
    Settings,
    create_default_config,
    get_default_config_path,
    load_settings,
)
from badseq_cli.derivatives import DescentBound, derive
from badseq_cli.errors import BadseqError, BudgetExceededError, ParseError
from badseq_cli.hierarchies.bounds import classify_complexity, leading_exponent, length_bound
from badseq_cli.hierarchies.evaluate import HierarchyEvaluator
from badseq_cli.models import (
    EvalBudget,
    FundamentalConfig,
    HierarchyKind,
    LcsShape,
    OmegaPreset,
    ReportRecord,
    VerifySuite,
)
from badseq_cli.nwqo.algebra import normalize
from badseq_cli.nwqo.control import ControlFunction, parse_control
from badseq_cli.nwqo.order import check_element, is_bad, is_controlled
from badseq_cli.nwqo.oracle import max_bad_length, search_residual
from badseq_cli.nwqo.syntax import format_nwqo, format_sequence, parse_nwqo, parse_sequence
from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import (
    classify,
    compare,
    format_ordinal,
    is_cnf,
    leanness,
    natural_product,
    natural_sum,
    to_cnf,
)
from badseq_cli.otype import otype
from badseq_cli.reports import build_record, display_record, display_verify_report, verify_record
from badseq_cli.verify import VerifyService

# Configure structlog for CLI
structlog.configure(
    processors=[
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.dev.ConsoleRenderer(colors=True),
    ],
    wrapper_class=structlog.stdlib.BoundLogger,
    context_class=dict,
    logger_factory=structlog.stdlib.LoggerFactory(),
    cache_logger_on_first_use=True,
)

logger = structlog.get_logger(__name__)

EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

app = typer.Typer(
    name="badseq",
    help="Length bounds for controlled bad sequences over normed wqos",
    no_args_is_help=True,
)

config_app = typer.Typer(help="Configuration management")
app.add_typer(config_app, name="config")

console = Console()

# Options shared by the computing commands
JsonOption = Annotated[bool, typer.Option("--json", help="Print the report record as JSON")]
ControlOption = Annotated[
    str | None, typer.Option("--g", help="Control function, 'succ' or an expression in x")
]
OmegaOption = Annotated[OmegaPreset | None, typer.Option("--omega", help="Value of ω_x")]
NodesOption = Annotated[int | None, typer.Option("--budget-nodes", min=1, help="Node ceiling")]
StepsOption = Annotated[int | None, typer.Option("--budget-steps", min=1, help="Step ceiling")]
BitsOption = Annotated[int | None, typer.Option("--budget-bits", min=1, help="Bit-length ceiling")]
ConfigOption = Annotated[
    Path | None,
    typer.Option("--config", "-c", help="Path to config file", exists=True, dir_okay=False),
]
LogLevelOption = Annotated[str | None, typer.Option("--log-level", help="Logging level")]


@dataclass(frozen=True)
class _Run:
    """Settings resolved for one command invocation."""

    settings: Settings
    g: ControlFunction
    config: FundamentalConfig
    budget: EvalBudget


def _apply_log_level(level: str) -> None:
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level.upper(), logging.WARNING),
        force=True,
    )


def _prepare(
    config_path: Path | None,
    log_level: str | None,
    g: str | None = None,
    omega: OmegaPreset | None = None,
    budget_nodes: int | None = None,
    budget_steps: int | None = None,
    budget_bits: int | None = None,
) -> _Run:
    """Load settings and apply per-command overrides."""
    settings = load_settings(config_path)
    _apply_log_level(log_level or settings.log_level)
    return _Run(
        settings=settings,
        g=parse_control(g or settings.hierarchy.control),
        config=settings.hierarchy.fundamental_config(omega),
        budget=settings.budget.to_budget(budget_nodes, budget_steps, budget_bits),
    )


def _fail(error: Exception) -> NoReturn:
    """Report an error and exit with the matching status.

    Args:
        error: The exception raised by the command.

    Raises:
        typer.Exit: Always.
    """
    if isinstance(error, ParseError):
        console.print(f"[red]Error:[/red] {escape(error.message)}")
        console.print(escape(error.caret()))
        code = EXIT_USAGE
    elif isinstance(error, BudgetExceededError):
        console.print(f"[red]Budget exceeded:[/red] {error.ceiling}={error.limit} (used {error.used})")
        if error.progress:
            progress = ", ".join(f"{k}={v}" for k, v in error.progress.items())
            console.print(f"[dim]Reached: {escape(progress)}[/dim]")
        code = EXIT_BUDGET
    elif isinstance(error, BadseqError | ValidationError):
        console.print(f"[red]Error:[/red] {escape(str(error))}")
        code = EXIT_USAGE
    else:
        logger.exception("Command failed")
        console.print(f"[red]Error:[/red] {escape(str(error))}")
        code = EXIT_INTERNAL
    raise typer.Exit(code) from None


def _emit(record: ReportRecord, json_output: bool) -> None:
    if json_output:
        typer.echo(record.to_json())
    else:
        display_record(console, record)


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"badseq version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            "-v",
            help="Show version and exit",
            callback=version_callback,
            is_eager=True,
        ),
    ] = None,
) -> None:
    """Controlled bad sequence length calculator."""
    pass


@app.command("len")
def len_cmd(
    expr: Annotated[str, typer.Argument(help="nwqo expression, e.g. 'G2^* * N'")],
    n: Annotated[int, typer.Option("--n", min=0, help="Initial norm bound")] = 1,
    witness: Annotated[
        bool, typer.Option("--witness", help="Include a maximal bad sequence")
    ] = False,
    check: Annotated[
        str | None, typer.Option("--check", help="Check a ';'-separated sequence instead")
    ] = None,
    forbid: Annotated[
        str | None, typer.Option("--forbid", help="Elements every sequence element must avoid")
    ] = None,
    symmetry: Annotated[
        bool, typer.Option("--symmetry", help="Prune sequences equal up to letter renaming")
    ] = False,
    json_output: JsonOption = False,
    g: ControlOption = None,
    budget_nodes: NodesOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Compute the longest (g, n)-controlled bad sequence length L_A(n).

    With --check, validate a given sequence instead; with --forbid,
    restrict to sequences avoiding the upward closures of the given
    elements.
    """
    valid = True
    try:
        run = _prepare(config_path, log_level, g, None, budget_nodes, budget_steps, budget_bits)
        nwqo = parse_nwqo(expr)
        inputs = {"expr": format_nwqo(nwqo), "n": n}

        if check is not None:
            sequence = parse_sequence(check)
            for element in sequence:
                check_element(nwqo, element)
            bad = is_bad(nwqo, sequence)
            controlled = is_controlled(nwqo, run.g, n, sequence)
            valid = bad and controlled
            inputs["sequence"] = format_sequence(sequence)
            record = build_record(
                "len",
                inputs,
                {"bad": bad, "controlled": controlled, "valid": valid, "length": len(sequence)},
                run.budget,
                run.config,
                run.g,
            )
        else:
            if forbid is not None:
                forbidden = parse_sequence(forbid)
                inputs["forbid"] = format_sequence(forbidden)
                result = search_residual(nwqo, forbidden, run.g, n, run.budget)
            else:
                result = max_bad_length(nwqo, run.g, n, run.budget, symmetry=symmetry)
            payload: dict[str, object] = {"length": result.length}
            if witness:
                payload["witness"] = format_sequence(result.witness)
            record = build_record(
                "len", inputs, payload, run.budget, run.config, run.g, nodes=result.nodes
            )

        _emit(record, json_output)

    except Exception as e:
        _fail(e)

    if not valid:
        raise typer.Exit(EXIT_VIOLATION)


@app.command("otype")
def otype_cmd(
    expr: Annotated[str, typer.Argument(help="Exponential nwqo expression")],
    json_output: JsonOption = False,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Compute the maximal order type of an exponential nwqo."""
    try:
        run = _prepare(config_path, log_level)
        nwqo = parse_nwqo(expr)
        record = build_record(
            "otype",
            {"expr": format_nwqo(nwqo)},
            {"normalized": format_nwqo(normalize(nwqo)), "otype": format_ordinal(otype(nwqo))},
            run.budget,
            run.config,
            run.g,
        )
        _emit(record, json_output)

    except Exception as e:
        _fail(e)


@app.command("cnf")
def cnf_cmd(
    term: Annotated[str, typer.Argument(help="Ordinal term, e.g. 'w^w*2+3'")],
    other: Annotated[
        str | None, typer.Option("--with", help="Second term to compare and combine with")
    ] = None,
    json_output: JsonOption = False,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Normalize an ordinal term and report its shape and leanness.

    With --with, also compare the two terms and compute their natural
    sum and product.
    """
    try:
        run = _prepare(config_path, log_level)
        alpha = parse_ordinal(term)
        normal = to_cnf(alpha)
        inputs = {"term": format_ordinal(alpha)}
        result: dict[str, object] = {
            "was_cnf": is_cnf(alpha),
            "cnf": format_ordinal(normal),
            "shape": classify(normal).value,
            "leanness": leanness(normal),
        }
        if other is not None:
            beta = to_cnf(parse_ordinal(other))
            inputs["with"] = format_ordinal(beta)
            result["compare"] = int(compare(normal, beta))
            result["natural_sum"] = format_ordinal(natural_sum(normal, beta))
            result["natural_product"] = format_ordinal(natural_product(normal, beta))

        _emit(build_record("cnf", inputs, result, run.budget, run.config, run.g), json_output)

    except Exception as e:
        _fail(e)


@app.command("deriv")
def deriv_cmd(
    term: Annotated[str, typer.Argument(help="CNF ordinal below ω^(ω^ω)")],
    n: Annotated[int, typer.Option("--n", min=1, help="Norm bound")] = 1,
    json_output: JsonOption = False,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """List the n-th derivatives of an ordinal."""
    try:
        run = _prepare(config_path, log_level)
        alpha = parse_ordinal(term)
        members = [format_ordinal(member) for member in derive(alpha, n)]
        record = build_record(
            "deriv",
            {"alpha": format_ordinal(alpha), "n": n},
            {"derivatives": members},
            run.budget,
            run.config,
            run.g,
        )
        _emit(record, json_output)

    except Exception as e:
        _fail(e)


@app.command("mbound")
def mbound_cmd(
    term: Annotated[str, typer.Argument(help="CNF ordinal below ω^(ω^ω)")],
    n: Annotated[int, typer.Option("--n", min=0, help="Norm bound")] = 1,
    json_output: JsonOption = False,
    g: ControlOption = None,
    budget_nodes: NodesOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Compute the descent bound M_α(n)."""
    try:
        run = _prepare(config_path, log_level, g, None, budget_nodes, budget_steps, budget_bits)
        alpha = parse_ordinal(term)
        bound = DescentBound(run.g, run.budget)
        value = bound(alpha, n)
        record = build_record(
            "mbound",
            {"alpha": format_ordinal(alpha), "n": n},
            {"value": value},
            run.budget,
            run.config,
            run.g,
            nodes=bound.meter.nodes,
        )
        _emit(record, json_output)

    except Exception as e:
        _fail(e)


@app.command("hier")
def hier_cmd(
    kind: Annotated[HierarchyKind, typer.Argument(help="Hierarchy to evaluate")],
    alpha_text: Annotated[str, typer.Option("--alpha", help="Index ordinal term")],
    x: Annotated[int, typer.Option("--x", min=0, help="Argument")],
    json_output: JsonOption = False,
    g: ControlOption = None,
    omega: OmegaOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Evaluate the Hardy, length or fast-growing hierarchy built on g."""
    try:
        run = _prepare(config_path, log_level, g, omega, None, budget_steps, budget_bits)
        alpha = parse_ordinal(alpha_text)
        evaluator = HierarchyEvaluator(run.g, run.config, run.budget)
        value = evaluator(kind, alpha, x)
        record = build_record(
            "hier",
            {"kind": kind.value, "alpha": format_ordinal(alpha), "x": x},
            {"value": value},
            run.budget,
            run.config,
            run.g,
            steps=evaluator.meter.steps,
        )
        _emit(record, json_output)

    except Exception as e:
        _fail(e)


@app.command("hbound")
def hbound_cmd(
    term: Annotated[str, typer.Argument(help="CNF order type")],
    n: Annotated[int, typer.Option("--n", min=0, help="Initial norm bound")] = 1,
    json_output: JsonOption = False,
    g: ControlOption = None,
    omega: OmegaOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Bound L_A(n) by h_α at the leanness-scaled argument, with h(x) = x·g(x)."""
    try:
        run = _prepare(config_path, log_level, g, omega, None, budget_steps, budget_bits)
        alpha = parse_ordinal(term)
        bound = length_bound(alpha, run.g, n, run.config, run.budget)
        record = build_record(
            "hbound",
            {"alpha": format_ordinal(alpha), "n": n},
            bound.model_dump(),
            run.budget,
            run.config,
            run.g,
        )
        _emit(record, json_output)
        if bound.exceeded and not json_output:
            console.print(f"[yellow]Numeric value refused:[/yellow] {bound.exceeded}")

    except Exception as e:
        _fail(e)


@app.command("classify")
def classify_cmd(
    beta_text: Annotated[
        str | None, typer.Option("--beta", help="Exponent bound β of the order type")
    ] = None,
    expr: Annotated[
        str | None, typer.Option("--expr", help="nwqo whose order type gives β")
    ] = None,
    gamma_text: Annotated[
        str | None, typer.Option("--gamma", help="Control level γ; inferred from g if omitted")
    ] = None,
    json_output: JsonOption = False,
    g: ControlOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Report the fast-growing class bounding controlled bad sequence lengths."""
    try:
        run = _prepare(config_path, log_level, g)
        if (beta_text is None) == (expr is None):
            raise typer.BadParameter("pass exactly one of --beta or --expr")
        inputs: dict[str, object] = {}
        if expr is not None:
            nwqo = parse_nwqo(expr)
            order_type = otype(nwqo)
            beta = leading_exponent(order_type)
            inputs.update(expr=format_nwqo(nwqo), otype=format_ordinal(order_type))
        else:
            beta = to_cnf(parse_ordinal(beta_text or ""))
        explicit = to_cnf(parse_ordinal(gamma_text)) if gamma_text is not None else None
        gamma = control_level(run.g, explicit)
        inputs.update(beta=format_ordinal(beta), gamma=format_ordinal(gamma))
        classification = classify_complexity(beta, gamma)
        record = build_record(
            "classify", inputs, classification.model_dump(), run.budget, run.config, run.g
        )
        _emit(record, json_output)

    except typer.BadParameter as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_USAGE) from None
    except Exception as e:
        _fail(e)


@app.command("lcs")
def lcs_cmd(
    q: Annotated[int, typer.Argument(help="Number of control states")],
    m: Annotated[int, typer.Argument(help="Message alphabet size")],
    c: Annotated[int, typer.Argument(help="Number of channels")],
    n: Annotated[
        int | None, typer.Option("--n", min=0, help="Norm bound for a numeric M bound")
    ] = None,
    gamma_text: Annotated[
        str | None, typer.Option("--gamma", help="Control level γ; inferred from g if omitted")
    ] = None,
    json_output: JsonOption = False,
    g: ControlOption = None,
    budget_nodes: NodesOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Complexity of lossy channel systems with q states, m letters and c channels."""
    try:
        run = _prepare(config_path, log_level, g, None, budget_nodes, budget_steps, budget_bits)
        shape = LcsShape(q=q, m=m, c=c)
        gamma = to_cnf(parse_ordinal(gamma_text)) if gamma_text is not None else None
        report = lcs_report(shape, run.g, n, run.budget, gamma)
        record = build_record(
            "lcs",
            {**shape.model_dump(), "n": n},
            report.model_dump(mode="json"),
            run.budget,
            run.config,
            run.g,
        )
        _emit(record, json_output)

    except Exception as e:
        _fail(e)


@app.command("pep")
def pep_cmd(
    p: Annotated[int, typer.Argument(help="Alphabet size")],
    copies: Annotated[int, typer.Option("--copies", min=1, help="Copies of the word nwqo")] = 1,
    size: Annotated[
        int, typer.Option("--size", min=0, help="Start argument of L; 0 gives the trivial value")
    ] = 0,
    unbounded: Annotated[
        bool, typer.Option("--unbounded", help="Alphabet is part of the input")
    ] = False,
    gamma_text: Annotated[
        str | None, typer.Option("--gamma", help="Control level γ; inferred from g if omitted")
    ] = None,
    json_output: JsonOption = False,
    g: ControlOption = None,
    budget_nodes: NodesOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Complexity of the Post embedding problem over p letters."""
    try:
        run = _prepare(config_path, log_level, g, None, budget_nodes, budget_steps, budget_bits)
        gamma = to_cnf(parse_ordinal(gamma_text)) if gamma_text is not None else None
        report = pep_report(p, copies, run.g, size, unbounded, run.budget, gamma)
        result = report.model_dump(mode="json")
        result["bound"] = f"H = 2*L_{{G{p}^* * G{copies}}}({size})"
        record = build_record(
            "pep",
            {"p": p, "copies": copies, "size": size, "unbounded": unbounded},
            result,
            run.budget,
            run.config,
            run.g,
        )
        _emit(record, json_output)

    except Exception as e:
        _fail(e)


@app.command("verify")
def verify_cmd(
    suite: Annotated[VerifySuite, typer.Argument(help="Property suite to run")] = VerifySuite.ALL,
    seed: Annotated[int | None, typer.Option("--seed", help="Random seed")] = None,
    samples: Annotated[
        int | None, typer.Option("--samples", min=1, help="Random terms per sampled law")
    ] = None,
    verbose: Annotated[bool, typer.Option("--verbose", help="List every instance")] = False,
    json_output: JsonOption = False,
    budget_nodes: NodesOption = None,
    budget_steps: StepsOption = None,
    budget_bits: BitsOption = None,
    config_path: ConfigOption = None,
    log_level: LogLevelOption = None,
) -> None:
    """Run property suites against the exact oracles.

    Instances that hit a budget ceiling are skipped; any violated
    property makes the command exit with status 1.
    """
    try:
        run = _prepare(config_path, log_level)
        verify_settings = run.settings.verify
        if samples is not None:
            verify_settings = verify_settings.model_copy(update={"samples": samples})
        budget = run.settings.budget.to_budget(
            max_nodes=verify_settings.max_nodes if budget_nodes is None else budget_nodes,
            max_steps=budget_steps,
            max_bits=budget_bits,
        )
        service = VerifyService(verify_settings, budget)

        if json_output:
            report = service.run(suite, seed)
        else:
            with Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
                console=console,
                transient=True,
            ) as progress:
                task: TaskID = progress.add_task("Collecting instances...", total=None)

                def update_progress(current: int, total: int, message: str) -> None:
                    progress.update(
                        task, total=total, completed=current, description=escape(message[:60])
                    )

                report = service.run(suite, seed, progress_callback=update_progress)

        if json_output:
            typer.echo(verify_record(report, budget).to_json())
        else:
            display_verify_report(console, report, verbose)

    except Exception as e:
        _fail(e)

    if not report.ok:
        raise typer.Exit(EXIT_VIOLATION)


# Config subcommands
@config_app.command("init")
def config_init(
    path: Annotated[
        Path | None,
        typer.Option(
            "--path",
            "-p",
            help="Path for config file",
        ),
    ] = None,
    force: Annotated[
        bool,
        typer.Option(
            "--force",
            "-f",
            help="Overwrite existing config file",
        ),
    ] = False,
) -> None:
    """Create a default configuration file."""
    if path is None:
        path = get_default_config_path()

    if path.exists() and not force:
        console.print(f"[yellow]Config file already exists:[/yellow] {path}")
        console.print("Use --force to overwrite.")
        raise typer.Exit(1)

    try:
        created_path = create_default_config(path)
    except OSError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1) from None
    console.print(f"[green]Created config file:[/green] {created_path}")


@config_app.command("show")
def config_show(
    config_path: ConfigOption = None,
) -> None:
    """Show the configuration in effect."""
    try:
        settings = load_settings(config_path)
    except Exception as e:
        _fail(e)

    table = Table(title="Current Configuration")
    table.add_column("Setting", style="cyan")
    table.add_column("Value", style="green")

    table.add_row("Config Path", str(settings.config_path))
    table.add_row("Log Level", settings.log_level)

    table.add_row("Max Nodes", str(settings.budget.max_nodes))
    table.add_row("Max Steps", str(settings.budget.max_steps))
    table.add_row("Max Bits", str(settings.budget.max_bits))

    table.add_row("Omega", settings.hierarchy.omega.value)
    table.add_row("Control", settings.hierarchy.control)

    table.add_row("Verify Seed", str(settings.verify.seed))
    table.add_row("Verify Samples", str(settings.verify.samples))
    table.add_row("Verify Min Completed", str(settings.verify.min_completed))
    table.add_row("Verify Max Nodes", str(settings.verify.max_nodes))

    console.print(table)


@config_app.command("path")
def config_path_cmd() -> None:
    """Show the default config file path."""
    console.print(f"Default config path: {get_default_config_path()}")


if __name__ == "__main__":
    app()
