"""
Command-line interface for bcndata
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import typer
from pydantic import ValidationError as PydanticValidationError
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .cli_helpers import (
    render_analysis, render_synthesis, run_analysis, run_output_regulation, run_safe_control
)
from .config.config_manager import AppConfig, ConfigManager
from .core.exception_handler import (
    EXIT_INPUT_ERROR, EXIT_OK, ErrorFormatter, ExceptionHandler, exit_code_for
)
from .core.exceptions import BCNDataError, ValidationError
from .core.models import AnalysisKind, OutputFormat, RunConfig
from .network.bcn import random_inputs, simulate as simulate_bcn
from .utils.file_formats import dumps, load_model, load_trace, trace_to_dict, write_json

app = typer.Typer(
    name="bcndata",
    help="Data-driven analysis and feedback synthesis for Boolean control networks",
    add_completion=False,
    no_args_is_help=True
)
synthesize_app = typer.Typer(help="Synthesize a state feedback from data", no_args_is_help=True)
app.add_typer(synthesize_app, name="synthesize")

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)


def parse_indices(text: Optional[str], what: str) -> Optional[List[int]]:
    """Parse a comma-separated list of 1-based indices"""
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ValidationError(f"{what} must be comma-separated integers, got {text!r}", what, text)


def setup_logging(config: AppConfig, verbose: bool) -> None:
    level = logging.DEBUG if (verbose or config.debug) else getattr(logging, config.log_level.upper(), logging.WARNING)
    handlers: List[logging.Handler] = [RichHandler(console=err_console, show_path=False)]
    if config.log_file:
        file_handler = logging.FileHandler(config.log_file, encoding='utf-8')
        file_handler.setFormatter(logging.Formatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
        handlers.append(file_handler)
    logging.basicConfig(level=level, format="%(message)s", handlers=handlers, force=True)


def load_settings(config_path: Optional[str], verbose: bool) -> AppConfig:
    config = ConfigManager(config_path).load_config()
    setup_logging(config, verbose)
    return config


def fail(error: Exception, output_format: Optional[OutputFormat] = None) -> None:
    """Report an error and exit with its exit code; JSON output puts the error report on stdout"""
    if isinstance(error, PydanticValidationError):
        first = error.errors()[0]
        field = ".".join(str(part) for part in first.get('loc', ())) or None
        error = ValidationError(first['msg'], field, first.get('input'))

    response = ExceptionHandler(logger).handle_exception(error)
    code = exit_code_for(error) if isinstance(error, BCNDataError) else EXIT_INPUT_ERROR
    if output_format == OutputFormat.JSON:
        typer.echo(dumps(ErrorFormatter.format_for_api(response)))
    elif isinstance(error, BCNDataError):
        err_console.print(f"[red]Error: {ErrorFormatter.format_for_cli(response)}[/red]")
    else:
        err_console.print(f"[red]Unexpected error: {error}[/red]")
    raise typer.Exit(code)


def emit(report: Dict[str, Any], output_format: OutputFormat, out: Optional[Path], indent: int, render) -> None:
    """Write the report to ``out`` as JSON, or print it in the requested format"""
    if out is not None:
        write_json(report, out, indent)
        console.print(f"[green]✓[/green] Report written to {out}")
    elif output_format == OutputFormat.JSON:
        typer.echo(dumps(report, indent))
    else:
        render(console, report)


@app.command()
def version():
    """Show version information"""
    console.print(f"[bold green]bcndata v{__version__}[/bold green]")
    console.print("\n[cyan]Features:[/cyan]")
    console.print("  - Informativity for identification and reachability")
    console.print("  - Data-compatible equilibria, basins and cycles")
    console.print("  - Safe control and output regulation by state feedback")
    console.print("  - Verification against compatible networks")


@app.command()
def init(
    config_path: Optional[str] = typer.Option(None, "--config", "-c", help="Configuration file path"),
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite existing configuration")
):
    """Write the default configuration file"""
    try:
        config_manager = ConfigManager(config_path)

        if Path(config_manager.config_path).exists() and not force:
            console.print(f"[yellow]Configuration file already exists: {config_manager.config_path}[/yellow]")
            console.print("Use --force to overwrite")
            return

        config = config_manager.create_default_config()
        config_manager.save_config(config)
        console.print(f"[green]✓[/green] Configuration initialized: {config_manager.config_path}")

    except BCNDataError as e:
        fail(e)


@app.command()
def simulate(
    model: Path = typer.Argument(..., help="Model file (JSON)"),
    x0: int = typer.Option(..., "--x0", help="Initial state, 1-based"),
    inputs: Optional[str] = typer.Option(None, "--inputs", "-u", help="Comma-separated input sequence"),
    length: Optional[int] = typer.Option(None, "--length", "-n", help="Length of a random input sequence"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the random input sequence"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Trace file to write"),
    config_path: Optional[str] = typer.Option(None, "--config", "-c", help="Configuration file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging")
):
    """Simulate a model and write the trace"""
    try:
        config = load_settings(config_path, verbose)
        run = RunConfig(command="simulate", input_path=model, x0=x0, inputs=parse_indices(inputs, "inputs"),
                        length=length, seed=seed, out=out)

        bcn = load_model(run.input_path)
        schedule = run.inputs if run.inputs is not None else random_inputs(bcn.n_inputs, run.length or 0, run.seed)
        trace = simulate_bcn(bcn, run.x0, schedule)
        data = trace_to_dict(bcn.n_states, bcn.n_inputs, bcn.n_outputs, [trace])

        if run.out is not None:
            write_json(data, run.out, config.output.indent)
            console.print(f"[green]✓[/green] {trace.length} steps written to {run.out}")
        else:
            typer.echo(dumps(data, config.output.indent))

    except (BCNDataError, PydanticValidationError) as e:
        fail(e)


@app.command()
def analyze(
    analysis: AnalysisKind = typer.Argument(..., help="Analysis to run"),
    trace: Path = typer.Argument(..., help="Trace file (JSON)"),
    target: Optional[str] = typer.Option(None, "--target", "-t", help="Comma-separated target states"),
    y_star: Optional[int] = typer.Option(None, "--ystar", "-y", help="Desired output, 1-based"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Report format"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the JSON report to this file"),
    config_path: Optional[str] = typer.Option(None, "--config", "-c", help="Configuration file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging")
):
    """Analyze a trace file"""
    effective_format = output_format
    try:
        config = load_settings(config_path, verbose)
        effective_format = output_format or config.output.format
        run = RunConfig(command="analyze", input_path=trace, analysis=analysis,
                        target=parse_indices(target, "target"), y_star=y_star,
                        output_format=output_format or config.output.format, out=out)

        ds = load_trace(run.input_path, config.analysis.check_consistency)
        report = run_analysis(ds, analysis, run.target, run.y_star, config.analysis.cycle_cap)
        emit(report, run.output_format, run.out, config.output.indent, render_analysis)

    except (BCNDataError, PydanticValidationError) as e:
        fail(e, effective_format)


def _synthesize(command: str, trace: Path, unsafe: Optional[str], y_star: Optional[int],
                verify_budget: Optional[int], seed: Optional[int], output_format: Optional[OutputFormat],
                out: Optional[Path], config_path: Optional[str], verbose: bool) -> None:
    effective_format = output_format
    try:
        config = load_settings(config_path, verbose)
        effective_format = output_format or config.output.format
        if verify_budget is None and config.verification.enabled:
            verify_budget = config.verification.budget
        run = RunConfig(command=command, input_path=trace, unsafe=parse_indices(unsafe, "unsafe"),
                        y_star=y_star, verify_budget=verify_budget,
                        seed=seed if seed is not None else config.verification.seed,
                        output_format=output_format or config.output.format, out=out)

        ds = load_trace(run.input_path, config.analysis.check_consistency)
        if command == "synthesize-safe":
            report, code = run_safe_control(ds, run.unsafe or [], run.verify_budget, run.seed or 0)
        else:
            report, code = run_output_regulation(ds, run.y_star or 0, run.verify_budget, run.seed or 0,
                                                 config.analysis.cycle_cap)
        emit(report, run.output_format, run.out, config.output.indent, render_synthesis)

    except (BCNDataError, PydanticValidationError) as e:
        fail(e, effective_format)
    else:
        if code != EXIT_OK:
            raise typer.Exit(code)


@synthesize_app.command("safe")
def synthesize_safe(
    trace: Path = typer.Argument(..., help="Trace file (JSON)"),
    unsafe: str = typer.Option(..., "--unsafe", help="Comma-separated unsafe states"),
    verify_budget: Optional[int] = typer.Option(None, "--verify", help="Verify on this many compatible models"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Sampling seed for verification"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Report format"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the JSON report to this file"),
    config_path: Optional[str] = typer.Option(None, "--config", "-c", help="Configuration file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging")
):
    """Safe control: keep the safe states safe and steer the unsafe ones into them"""
    _synthesize("synthesize-safe", trace, unsafe, None, verify_budget, seed, output_format, out,
                config_path, verbose)


@synthesize_app.command("regulate")
def synthesize_regulate(
    trace: Path = typer.Argument(..., help="Trace file (JSON)"),
    y_star: int = typer.Option(..., "--ystar", "-y", help="Desired output, 1-based"),
    verify_budget: Optional[int] = typer.Option(None, "--verify", help="Verify on this many compatible models"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Sampling seed for verification"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Report format"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the JSON report to this file"),
    config_path: Optional[str] = typer.Option(None, "--config", "-c", help="Configuration file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging")
):
    """Output regulation: drive the output to y* from every initial state"""
    _synthesize("synthesize-regulate", trace, None, y_star, verify_budget, seed, output_format, out,
                config_path, verbose)


def main():
    """Main entry point"""
    app()


if __name__ == "__main__":
    main()
