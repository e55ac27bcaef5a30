"""Command-line interface for Steiner Toolkit."""

import json
import logging
import sys
from functools import partial
from typing import Any, Dict, List, Optional

try:
    import typer
    from rich.console import Console
    from rich.logging import RichHandler
    from rich.traceback import install

    # Install rich traceback handler
    install(show_locals=True)

    app = typer.Typer(
        name="steiner-toolkit",
        help="Exact Steiner distances, Steiner k-diameters and their characterizations",
        add_completion=False,
    )
    console = Console(stderr=True)

    CLI_AVAILABLE = True

except ImportError:
    CLI_AVAILABLE = False
    app = None
    console = None

from .characterization import H3Attachment
from .config import Config
from .exceptions import SteinerToolkitError
from .families import Family, FamilyParams, generate, generate_sweep
from .formats import encode_graph6, read_graph6_stream
from .scan import CHECKS, DEFAULT_KS, METRICS, classify_task, compute_task, run_records, run_verify
from .steiner import steiner_distance_oracle

EXIT_INPUT_ERROR = 2


def _configure_logging(verbose: bool) -> None:
    """Route library logging to stderr through rich."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _handle_error(error: Exception) -> None:
    """Handle and display errors appropriately."""
    if CLI_AVAILABLE and console:
        if isinstance(error, SteinerToolkitError):
            console.print(f"[red]Error:[/red] {error}")
        else:
            console.print(f"[red]Unexpected error:[/red] {error}")
            console.print_exception()
    else:
        print(f"Error: {error}", file=sys.stderr)

    sys.exit(EXIT_INPUT_ERROR)


def _emit(record: Dict[str, Any]) -> None:
    typer.echo(json.dumps(record))


def _parse_ints(text: str, option: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise typer.BadParameter(f"{option} expects comma-separated integers, got {text!r}")


if CLI_AVAILABLE:

    @app.command("compute")
    def compute_command(
        input_file: typer.FileText = typer.Argument(
            "-", errors="replace", help="graph6 stream (default: stdin)"
        ),
        k: int = typer.Option(..., "--k", "-k", help="Subset size"),
        metric: str = typer.Option("sdiam", "--metric", help=f"One of: {', '.join(METRICS)}"),
        method: str = typer.Option("auto", "--method", help="Distance engine: auto, dp or table"),
        jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker processes (defaults to STEINER_JOBS)"),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    ):
        """Compute a Steiner metric for every graph; one JSON line per input line."""
        _configure_logging(verbose)
        if metric not in METRICS:
            console.print(f"[red]Error:[/red] unknown metric {metric!r}")
            raise typer.Exit(EXIT_INPUT_ERROR)
        try:
            config = Config(jobs=jobs)
            task = partial(compute_task, k=k, metric=metric, method=method, config=config)
            failed = False
            for record in run_records(input_file, task, config):
                failed = failed or "error" in record
                _emit(record)
        except SteinerToolkitError as e:
            _handle_error(e)
        if failed:
            raise typer.Exit(EXIT_INPUT_ERROR)

    @app.command("classify")
    def classify_command(
        input_file: typer.FileText = typer.Argument(
            "-", errors="replace", help="graph6 stream (default: stdin)"
        ),
        h3_attachment: H3Attachment = typer.Option(
            H3Attachment.OPPOSITE, "--h3-attachment", help="Reading of the H3 attachment rule"
        ),
        method: str = typer.Option("auto", "--method", help="Distance engine: auto, dp or table"),
        jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker processes (defaults to STEINER_JOBS)"),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    ):
        """Classify every graph against the sdiam4 characterizations."""
        _configure_logging(verbose)
        try:
            config = Config(jobs=jobs)
            task = partial(classify_task, attachment=h3_attachment, method=method, config=config)
            failed = False
            for record in run_records(input_file, task, config):
                failed = failed or "error" in record
                _emit(record)
        except SteinerToolkitError as e:
            _handle_error(e)
        if failed:
            raise typer.Exit(EXIT_INPUT_ERROR)

    @app.command("verify")
    def verify_command(
        input_file: typer.FileText = typer.Argument(
            "-", errors="replace", help="graph6 stream (default: stdin)"
        ),
        which: str = typer.Option(
            "all", "--which", help=f"Check to run: {', '.join(CHECKS)} or all"
        ),
        k: Optional[int] = typer.Option(
            None, "--k", "-k", help="Subset size for lemma1/corollary1/lemma2 (default: 3 and 4)"
        ),
        h3_attachment: H3Attachment = typer.Option(
            H3Attachment.OPPOSITE, "--h3-attachment", help="Reading of the H3 attachment rule"
        ),
        method: str = typer.Option("auto", "--method", help="Distance engine: auto, dp or table"),
        jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker processes (defaults to STEINER_JOBS)"),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    ):
        """Scan a corpus and report every graph where a predicate disagrees with sdiam."""
        _configure_logging(verbose)
        checks = CHECKS if which == "all" else (which,)
        if which != "all" and which not in CHECKS:
            console.print(f"[red]Error:[/red] unknown check {which!r}")
            raise typer.Exit(EXIT_INPUT_ERROR)
        try:
            report = run_verify(
                input_file,
                checks=checks,
                ks=DEFAULT_KS if k is None else (k,),
                attachment=h3_attachment,
                method=method,
                config=Config(jobs=jobs),
                on_counterexample=lambda found: _emit(found.to_dict()),
                on_error=lambda record: console.print(
                    f"[red]Error:[/red] line {record['index']}: {record['error']}"
                ),
            )
        except SteinerToolkitError as e:
            _handle_error(e)
        _emit(report.summary())
        console.print(f"[blue]Elapsed: {report.elapsed:.2f}s[/blue]")
        raise typer.Exit(report.exit_code)

    @app.command("generate")
    def generate_command(
        family: Family = typer.Option(..., "--family", help="Family name"),
        n: int = typer.Option(..., "--n", help="Order of the generated graphs"),
        params: str = typer.Option("0,0,0,0", "--params", help="Parameters a,b,c,d"),
        sweep: bool = typer.Option(False, "--sweep", help="Emit every valid parameter tuple"),
        h3_attachment: H3Attachment = typer.Option(
            H3Attachment.ADJACENT, "--h3-attachment", help="Reading of the H3 attachment rule"
        ),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    ):
        """Emit family members as graph6 lines."""
        _configure_logging(verbose)
        try:
            if sweep:
                for _, graph in generate_sweep(family, n, h3_attachment):
                    typer.echo(encode_graph6(graph))
                return
            values = _parse_ints(params, "--params")
            if len(values) != 4:
                raise typer.BadParameter("--params expects exactly four values a,b,c,d")
            graph = generate(FamilyParams(family, n, *values), h3_attachment)
            typer.echo(encode_graph6(graph))
        except SteinerToolkitError as e:
            _handle_error(e)

    @app.command("oracle")
    def oracle_command(
        graph6: str = typer.Argument(..., help="One graph6 line"),
        terminals: str = typer.Option(..., "--terminals", help="Comma-separated terminal vertices"),
        max_oracle_n: Optional[int] = typer.Option(
            None, "--max-oracle-n", help="Oracle size cap (defaults to STEINER_MAX_ORACLE_N)"
        ),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    ):
        """Brute-force Steiner distance of one terminal set."""
        _configure_logging(verbose)
        vertices = _parse_ints(terminals, "--terminals")
        try:
            decoded = next(read_graph6_stream([graph6]), None)
            if decoded is None:
                raise typer.BadParameter("empty graph6 line")
            graph = decoded[2]
            if isinstance(graph, Exception):
                raise graph
            result = steiner_distance_oracle(graph, vertices, max_oracle_n=max_oracle_n)
            typer.echo("unreachable" if result.value is None else str(result.value))
        except SteinerToolkitError as e:
            _handle_error(e)

    @app.command("corpus")
    def corpus_command(
        n: int = typer.Option(..., "--n", help="Order, 1..7"),
        include_disconnected: bool = typer.Option(
            False, "--all", help="Include disconnected graphs"
        ),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    ):
        """Print every graph of order n from the graph atlas as graph6 lines."""
        _configure_logging(verbose)
        from .corpus import atlas_graphs

        try:
            for graph in atlas_graphs(n, connected_only=not include_disconnected):
                typer.echo(encode_graph6(graph))
        except SteinerToolkitError as e:
            _handle_error(e)

    @app.command("version")
    def version_command():
        """Show version information."""
        from . import __version__

        typer.echo(f"steiner-toolkit version {__version__}")


def main() -> None:
    """Main CLI entry point."""
    if not CLI_AVAILABLE:
        print("Error: CLI dependencies not installed.")
        print("Install with: pip install steiner-toolkit[cli]")
        sys.exit(1)

    app()


if __name__ == "__main__":
    main()
