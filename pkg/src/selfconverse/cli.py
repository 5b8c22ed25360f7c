"""
Command-line interface for selfconverse.

Standard output carries only JSON, written with a fixed key order and
indentation so repeated runs are byte-identical. Logs, notices and errors
go to stderr. Exit codes: 0 success, 1 infeasible input, 2 parse error,
3 resource cap, 4 internal error.
"""

from __future__ import annotations

import functools
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import click
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from selfconverse import __version__
from selfconverse.core.conditions import check_condition_I
from selfconverse.core.config import ConfigManager, get_settings
from selfconverse.core.converse import find_self_converse_witness
from selfconverse.core.schema import GeneralisedTournament, ScoreSequence
from selfconverse.core.utils.errors import (
    ParseError,
    SelfConverseError,
    print_friendly_error,
)
from selfconverse.oracle.verification import verify_eplett
from selfconverse.realize.approximation import approximate, realize_real
from selfconverse.realize.pipeline import RealizationMethod, realize

logger = logging.getLogger(__name__)

_stderr = Console(stderr=True)


def _setup_logging(level: str) -> None:
    root = logging.getLogger("selfconverse")
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level.upper())


def handle_errors(func: Callable[..., int]) -> Callable[..., None]:
    """Run a command body and turn its return value or error into the exit code."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        ctx = click.get_current_context()
        debug = bool(ctx.find_root().params.get("verbose"))
        try:
            code = func(*args, **kwargs)
        except SelfConverseError as e:
            print_friendly_error(e, debug=debug)
            code = e.exit_code
        except Exception as e:  # noqa: BLE001
            print_friendly_error(e, debug=debug)
            code = 4
        ctx.exit(code)

    return wrapper


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"Cannot read {path}: {e}") from e


def _validation_message(e: ValidationError) -> str:
    return "; ".join(err["msg"] for err in e.errors())


def _load_sequence(path: str, normalize: bool) -> Tuple[ScoreSequence, Optional[Tuple[int, ...]]]:
    data = _read_json(path)
    if isinstance(data, list):
        data = {"scores": data}
    if not isinstance(data, dict) or "scores" not in data:
        raise ParseError(f"{path} must hold a list of scores or an object with a 'scores' key")
    try:
        if normalize:
            raw = data["scores"]
            if "n" in data and data["n"] != len(raw):
                raise ValueError(f"Declared n={data['n']} but scores has {len(raw)} entries")
            return ScoreSequence.normalized(raw)
        return ScoreSequence.model_validate(data), None
    except ValidationError as e:
        raise ParseError(
            f"Invalid score sequence in {path}: {_validation_message(e)}",
            suggestion="Use --normalize to sort unsorted input." if not normalize else None,
        ) from e
    except (ValueError, TypeError) as e:
        raise ParseError(f"Invalid score sequence in {path}: {e}") from e


def _load_tournament(path: str) -> GeneralisedTournament:
    data = _read_json(path)
    if isinstance(data, list):
        data = {"weights": data}
    if not isinstance(data, dict):
        raise ParseError(f"{path} must hold a weight matrix or an object with a 'weights' key")
    try:
        return GeneralisedTournament.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"Invalid tournament in {path}: {_validation_message(e)}") from e


def _emit(doc: Dict[str, Any], output: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.debug(f"Wrote {output}")
    else:
        click.echo(text, nl=False)


def _with_permutation(
    doc: Dict[str, Any], permutation: Optional[Tuple[int, ...]]
) -> Dict[str, Any]:
    if permutation is not None:
        doc["permutation"] = list(permutation)
    return doc


input_argument = click.argument("input_path", metavar="INPUT", type=click.Path(dir_okay=False))
output_option = click.option(
    "--output", "-o", type=click.Path(dir_okay=False, writable=True), help="Write JSON here."
)
normalize_option = click.option(
    "--normalize", is_flag=True, help="Sort unsorted input and report the permutation."
)
cap_option = click.option("--cap", type=click.IntRange(min=1), default=None, help="Vertex cap.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="YAML config."
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging and tracebacks on stderr.")
@click.version_option(__version__, prog_name="selfconverse")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool) -> None:
    """Exact realization of (self-converse) generalised tournament score sequences."""
    manager = ConfigManager()
    if config_path:
        try:
            manager.load(config_path)
        except (yaml.YAMLError, ValidationError, ValueError) as e:
            print_friendly_error(ParseError(f"Invalid config file {config_path}: {e}"))
            ctx.exit(ParseError.exit_code)
    _setup_logging("DEBUG" if verbose else get_settings().log_level)


@cli.command()
@input_argument
@normalize_option
@output_option
@handle_errors
def check(input_path: str, normalize: bool, output: Optional[str]) -> int:
    """Check Conditions I and II; exit 1 if either fails."""
    d, permutation = _load_sequence(input_path, normalize)
    report = check_condition_I(d)
    doc = _with_permutation({"scores": d.to_json_dict()["scores"]}, permutation)
    doc.update(report.to_json_dict())
    _emit(doc, output)
    return 0 if report.ok else 1


@cli.command("realize")
@input_argument
@click.option(
    "--method",
    type=click.Choice([m.value for m in RealizationMethod]),
    default=RealizationMethod.AUTO.value,
    show_default=True,
)
@cap_option
@normalize_option
@output_option
@handle_errors
def realize_cmd(
    input_path: str, method: str, cap: Optional[int], normalize: bool, output: Optional[str]
) -> int:
    """Realize a rational score sequence as a generalised tournament."""
    d, permutation = _load_sequence(input_path, normalize)
    result = realize(d, RealizationMethod(method), cap=cap)
    for notice in result.notices:
        _stderr.print(f"[yellow]Notice[/yellow]: {notice}", highlight=False)
    _emit(_with_permutation(result.to_dict(), permutation), output)
    return 0


@cli.command("approximate")
@input_argument
@click.option("-m", "m", type=click.IntRange(min=1), required=True, help="Accuracy 1/m.")
@normalize_option
@output_option
@handle_errors
def approximate_cmd(input_path: str, m: int, normalize: bool, output: Optional[str]) -> int:
    """Approximate a sequence within 1/m, keeping Conditions I and II exact."""
    d, permutation = _load_sequence(input_path, normalize)
    approx, trace = approximate(d, m)
    doc = approx.to_json_dict()
    doc["trace"] = trace.to_json_dict()
    _emit(_with_permutation(doc, permutation), output)
    return 0


@cli.command("realize-real")
@input_argument
@click.option("-m", "m", type=click.IntRange(min=1), required=True, help="Accuracy 1/m.")
@cap_option
@normalize_option
@output_option
@handle_errors
def realize_real_cmd(
    input_path: str, m: int, cap: Optional[int], normalize: bool, output: Optional[str]
) -> int:
    """Approximate within 1/m, then realize the approximation self-conversely."""
    d, permutation = _load_sequence(input_path, normalize)
    G, rho, approx = realize_real(d, m, cap=cap)
    doc = G.to_json_dict()
    doc["witness"] = rho.to_json_dict()
    doc["approximation"] = approx.to_json_dict()["scores"]
    _emit(_with_permutation(doc, permutation), output)
    return 0


@cli.command()
@input_argument
@cap_option
@output_option
@handle_errors
def witness(input_path: str, cap: Optional[int], output: Optional[str]) -> int:
    """Search for a self-converse witness of a (generalised) tournament."""
    G = _load_tournament(input_path)
    rho = find_self_converse_witness(G, cap=cap)
    _emit({"witness": rho.to_json_dict() if rho is not None else None}, output)
    if rho is None:
        _stderr.print("No self-converse witness exists.", highlight=False)
        return 1
    return 0


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Tournament order.")
@output_option
@handle_errors
def oracle(n: int, output: Optional[str]) -> int:
    """Compare brute force with Conditions I and II on all tournaments of order n."""
    report = verify_eplett(n)
    _emit(report.to_json_dict(), output)
    return 0 if report.equal and report.necessity else 1


def main() -> None:
    cli(prog_name="selfconverse")


if __name__ == "__main__":
    main()
