"""The `qtangle` command line."""

import logging
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Final, Literal, final

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from qtangle.colorings.coloring_enumerator import count_colorings
from qtangle.colorings.coloring_report import ColoringReport, coloring_report
from qtangle.configuration.qtangle_settings import QtangleSettings, load_settings
from qtangle.constructions.braid_action import braid_action, parse_braid_word
from qtangle.constructions.cables import cable_presentation, satellite
from qtangle.constructions.closures import (
    classical_closure,
    connected_sum,
    periodic_link,
    plat_closure,
)
from qtangle.exceptions import QtangleError
from qtangle.fundamental_quandle import bq
from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.presentation_format import (
    BorderedMorphismDocument,
    PresentationDocument,
    format_bordered_morphism,
    format_presentation,
    parse_presentation,
    presentation_from_json,
    read_presentation_text,
)
from qtangle.presentations.quandle_presentation import QuandlePresentation
from qtangle.presentations.tietze import simplify_morphism, tietze_simplify
from qtangle.quandles.quandle_registry import resolve_quandle
from qtangle.tangles.tangle_diagram import TangleDiagram
from qtangle.tangles.tangle_operations import negate
from qtangle.tangles.tangle_parser import GRAMMAR_SUMMARY, load_tangle
from qtangle.verification.check_result import VerificationReport
from qtangle.verification.suites import run_suite, suite_names

logger = logging.getLogger(__name__)

type OutputFormat = Literal["text", "json"]

PRESENTATION_SUFFIX: Final = ".pres"
JSON_SUFFIX: Final = ".json"
_LOG_LEVELS: Final = (logging.WARNING, logging.INFO, logging.DEBUG)

_input_file = click.Path(exists=True, dir_okay=False, path_type=Path)


@final
@dataclass(frozen=True)
class RunConfig:
    """Settings merged with the global options of one invocation."""

    settings: QtangleSettings
    output_format: OutputFormat

    @property
    def json(self) -> bool:
        return self.output_format == "json"


class ConstructionOutput(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    construction: str
    presentation: PresentationDocument | None = None
    morphism: BorderedMorphismDocument | None = None
    counts: dict[str, int] = Field(default_factory=dict)


class BraidActionOutput(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    strands: int
    word: list[int]
    images: list[str]


pass_config = click.make_pass_decorator(RunConfig)


@click.group()
@click.option(
    "--config-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path(),
    help="Directory holding qtangle.json.",
)
@click.option("-v", "--verbose", count=True, help="Log INFO with -v, DEBUG with -vv.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format.",
)
@click.option("--seed", type=int, default=None, help="Seed of the randomized checks.")
@click.option(
    "--budget",
    type=click.IntRange(min=0),
    default=None,
    help="Tietze elimination budget.",
)
@click.pass_context
def cli(
    ctx: click.Context,
    config_dir: Path,
    verbose: int,
    output_format: OutputFormat,
    seed: int | None,
    budget: int | None,
) -> None:
    """Fundamental quandles of oriented tangles."""
    logging.basicConfig(
        level=_LOG_LEVELS[min(verbose, len(_LOG_LEVELS) - 1)],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    overrides = {
        key: value
        for key, value in (("seed", seed), ("simplification_budget", budget))
        if value is not None
    }

    try:
        settings = load_settings(config_dir).model_copy(update=overrides)
    except ValidationError as error:
        error_message = (
            f"Invalid configuration in {config_dir}: {error.error_count()} errors"
        )
        raise click.ClickException(error_message) from error
    except ValueError as error:
        error_message = f"Invalid configuration in {config_dir}: {error}"
        raise click.ClickException(error_message) from error

    ctx.obj = RunConfig(settings, output_format)


@cli.command()
@click.argument("path", type=_input_file)
@pass_config
def present(config: RunConfig, path: Path) -> None:
    """Print the presentation of a tangle file with its boundary maps."""
    _echo_morphism(config, bq(load_tangle(path)))


@cli.command()
@click.argument("path", type=_input_file)
@pass_config
def simplify(config: RunConfig, path: Path) -> None:
    """Simplify a tangle presentation (boundary images kept) or a presentation file."""
    budget = config.settings.simplification_budget

    if path.suffix in {PRESENTATION_SUFFIX, JSON_SUFFIX}:
        result = tietze_simplify(_read_presentation(path), budget=budget)
        _echo_presentation(config, result.presentation)
        return

    _echo_morphism(config, simplify_morphism(bq(load_tangle(path)), budget))


@cli.command()
@click.argument("path", type=_input_file)
@click.option(
    "--quandle",
    "quandle_spec",
    default=None,
    help="dihedral:n, conj-sym3 or a table file.",
)
@click.option(
    "--limit",
    type=click.IntRange(min=1),
    default=None,
    help="Stop after this many colorings.",
)
@click.option(
    "--max-listed",
    type=click.IntRange(min=0),
    default=None,
    help="List colorings up to this count.",
)
@pass_config
def color(
    config: RunConfig,
    path: Path,
    quandle_spec: str | None,
    limit: int | None,
    max_listed: int | None,
) -> None:
    """Count and list the colorings of a tangle or presentation file."""
    settings = config.settings
    report = coloring_report(
        _read_presentation(path),
        resolve_quandle(quandle_spec or settings.default_quandle),
        limit if limit is not None else settings.enumeration_limit,
        max_listed if max_listed is not None else settings.listing_threshold,
    )
    _echo_report(config, report)


@cli.group()
def construct() -> None:
    """Build the presentation of a closed link or a cable."""


_quandle_option = click.option(
    "--quandle",
    "quandle_specs",
    multiple=True,
    help="Also count colorings by this quandle.",
)


@construct.command()
@click.argument("path", type=_input_file)
@_quandle_option
@pass_config
def closure(config: RunConfig, path: Path, quandle_specs: Sequence[str]) -> None:
    """Classical closure of a (φ, φ)-tangle."""
    presentation = classical_closure(
        bq(load_tangle(path)), budget=config.settings.simplification_budget
    )
    _echo_construction(config, "closure", presentation, quandle_specs)


@construct.command()
@click.argument("path", type=_input_file)
@_quandle_option
@pass_config
def plat(config: RunConfig, path: Path, quandle_specs: Sequence[str]) -> None:
    """Plat closure of a tangle."""
    presentation = plat_closure(
        bq(load_tangle(path)), budget=config.settings.simplification_budget
    )
    _echo_construction(config, "plat", presentation, quandle_specs)


@construct.command()
@click.argument("path", type=_input_file)
@click.option(
    "--p",
    "period",
    type=click.IntRange(min=1),
    required=True,
    help="Number of copies.",
)
@_quandle_option
@pass_config
def periodic(
    config: RunConfig, path: Path, period: int, quandle_specs: Sequence[str]
) -> None:
    """Closure of `p` stacked copies of a tangle."""
    presentation = periodic_link(
        bq(load_tangle(path)), period, budget=config.settings.simplification_budget
    )
    _echo_construction(config, "periodic", presentation, quandle_specs)


@construct.command(name="sum")
@click.argument("first_path", type=_input_file)
@click.argument("second_path", type=_input_file)
@_quandle_option
@pass_config
def connected_sum_command(
    config: RunConfig, first_path: Path, second_path: Path, quandle_specs: Sequence[str]
) -> None:
    """Connected sum of the knots closing two (1,1)-tangles."""
    first = _oriented(load_tangle(first_path), -1)
    second = _oriented(load_tangle(second_path), 1)
    presentation = connected_sum(
        bq(first), bq(second), budget=config.settings.simplification_budget
    )
    _echo_construction(config, "sum", presentation, quandle_specs)


@construct.command()
@click.argument("path", type=_input_file)
@click.option("--epsilon", required=True, help="Copy orientations, e.g. '+,-'.")
@_quandle_option
@pass_config
def cable(
    config: RunConfig, path: Path, epsilon: str, quandle_specs: Sequence[str]
) -> None:
    """Cable a tangle, one copy per sign of epsilon."""
    morphism = cable_presentation(bq(load_tangle(path)), _parse_epsilon(epsilon))
    counts = _counts(morphism.presentation, quandle_specs)

    if config.json:
        output = ConstructionOutput(
            construction="cable",
            morphism=BorderedMorphismDocument.from_morphism(morphism),
            counts=counts,
        )
        click.echo(output.model_dump_json(indent=2))
        return

    click.echo(format_bordered_morphism(morphism) + _counts_text(counts), nl=False)


@construct.command(name="satellite")
@click.argument("embellishment_path", type=_input_file)
@click.argument("companion_path", type=_input_file)
@click.option(
    "--epsilon",
    required=True,
    help="Orientations of the companion copies, e.g. '+,-'.",
)
@_quandle_option
@pass_config
def satellite_command(
    config: RunConfig,
    embellishment_path: Path,
    companion_path: Path,
    epsilon: str,
    quandle_specs: Sequence[str],
) -> None:
    """Satellite of a pattern tangle around the knot closing a (1,1)-tangle."""
    presentation = satellite(
        bq(load_tangle(embellishment_path)),
        bq(load_tangle(companion_path)),
        _parse_epsilon(epsilon),
        budget=config.settings.simplification_budget,
    )
    _echo_construction(config, "satellite", presentation, quandle_specs)


@cli.command(name="braid-action")
@click.argument("word")
@click.argument("strands", type=click.IntRange(min=1))
@pass_config
def braid_action_command(config: RunConfig, word: str, strands: int) -> None:
    """Print the free quandle automorphism of a braid word such as '1 -2 1'."""
    try:
        letters = parse_braid_word(word)
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint="WORD") from error

    automorphism = braid_action(letters, strands)

    if config.json:
        output = BraidActionOutput(
            strands=strands,
            word=list(letters),
            images=[str(image) for image in automorphism.images],
        )
        click.echo(output.model_dump_json(indent=2))
        return

    click.echo(str(automorphism))


@cli.command()
@click.argument("suite", type=click.Choice(suite_names()))
@pass_config
def verify(config: RunConfig, suite: str) -> None:
    """Run a verification suite and report every check; exit 1 when one fails."""
    report = VerificationReport.build(suite, run_suite(suite, config.settings))
    _echo_report(config, report)

    if not report.all_passed:
        click.get_current_context().exit(1)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code.

    0 on success, 1 when a computation fails, 2 on a usage error (the tangle
    grammar is printed on stderr).
    """
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="qtangle",
            standalone_mode=False,
        )
    except click.UsageError as error:
        error.show()
        click.echo(GRAMMAR_SUMMARY, err=True)
        return 2
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except QtangleError as error:
        logger.debug("Command failed", exc_info=error)
        click.echo(f"Error: {error}", err=True)
        return 1

    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())


def _read_presentation(path: Path) -> QuandlePresentation:
    if path.suffix == PRESENTATION_SUFFIX:
        return parse_presentation(read_presentation_text(path))

    if path.suffix == JSON_SUFFIX:
        return presentation_from_json(read_presentation_text(path))

    return bq(load_tangle(path)).presentation


def _oriented(diagram: TangleDiagram, sign: int) -> TangleDiagram:
    """Orient a (1,1)-tangle so both ends carry `sign`."""
    return negate(diagram) if diagram.bottom.signs == (-sign,) else diagram


def _parse_epsilon(text: str) -> tuple[int, ...]:
    signs = {"+": 1, "-": -1, "1": 1, "-1": -1, "+1": 1}
    letters = [letter.strip() for letter in text.split(",")]

    if not letters or any(letter not in signs for letter in letters):
        error_message = f"Expected comma-separated signs such as '+,-', got '{text}'"
        raise click.BadParameter(error_message, param_hint="--epsilon")

    return tuple(signs[letter] for letter in letters)


def _counts(
    presentation: QuandlePresentation, quandle_specs: Sequence[str]
) -> dict[str, int]:
    counts: dict[str, int] = {}

    for spec in quandle_specs:
        quandle = resolve_quandle(spec)
        counts[quandle.name] = count_colorings(presentation, quandle)

    return counts


def _counts_text(counts: dict[str, int]) -> str:
    return "".join(f"count {name}: {count}\n" for name, count in counts.items())


def _echo_report(
    config: RunConfig, report: ColoringReport | VerificationReport
) -> None:
    if config.json:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(report.to_text(), nl=False)


def _echo_morphism(config: RunConfig, morphism: BorderedMorphism) -> None:
    if config.json:
        document = BorderedMorphismDocument.from_morphism(morphism)
        click.echo(document.model_dump_json(indent=2))
    else:
        click.echo(format_bordered_morphism(morphism), nl=False)


def _echo_presentation(config: RunConfig, presentation: QuandlePresentation) -> None:
    if config.json:
        document = PresentationDocument.from_presentation(presentation)
        click.echo(document.model_dump_json(indent=2))
    else:
        click.echo(format_presentation(presentation), nl=False)


def _echo_construction(
    config: RunConfig,
    construction: str,
    presentation: QuandlePresentation,
    quandle_specs: Sequence[str],
) -> None:
    counts = _counts(presentation, quandle_specs)

    if config.json:
        output = ConstructionOutput(
            construction=construction,
            presentation=PresentationDocument.from_presentation(presentation),
            counts=counts,
        )
        click.echo(output.model_dump_json(indent=2))
        return

    click.echo(format_presentation(presentation) + _counts_text(counts), nl=False)
