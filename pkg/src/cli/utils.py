import functools
from pathlib import Path
from typing import List, Optional, Type, TypeVar

import click
from pydantic import BaseModel, ValidationError

from src.common.exceptions import ExteriorAlgebraError, MalformedInputError
from src.common.logger import get_cli_logger
from src.modules.index_calculus.words import Word, parse_word
from src.modules.scalars.rational import Rational, parse_rational

logger = get_cli_logger()

P = TypeVar("P", bound=BaseModel)


def load_payload(path: Path, model: Type[P]) -> P:
    """
    Parse a JSON file into a wire model.

    Raises:
        MalformedInputError: If the file is not valid JSON for the model
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise MalformedInputError(f"Cannot read {path}: {e}")
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise MalformedInputError(
            f"{path} is not a valid {model.__name__}: {e.errors()[0]['msg']}"
        )


def parse_word_option(text: Optional[str]) -> Optional[Word]:
    return None if text is None else parse_word(text)


def parse_point(text: str) -> List[Rational]:
    """Comma-separated rationals, e.g. "1,-1/2,3"."""
    if not text.strip():
        return []
    return [parse_rational(part.strip()) for part in text.split(",")]


def emit(text: str, output: Optional[Path] = None) -> None:
    """Write the whole result at once, so a failure leaves no partial output."""
    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")


def handle_errors(func):
    """
    Map library exceptions onto exit codes; the message goes to standard error.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ExteriorAlgebraError as e:
            logger.debug("%s failed: %s", func.__name__, e.detail)
            click.echo(f"error: {e.detail}", err=True)
            raise click.exceptions.Exit(e.exit_code)
        except ZeroDivisionError as e:
            click.echo(f"error: {e}", err=True)
            raise click.exceptions.Exit(2)

    return wrapper


output_option = click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the result to a file instead of standard output.",
)
