import click

from src.cli.utils import emit, handle_errors, output_option
from src.common.logger import get_cli_logger
from src.modules.index_calculus.enumeration import (
    iter_combination_words,
    iter_injection_words,
    iter_placement_words,
)
from src.modules.index_calculus.words import format_word

logger = get_cli_logger()

ENUMERATORS = {
    "comb": iter_combination_words,
    "inj": iter_injection_words,
    "place": iter_placement_words,
}


@click.command("enum")
@click.argument("kind", type=click.Choice(sorted(ENUMERATORS)))
@click.option("--n", "n", type=int, required=True, help="Ambient dimension.")
@click.option("--m", "m", type=int, required=True, help="Word length.")
@output_option
@handle_errors
def enum_command(kind, n, m, output):
    """
    List every index word of a family in lexicographic order.

    One comma-separated word per line, then count=<N>.
    """
    logger.info("Enumerating %s words with n=%d m=%d", kind, n, m)
    lines = [format_word(word) for word in ENUMERATORS[kind](n, m)]
    lines.append(f"count={len(lines)}")
    emit("\n".join(lines), output)
