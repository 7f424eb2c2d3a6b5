import click

from src.common.logger import get_cli_logger

from .commands import (
    alt_command,
    apply_command,
    check_command,
    compound_command,
    contract_command,
    d_command,
    det_command,
    enum_command,
    info_command,
    minor_command,
    pair_command,
    wedge_command,
)

logger = get_cli_logger()


@click.group()
@click.version_option(package_name="exterior-algebra", prog_name="extalg")
def cli():
    """
    Exact exterior algebra from the command line.

    Operands are JSON files with rationals written as "p/q" strings; results
    go to standard output, diagnostics to standard error.

    Exit codes: 1 property violation, 2 malformed input or precondition,
    3 dimension mismatch, 4 complexity refusal.
    """


for command in (
    enum_command,
    det_command,
    minor_command,
    compound_command,
    apply_command,
    wedge_command,
    alt_command,
    pair_command,
    contract_command,
    d_command,
    check_command,
    info_command,
):
    cli.add_command(command)


def main():
    logger.debug("extalg starting")
    cli()
