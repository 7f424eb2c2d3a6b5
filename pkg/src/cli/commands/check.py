import click

from src.cli.utils import emit, handle_errors, output_option
from src.common.settings import settings
from src.modules.checks.runner import CheckRunner, SuiteFactory


@click.command("check")
@click.option(
    "--suite",
    type=click.Choice(SuiteFactory.get_supported_suites()),
    default="all",
    show_default=True,
)
@click.option("--n", "n", type=click.IntRange(min=1), default=3, show_default=True)
@click.option(
    "--trials",
    type=click.IntRange(min=1),
    default=lambda: settings.check_default_trials,
    show_default="settings.check_default_trials",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0, max=(1 << 64) - 1),
    default=lambda: settings.check_default_seed,
    show_default="settings.check_default_seed",
)
@output_option
@handle_errors
def check_command(suite, n, trials, seed, output):
    """
    Run property suites on seeded random instances.

    Prints one pass count per property and any counterexamples; exits 1 if
    a property fails. The same arguments always give the same report.
    """
    report = CheckRunner().execute(suite, n, trials, seed)
    emit(report.render(), output)
    if not report.all_passed:
        raise click.exceptions.Exit(1)
