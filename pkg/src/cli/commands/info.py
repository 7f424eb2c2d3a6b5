import json

import click

from src.cli.utils import emit, handle_errors, output_option
from src.common.settings import settings
from src.modules.checks.runner import SuiteFactory
from src.modules.determinants.factory import DeterminantEngineFactory


@click.command("info")
@output_option
@handle_errors
def info_command(output):
    """Effective settings, determinant engines and check suites as JSON."""
    payload = {
        "settings": settings.model_dump(mode="json"),
        "determinant_engines": DeterminantEngineFactory.get_supported_engines(),
        "check_suites": SuiteFactory.get_supported_suites(),
    }
    emit(json.dumps(payload, sort_keys=True), output)
