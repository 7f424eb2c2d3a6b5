"""Single-operation commands: read JSON operands, print the exact result."""

from pathlib import Path

import click

from src.cli.schemas import FormPayload, MatrixPayload, MultivectorPayload, TensorPayload
from src.cli.utils import (
    emit,
    handle_errors,
    load_payload,
    output_option,
    parse_point,
    parse_word_option,
)
from src.common.exceptions import DomainError
from src.common.logger import get_cli_logger
from src.modules.determinants.engines import minor
from src.modules.determinants.factory import DeterminantEngineFactory, get_engine
from src.modules.diff_forms.forms import evaluate, exterior_derivative
from src.modules.exterior_algebra.functor import apply_map_graded, exterior_power_map
from src.modules.exterior_algebra.models import Multivector
from src.modules.exterior_algebra.pairing import contract_graded, pair, pair_chains
from src.modules.exterior_algebra.wedge import graded_wedge
from src.modules.index_calculus.words import Combination
from src.modules.scalars.rational import format_rational
from src.modules.tensor_space.operations import alt

logger = get_cli_logger()

input_file = click.Path(exists=True, dir_okay=False, path_type=Path)


@click.command("det")
@click.argument("matrix_file", type=input_file)
@click.option(
    "--method",
    type=click.Choice(sorted(DeterminantEngineFactory.get_supported_engines())),
    default="leibniz",
    show_default=True,
)
@click.option("--rows", default=None, help="Row set for laplace, e.g. 1,2.")
@click.option("--force", is_flag=True, help="Run Leibniz beyond the size limit.")
@output_option
@handle_errors
def det_command(matrix_file, method, rows, force, output):
    """Determinant of a square matrix."""
    matrix = load_payload(matrix_file, MatrixPayload).to_domain()
    config = {}
    if method == "leibniz":
        config["force"] = force
    elif method == "laplace" and rows is not None:
        config["rows"] = parse_word_option(rows)
    elif rows is not None:
        raise DomainError(f"--rows applies to the laplace method, not {method}")
    engine = get_engine(method, config)
    logger.info("det %dx%d via %s", matrix.rows, matrix.cols, method)
    emit(format_rational(engine.compute(matrix)), output)


@click.command("minor")
@click.argument("matrix_file", type=input_file)
@click.option("--rows", required=True, help="Row combination, e.g. 1,3.")
@click.option("--cols", required=True, help="Column combination, e.g. 2,3.")
@output_option
@handle_errors
def minor_command(matrix_file, rows, cols, output):
    """Minor on the given row and column combinations."""
    matrix = load_payload(matrix_file, MatrixPayload).to_domain()
    value = minor(
        matrix,
        Combination(matrix.rows, parse_word_option(rows)),
        Combination(matrix.cols, parse_word_option(cols)),
    )
    emit(format_rational(value), output)


@click.command("compound")
@click.argument("matrix_file", type=input_file)
@click.option("--m", "m", type=int, required=True, help="Grade of the compound.")
@output_option
@handle_errors
def compound_command(matrix_file, m, output):
    """m-th compound matrix (the exterior power of the map)."""
    matrix = load_payload(matrix_file, MatrixPayload).to_domain()
    result = exterior_power_map(matrix, m)
    emit(MatrixPayload.from_domain(result).model_dump_json(), output)


@click.command("apply")
@click.argument("matrix_file", type=input_file)
@click.argument("element_file", type=input_file)
@output_option
@handle_errors
def apply_command(matrix_file, element_file, output):
    """Induced action of a matrix on a multivector, grade by grade."""
    matrix = load_payload(matrix_file, MatrixPayload).to_domain()
    v = load_payload(element_file, MultivectorPayload).to_graded()
    result = apply_map_graded(matrix, v)
    emit(MultivectorPayload.from_domain(result).model_dump_json(), output)


@click.command("wedge")
@click.argument("left_file", type=input_file)
@click.argument("right_file", type=input_file)
@output_option
@handle_errors
def wedge_command(left_file, right_file, output):
    """Exterior product u ^ v of two (possibly mixed-grade) elements."""
    u = load_payload(left_file, MultivectorPayload).to_graded()
    v = load_payload(right_file, MultivectorPayload).to_graded()
    emit(MultivectorPayload.from_domain(graded_wedge(u, v)).model_dump_json(), output)


@click.command("alt")
@click.argument("tensor_file", type=input_file)
@output_option
@handle_errors
def alt_command(tensor_file, output):
    """Alternation projector on a dense tensor."""
    tensor = load_payload(tensor_file, TensorPayload).to_domain()
    emit(TensorPayload.from_domain(alt(tensor)).model_dump_json(), output)


@click.command("pair")
@click.argument("dual_file", type=input_file)
@click.argument("primal_file", type=input_file)
@output_option
@handle_errors
def pair_command(dual_file, primal_file, output):
    """
    Pairing <w, v>. The first file holds dual coordinates; mixed-grade inputs
    pair grade by grade.
    """
    w_payload = load_payload(dual_file, MultivectorPayload)
    v_payload = load_payload(primal_file, MultivectorPayload)
    homogeneous = all(
        payload.is_homogeneous and payload.terms for payload in (w_payload, v_payload)
    )
    if homogeneous:
        value = pair(w_payload.to_multivector(dual=True), v_payload.to_multivector())
    else:
        value = pair_chains(w_payload.to_graded(dual=True), v_payload.to_graded())
    emit(format_rational(value), output)


@click.command("contract")
@click.argument("dual_file", type=input_file)
@click.argument("element_file", type=input_file)
@output_option
@handle_errors
def contract_command(dual_file, element_file, output):
    """Interior product of a grade-1 dual element with an element."""
    x = load_payload(dual_file, MultivectorPayload).to_multivector(dual=True)
    v = load_payload(element_file, MultivectorPayload).to_graded()
    if x.is_zero:
        x = Multivector.zero(x.ambient, 1, dual=True)
    emit(MultivectorPayload.from_domain(contract_graded(x, v)).model_dump_json(), output)


@click.command("d")
@click.argument("form_file", type=input_file)
@click.option(
    "--point", default=None, help="Evaluate the result at a rational point, e.g. 1,1/2."
)
@output_option
@handle_errors
def d_command(form_file, point, output):
    """Exterior derivative of a polynomial form."""
    alpha = load_payload(form_file, FormPayload).to_domain()
    result = exterior_derivative(alpha)
    if point is None:
        emit(FormPayload.from_domain(result).model_dump_json(), output)
    else:
        value = evaluate(result, parse_point(point))
        emit(MultivectorPayload.from_domain(value).model_dump_json(), output)
