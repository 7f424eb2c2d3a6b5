import json

import pytest

from src.modules.exterior_algebra.models import Matrix
from src.modules.index_calculus.words import Combination


# Matrix fixtures
@pytest.fixture
def matrix_2x2():
    """[[1, 2], [3, 4]], determinant -2"""
    return Matrix.from_rows([[1, 2], [3, 4]])


@pytest.fixture
def matrix_5x5():
    """A fixed integer 5x5 matrix for cross-method agreement"""
    return Matrix.from_rows(
        [
            [2, -1, 0, 3, 1],
            [1, 0, 2, -2, 1],
            [0, 3, 1, 1, -1],
            [-1, 2, 0, 1, 2],
            [3, 1, -1, 0, 1],
        ]
    )


@pytest.fixture
def identity_4():
    return Matrix.identity(4)


@pytest.fixture
def comb():
    """Shorthand: comb(n, 1, 3) -> Combination(n, (1, 3))"""

    def make(n, *word):
        return Combination(n, tuple(word))

    return make


# File fixtures
@pytest.fixture
def write_json(tmp_path):
    """Writes a payload under tmp_path and returns the file path as a string"""

    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
