import pytest

from magma_forge.core.construct import sign_function
from magma_forge.core.groups import cyclic_group
from magma_forge.core.magma import make_magma

# r, p, s, v, l, w -> 0, 1, 2, 3, 4, 3
RPS_ROWS = [
    [0, 1, 0],
    [1, 1, 2],
    [0, 2, 2],
]

FRENCH_ROWS = [
    [0, 1, 0, 3],
    [1, 1, 2, 1],
    [0, 2, 2, 3],
    [3, 1, 3, 3],
]

RPSSL_ROWS = [
    [0, 1, 0, 3, 0],
    [1, 1, 2, 1, 4],
    [0, 2, 2, 3, 2],
    [3, 1, 3, 3, 4],
    [0, 4, 2, 4, 4],
]

B_SIGMA_ROWS = [
    [1, 2, 1],
    [2, 2, 0],
    [1, 0, 0],
]

# f(a, x, y) for a = 0..4, rows x, columns y
TERNARY_SLICES = [
    [[0, 1, 0, 3, 0], [1, 1, 0, 0, 4], [0, 0, 0, 2, 4], [3, 0, 2, 3, 3], [0, 4, 4, 3, 0]],
    [[1, 1, 0, 0, 4], [1, 1, 2, 1, 4], [0, 2, 2, 1, 1], [0, 1, 1, 1, 3], [4, 4, 1, 3, 4]],
    [[0, 0, 0, 2, 4], [0, 2, 2, 1, 1], [0, 2, 2, 3, 2], [2, 1, 3, 3, 2], [4, 1, 2, 2, 2]],
    [[3, 0, 2, 3, 3], [0, 1, 1, 1, 3], [2, 1, 3, 3, 2], [3, 1, 3, 3, 4], [3, 3, 2, 4, 4]],
    [[0, 4, 4, 3, 0], [4, 4, 1, 3, 4], [4, 1, 2, 2, 2], [3, 3, 2, 4, 4], [0, 4, 2, 4, 4]],
]

HEXAGONAL_PYRAMID_ROWS = [
    [0, 1, 0, 3, 4, 0, 0],
    [1, 1, 2, 1, 1, 5, 6],
    [0, 2, 2, 3, 2, 5, 2],
    [3, 1, 3, 3, 4, 3, 6],
    [4, 1, 2, 4, 4, 5, 4],
    [0, 5, 5, 3, 5, 5, 6],
    [0, 6, 2, 6, 4, 6, 6],
]


def _flat(rows):
    return [v for row in rows for v in row]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks that take several seconds")


@pytest.fixture
def rps():
    return make_magma(3, 2, _flat(RPS_ROWS))


@pytest.fixture
def french():
    return make_magma(4, 2, _flat(FRENCH_ROWS))


@pytest.fixture
def rpssl():
    return make_magma(5, 2, _flat(RPSSL_ROWS))


@pytest.fixture
def b_sigma():
    return make_magma(3, 2, _flat(B_SIGMA_ROWS))


@pytest.fixture
def ternary():
    return make_magma(5, 3, [v for piece in TERNARY_SLICES for v in _flat(piece)])


@pytest.fixture
def hexagonal_pyramid():
    return make_magma(7, 2, _flat(HEXAGONAL_PYRAMID_ROWS))


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def z5():
    return cyclic_group(5)


@pytest.fixture
def rps_lambda(z3):
    # the identity beats 2, loses to 1
    return sign_function(z3, 2, [(2,)])


@pytest.fixture
def rpssl_lambda(z5):
    return sign_function(z5, 2, [(4,), (2,)])


@pytest.fixture
def ternary_lambda(z5):
    return sign_function(z5, 3, [(4,), (2,), (1, 2), (1, 3)])
