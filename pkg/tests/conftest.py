import random
from fractions import Fraction

import pytest

from mcgorbit import (
    RepTuple,
    SquareMatrix,
    field_new,
    free_shape,
    rational_field,
)


@pytest.fixture
def qq():
    return rational_field()


@pytest.fixture
def qi():
    return field_new([1, 0, 1], var="i")


@pytest.fixture
def potapchik(qq):
    g1 = SquareMatrix.from_rows(qq, [[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    g2 = SquareMatrix.from_rows(qq, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    return RepTuple(free_shape(2), (g1, g2))


def mat(field, rows):
    return SquareMatrix.from_rows(field, rows)


def random_invertible(rng: random.Random, field, r: int, bound: int = 3):
    while True:
        m = SquareMatrix.from_rows(
            field,
            [
                [Fraction(rng.randint(-bound, bound)) for _ in range(r)]
                for _ in range(r)
            ],
        )
        if not m.det().is_zero():
            return m


def random_tuple(rng: random.Random, field, n: int, r: int, bound: int = 3):
    return RepTuple(
        free_shape(n),
        tuple(random_invertible(rng, field, r, bound) for _ in range(n)),
    )
