"""Test `padic_lattice_tool.norms` module.

Authors
-------
    - Mees Fix
"""

from fractions import Fraction

import numpy as np
import pytest

from padic_lattice_tool.errors import InvalidFrameError, InvalidParameterError
from padic_lattice_tool.lattice import (
    random_frame_matrix,
    random_rational,
    random_vector,
    random_weights,
)
from padic_lattice_tool.norms import (
    identity_space,
    make_space,
    norm_eval,
    normValue,
    scale_norm,
)
from padic_lattice_tool.padic_core import add_vectors, identity_matrix, scale_vector


@pytest.mark.parametrize(
    "vector, expected",
    [
        ((1, 0, 0, 0), "2^0"),
        ((1, 2, 0, 0), "2^0"),
        ((2, 8, 16, 16), "2^-1"),
        ((0, 0, 16, 16), "2^-4"),
        ((0, Fraction(1, 4), 0, 0), "2^2"),
        ((0, 0, 0, 0), "0"),
    ],
)
def test_norm_eval_identity_frame(zeta5_space, vector, expected):
    assert str(norm_eval(zeta5_space, vector)) == expected


def test_weighted_norm():
    space = make_space(3, [[1, 0], [0, 1]], ["1/2", "0"])
    assert str(norm_eval(space, (3, 0))) == "3^-1/2"
    assert str(norm_eval(space, (3, 1))) == "3^0"
    assert str(norm_eval(space, (1, 9))) == "3^1/2"


def test_norm_with_frame():
    space = make_space(2, [[1, 1], [0, 1]], [0, 0])
    assert space.frame_coordinates((1, 3)) == (1, 2)
    assert str(norm_eval(space, (1, 3))) == "2^0"
    assert str(norm_eval(space, (2, 2))) == "2^-1"
    assert space.from_frame_coordinates((1, 2)) == (1, 3)


def test_singular_frame():
    with pytest.raises(InvalidFrameError):
        make_space(2, [[1, 2], [2, 4]], [0, 0])


@pytest.mark.parametrize(
    "p, frame, weights",
    [
        (4, [[1]], [0]),
        (2, [[1, 0], [0, 1]], [0]),
        (2, [[1, 0]], [0, 0]),
        (2, [], []),
    ],
)
def test_invalid_space(p, frame, weights):
    with pytest.raises(InvalidParameterError):
        make_space(p, frame, weights)


def test_dimension_mismatch(zeta5_space):
    with pytest.raises(InvalidParameterError):
        norm_eval(zeta5_space, (1, 0))


def test_norm_value_order():
    zero = normValue(2)
    assert zero < normValue(2, -100)
    assert normValue(2, -1) < normValue(2, 0)
    assert normValue(2, Fraction(-1, 2)) > normValue(2, -1)
    assert max([normValue(2, -4), zero, normValue(2, 3)]) == normValue(2, 3)
    assert sorted([normValue(3, 0), normValue(3), normValue(3, -2)]) == [
        normValue(3),
        normValue(3, -2),
        normValue(3, 0),
    ]


def test_norm_values_of_different_primes():
    with pytest.raises(InvalidParameterError):
        normValue(2, 0) < normValue(3, 0)


@pytest.mark.parametrize("text", ["0", "2^0", "2^-3/2", "2^7"])
def test_norm_value_parse(text):
    assert str(normValue.parse(text, 2)) == text


@pytest.mark.parametrize("text", ["3^0", "2^x", "2", "2^0.5"])
def test_norm_value_parse_rejects(text):
    with pytest.raises(InvalidParameterError):
        normValue.parse(text, 2)


def test_scale_norm():
    assert scale_norm(normValue(2, 0), 2, 1) == normValue(2, -1)
    assert scale_norm(normValue(2, 0), 2, -1) == normValue(2, 1)
    assert scale_norm(normValue(2), 2, 5) == normValue(2)
    assert normValue(5, 1).times_abs(Fraction(1, 25)) == normValue(5, 3)
    assert normValue(5, 1).times_abs(0) == normValue(5)
    with pytest.raises(InvalidParameterError):
        scale_norm(normValue(2, 0), 3, 1)


@pytest.mark.parametrize(
    "p, weights, random_frame",
    [
        (2, [0, 0, 0], False),
        (3, [1, "-1/2", 0], False),
        (5, [2, 0, "1/2"], False),
        (2, [0, 0, 0], True),
        (3, [1, "-1/2", 0], True),
        (5, [2, 0, "1/2"], True),
    ],
)
def test_ultrametric_sampling(p, weights, random_frame):
    """Ultrametric inequality, its equality case and the max criterion on samples."""
    rng = np.random.default_rng(p)
    frame = random_frame_matrix(3, rng) if random_frame else identity_matrix(3)
    space = make_space(p, frame, weights)
    for _ in range(1700):
        v = random_vector(space, rng, (-2, 3))
        w = random_vector(space, rng, (-2, 3))
        nv, nw, total = space.norm(v), space.norm(w), space.norm(add_vectors(v, w))

        assert total <= max(nv, nw)
        if nv != nw:
            assert total == max(nv, nw)
        assert (total == max(nv, nw)) == (total >= nv)


def test_normed_space_equality():
    assert identity_space(2, 2) == make_space(2, [[1, 0], [0, 1]], ["0", "0"])
    assert identity_space(2, 2) != identity_space(3, 2)
    assert identity_space(2, 2, [1, 0]) != identity_space(2, 2)


def random_frame_space(seed, n=3):
    """Seeded space with a random frame and half-integer weights."""
    rng = np.random.default_rng(seed)
    p = (2, 3, 5)[seed % 3]
    return make_space(p, random_frame_matrix(n, rng), random_weights(n, "half", rng)), rng


@pytest.mark.parametrize("seed", range(20))
def test_norm_is_multiplicative(seed):
    space, rng = random_frame_space(seed)
    for _ in range(50):
        v = random_vector(space, rng, (-2, 3))
        x = random_rational(space.p, rng, (-3, 3))
        assert norm_eval(space, scale_vector(x, v)) == norm_eval(space, v).times_abs(x)
    assert norm_eval(space, scale_vector(0, v)) == normValue(space.p)


@pytest.mark.parametrize("seed", range(20))
def test_scale_norm_matches_scaled_vector(seed):
    space, rng = random_frame_space(seed)
    p = space.p
    for _ in range(50):
        v = random_vector(space, rng, (-2, 3))
        k = int(rng.integers(-3, 4))
        expected = norm_eval(space, scale_vector(Fraction(p) ** k, v))
        assert scale_norm(norm_eval(space, v), p, k) == expected
