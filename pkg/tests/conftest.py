import math

import numpy as np
import pytest

from acutesphere import fixtures as fixture_registry
from acutesphere.spherical import from_angles, from_sides


@pytest.fixture(scope="session")
def load():
    return fixture_registry.load


def random_acute_triangle(rng):
    """Uniform-ish acute spherical triangle: angles in (0, pi/2), sum > pi."""
    while True:
        A, B, C = rng.uniform(0.7, math.pi / 2 - 1e-4, size=3)
        if A + B + C > math.pi + 1e-6:
            return from_angles(A, B, C)


def random_triangle(rng):
    """Generic valid spherical triangle from random side lengths."""
    while True:
        a, b, c = rng.uniform(0.15, 2.4, size=3)
        if a + b + c >= 2 * math.pi - 1e-6:
            continue
        if a < b + c - 1e-6 and b < c + a - 1e-6 and c < a + b - 1e-6:
            return from_sides(a, b, c)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
