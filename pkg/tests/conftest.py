import random
from pathlib import Path

import pytest

from lexpoint import PointSet, PrimeField, Rationals, load_point_set

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def e1():
    return load_point_set((FIXTURES / "E1.json").read_text())


@pytest.fixture(scope="session")
def e2():
    return load_point_set((FIXTURES / "E2.json").read_text())


def qpoints(*pts):
    """Point set over Q from integer tuples."""
    from fractions import Fraction
    n = len(pts[0])
    return PointSet(Rationals(), n,
                    [tuple(Fraction(c) for c in p) for p in pts])


def fpoints(p, *pts):
    """Point set over GF(p) from integer tuples."""
    field = PrimeField(p)
    n = len(pts[0])
    return PointSet(field, n, [tuple(c % p for c in p_) for p_ in pts])


def random_point_set(rng: random.Random, field, n: int, size: int,
                     pool: int = 0) -> PointSet:
    """Random duplicate-free points with coordinates from a small pool.

    A small pool forces coordinate collisions, which is what makes the fiber
    structure (and hence the basis shape) nontrivial.
    """
    if field.kind == "Fp":
        width = pool or field.p
        draw = lambda: field.from_int(rng.randrange(width))
    else:
        draw = lambda: field.from_int(rng.randrange(-5, 6))
        width = pool or 11
    limit = min(width, 11 if field.kind == "Q" else width) ** n
    target = min(size, limit)
    pts = set()
    while len(pts) < target:
        pts.add(tuple(draw() for _ in range(n)))
    return PointSet(field, n, sorted(pts, key=str))
