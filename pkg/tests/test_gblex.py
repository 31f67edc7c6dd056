import random
from fractions import Fraction

import pytest

from lexpoint import (InputError, NonZeroDimensional, PointSet, Polynomial,
                      PrimeField, Rationals, buchberger_moller,
                      groebner_basis, groebner_tower, is_groebner_basis,
                      reduce_basis, standard_monomials)
from lexpoint.gblex import GroebnerBasis, MINIMAL
from conftest import qpoints, random_point_set

Q = Rationals()


def qpoly(nvars, terms):
    return Polynomial(Q, nvars, {m: Fraction(c) for m, c in terms.items()})


def test_basis_e1(e1):
    gb = groebner_basis(e1)
    assert list(gb.polys) == [
        qpoly(2, {(2, 0): 1, (1, 0): -1}),
        qpoly(2, {(1, 1): 1}),
        qpoly(2, {(0, 2): 1, (1, 1): 1, (0, 1): -1}),
    ]
    assert gb.flavor == "minimal"


def test_basis_e2(e2):
    gb = groebner_basis(e2)
    assert gb.leading_monomials() == [
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert gb.polys[-1] == qpoly(3, {(0, 0, 2): 1, (0, 1, 1): 1,
                                     (0, 0, 1): -1, (1, 1, 1): -1,
                                     (1, 0, 1): 1})


def test_basis_single_point():
    gb = groebner_basis(qpoints((3, 7)))
    assert list(gb.polys) == [qpoly(2, {(1, 0): 1, (0, 0): -3}),
                              qpoly(2, {(0, 1): 1, (0, 0): -7})]


def test_empty_point_set_rejected():
    with pytest.raises(InputError):
        groebner_basis(PointSet(Q, 2, []))


def test_tower_levels_match_projections(e2):
    tower = groebner_tower(e2)
    assert [gb.nvars for gb in tower] == [1, 2, 3]
    assert list(tower[1].polys) == list(groebner_basis(e2.project(2)).polys)


def test_standard_monomials_fixtures(e1, e2):
    assert standard_monomials(groebner_basis(e1)) == [(0, 0), (1, 0), (0, 1)]
    assert standard_monomials(groebner_basis(e2)) == [
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert standard_monomials(groebner_basis(qpoints((1, 2)))) == [(0, 0)]


def test_standard_monomials_require_zero_dimensional():
    gb = GroebnerBasis(2, Q, (qpoly(2, {(1, 0): 1}),), MINIMAL)
    with pytest.raises(NonZeroDimensional):
        standard_monomials(gb)


def test_reduce_basis_e2(e2):
    red = reduce_basis(groebner_basis(e2))
    assert red.polys[-1] == qpoly(3, {(0, 0, 2): 1, (0, 0, 1): -1})
    assert red.flavor == "reduced"


def test_reduce_basis_idempotent(e2):
    red = reduce_basis(groebner_basis(e2))
    assert list(reduce_basis(red).polys) == list(red.polys)


def test_reduce_basis_e1_matches_oracle(e1):
    red = reduce_basis(groebner_basis(e1))
    assert list(red.polys) == [
        qpoly(2, {(2, 0): 1, (1, 0): -1}),
        qpoly(2, {(1, 1): 1}),
        qpoly(2, {(0, 2): 1, (0, 1): -1}),
    ]
    assert list(red.polys) == list(buchberger_moller(e1).polys)


def test_vanishing_and_minimality_random():
    rng = random.Random(71)
    for _ in range(30):
        n = rng.randrange(1, 5)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 25), pool=4)
        gb = groebner_basis(V)
        for g in gb.polys:
            assert g.lc() == V.field.one()
            assert all(not g.evaluate(p) for p in V.points)
        assert len(standard_monomials(gb)) == len(V)
        assert is_groebner_basis(list(gb.polys))


def test_oracle_equivalence_random():
    rng = random.Random(72)
    for _ in range(40):
        n = rng.randrange(1, 5)
        field = rng.choice([PrimeField(101), Q])
        V = random_point_set(rng, field, n, rng.randrange(1, 20), pool=4)
        assert list(reduce_basis(groebner_basis(V)).polys) == \
            list(buchberger_moller(V).polys)


def test_single_block_sets_yield_pure_power():
    # constant fiber depth everywhere: the top-level part of the staircase
    # is a single pure power of the last variable
    rng = random.Random(73)
    for _ in range(20):
        n = rng.randrange(2, 4)
        base = random_point_set(rng, Q, n - 1, rng.randrange(1, 6))
        depth = rng.randrange(1, 4)
        pts = [b + (Fraction(k),) for b in base.points for k in range(depth)]
        V = PointSet(Q, n, pts)
        gb = groebner_basis(V)
        tops = [m for m in gb.leading_monomials() if m[-1] > 0]
        assert tops == [(0,) * (n - 1) + (depth,)]


def test_parallel_jobs_deterministic(e2):
    serial = groebner_basis(e2)
    parallel = groebner_basis(e2, jobs=2)
    assert list(serial.polys) == list(parallel.polys)
