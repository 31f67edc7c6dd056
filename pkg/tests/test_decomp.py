import random
from fractions import Fraction

import pytest

from lexpoint import (NothingToDelete, PointSet, PrimeField, Rationals,
                      buchberger_moller, check_deletion_invariants,
                      enumerate_indices, fiber_score, generator_records,
                      minimal_monomial_exponents)
from lexpoint.decomp import record_scores, tilde_block
from conftest import qpoints, random_point_set

Q = Rationals()


def frs(*vals):
    return tuple(Fraction(v) for v in vals)


def test_fiber_score_counts_matching_prefixes(e2):
    sprime = qpoints((0, 0))     # the excess projection at depth 1 of E2
    assert fiber_score(sprime, frs(0, 1, 0)) == 1
    assert fiber_score(sprime, frs(1, 0, 0)) == 0


def test_fiber_score_empty_set():
    empty = PointSet(Q, 2, [])
    assert fiber_score(empty, frs(3, 4, 5)) == 0


def test_enumerate_e1(e1):
    recs = enumerate_indices(e1).records
    assert [r.idx for r in recs] == [(1, 1), (0, 2)]
    assert recs[0].block.points == (frs(1, 0),)
    assert recs[0].s_prime_families[0].points == (frs(0),)
    assert set(recs[1].block.points) == {frs(0, 0), frs(0, 1)}
    assert recs[1].s_prime_families[0].points == ()


def test_enumerate_e2(e2):
    recs = enumerate_indices(e2).records
    assert [r.idx for r in recs] == [(1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert recs[0].block.points == (frs(1, 0, 0),)
    assert recs[1].block.points == (frs(0, 1, 0),)
    assert set(recs[2].block.points) == {frs(0, 0, 0), frs(0, 0, 1)}


def test_enumerate_single_point():
    V = qpoints((2, 3, 5))
    recs = enumerate_indices(V).records
    assert [r.idx for r in recs] == [(0, 0, 1)]
    assert all(not f.points for f in recs[0].s_prime_families)


def test_records_sorted_ascending():
    rng = random.Random(41)
    for _ in range(40):
        n = rng.randrange(2, 5)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 25), pool=3)
        recs = enumerate_indices(V).records
        keys = [r.idx[1:][::-1] for r in recs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


def test_blocks_partition_source():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randrange(2, 6)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 30), pool=3)
        recs = enumerate_indices(V).records
        blocks = [p for r in recs for p in r.block.points]
        assert sorted(blocks) == sorted(V.points)
        assert all(r.block.points for r in recs)


def test_families_split_every_projection():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randrange(2, 5)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 25), pool=3)
        for rec in enumerate_indices(V).records:
            for j in range(1, n):
                s = set(rec.s_families[j - 1].points)
                sp = set(rec.s_prime_families[j - 1].points)
                assert not (s & sp)
                assert s | sp == set(V.project(j).points)
            assert rec.idx[0] == len(rec.s_prime_families[0])


def test_block_membership_characterization():
    rng = random.Random(44)
    for _ in range(40):
        n = rng.randrange(2, 5)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 25), pool=3)
        for rec in enumerate_indices(V).records:
            expect = set(rec.block.points)
            got = set(V.points)
            for j in range(2, n + 1):
                scores = record_scores(V, rec, j)
                got &= {p for p in V.points if scores[p] == rec.idx[j - 1]}
            assert got == expect


def test_tilde_projection_contained_in_slice_projection():
    # the equality claimed for these projections fails in general (see the
    # decisions log); the containment is what the construction relies on
    rng = random.Random(45)
    for _ in range(40):
        n = rng.randrange(2, 5)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 25), pool=3)
        for rec in enumerate_indices(V).records:
            for lv in range(1, n):
                scores = record_scores(V, rec, lv + 1)
                tb = {p[:lv] for p in tilde_block(V, rec, lv + 1)}
                sl = {p[:lv] for p in V.points
                      if scores[p] == rec.idx[lv]}
                assert tb <= sl


def test_deletion_invariants_on_fixtures(e1, e2):
    assert check_deletion_invariants(e1, enumerate_indices(e1)).passed
    assert check_deletion_invariants(e2, enumerate_indices(e2)).passed


def test_deletion_requires_two_records():
    V = qpoints((0, 0), (1, 0), (2, 0))
    dec = enumerate_indices(V)
    assert len(dec.records) == 1
    with pytest.raises(NothingToDelete):
        check_deletion_invariants(V, dec)


def test_deletion_invariants_randomized():
    rng = random.Random(46)
    for _ in range(60):
        n = rng.randrange(2, 6)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(2, 30), pool=3)
        dec = enumerate_indices(V)
        if len(dec.records) <= 1:
            continue
        rep = check_deletion_invariants(V, dec)
        assert rep.passed, rep.failures


def test_minimal_monomials_match_oracle():
    rng = random.Random(47)
    for _ in range(50):
        n = rng.randrange(1, 5)
        V = random_point_set(rng, PrimeField(101), n,
                             rng.randrange(1, 25), pool=3)
        mine = sorted(minimal_monomial_exponents(V))
        oracle = sorted(buchberger_moller(V).leading_monomials())
        assert mine == oracle


def test_generator_records_can_exceed_witnessed_records():
    # a depth-1 column pattern over first coordinate 2 is witnessed by no
    # depth-1 point, so the block enumeration misses index (1, 1, 1)
    V = PointSet(PrimeField(101), 3,
                 [(0, 0, 2), (0, 0, 3), (0, 2, 2), (0, 2, 3), (1, 1, 1),
                  (1, 2, 1), (2, 3, 2), (2, 3, 3), (3, 0, 0), (3, 3, 0)])
    witnessed = {r.idx for r in enumerate_indices(V).records}
    assembled = {r.idx for r in generator_records(V)}
    assert (1, 1, 1) in assembled
    assert (1, 1, 1) not in witnessed
    assert witnessed < assembled
