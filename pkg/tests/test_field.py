import random
from fractions import Fraction

import pytest

from lexpoint import (DivisionByZero, NonPrimeModulus, PrimeField, Rationals,
                      ScalarParseError, field_from_spec, is_prime,
                      parse_scalar)

Q = Rationals()
F7 = PrimeField(7)


def test_parse_reduces_to_lowest_terms():
    assert parse_scalar("3/6", Q) == Fraction(1, 2)


def test_parse_canonical_residue():
    assert parse_scalar("-1", F7) == 6


def test_parse_zero_normalization():
    a = parse_scalar("0/5", Q)
    assert a == 0 and a.denominator == 1


@pytest.mark.parametrize("text", ["", "x", "1/0", "1.5", "1/2/3"])
def test_parse_rejects_malformed_rationals(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text, Q)


def test_parse_rejects_fraction_over_prime_field():
    with pytest.raises(ScalarParseError):
        parse_scalar("3/4", F7)


def test_invert_rational():
    assert Q.invert(Fraction(1, 2)) == 2


def test_invert_mod_7():
    assert F7.invert(3) == 5
    assert F7.mul(3, F7.invert(3)) == 1


def test_invert_zero_raises():
    with pytest.raises(DivisionByZero):
        Q.invert(Fraction(0))
    with pytest.raises(DivisionByZero):
        F7.invert(0)


def test_nonprime_modulus_rejected():
    for bad in (0, 1, 4, 91, 1_000_000):
        with pytest.raises(NonPrimeModulus):
            PrimeField(bad)


def test_primality_on_known_values():
    primes = [2, 3, 5, 101, 32003, 2**31 - 1]
    composites = [9, 561, 1105, 2**32 - 1]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_field_spec_round_trip():
    for spec in ("Q", "Fp:7", "Fp:32003"):
        assert field_from_spec(spec).spec_string() == spec
    with pytest.raises(ScalarParseError):
        field_from_spec("R")


@pytest.mark.parametrize("field", [Q, F7, PrimeField(32003)],
                         ids=lambda f: f.spec_string())
def test_field_axioms_on_random_triples(field):
    rng = random.Random(2024)
    if field.kind == "Fp":
        draw = lambda: rng.randrange(field.p)
    else:
        draw = lambda: Fraction(rng.randrange(-50, 50),
                                rng.randrange(1, 30))
    one = field.one()
    for _ in range(10_000):
        a, b, c = draw(), draw(), draw()
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(a, field.add(b, c)) == \
            field.add(field.mul(a, b), field.mul(a, c))
        if a:
            assert field.mul(a, field.invert(a)) == one


@pytest.mark.parametrize("field", [Q, F7], ids=lambda f: f.spec_string())
def test_render_parse_round_trip(field):
    rng = random.Random(7)
    for _ in range(500):
        if field.kind == "Fp":
            a = rng.randrange(field.p)
        else:
            a = Fraction(rng.randrange(-99, 100), rng.randrange(1, 40))
        assert parse_scalar(field.render(a), field) == a
