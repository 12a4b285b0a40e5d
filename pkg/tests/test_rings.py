import random

import pytest

from tribrackets.rings import ModulusRing, NonUnitError, RingMismatchError


def test_basic_arithmetic_examples():
    z7 = ModulusRing(7)
    assert (z7.element(2) * z7.element(3)).value == 6
    assert (-z7.element(3)).value == 4
    z5 = ModulusRing(5)
    for x in range(5):
        assert (z5.element(x) + z5.zero()) == z5.element(x)


def test_inverse_examples():
    z7 = ModulusRing(7)
    assert z7.element(5).inv().value == 3
    for n in (2, 3, 5, 6, 7, 12):
        assert ModulusRing(n).one().inv().value == 1
    with pytest.raises(NonUnitError):
        ModulusRing(4).element(2).inv()


def test_pow_examples():
    z7 = ModulusRing(7)
    assert (z7.element(4) ** -2).value == 4
    assert (z7.element(6) ** 2).value == 1
    for n in (5, 6, 7):
        ring = ModulusRing(n)
        for u in ring.units():
            assert (u ** 0).value == 1
    with pytest.raises(NonUnitError):
        ModulusRing(6).element(3) ** -1


def test_is_unit():
    assert ModulusRing(7).element(3).is_unit()
    assert not ModulusRing(5).element(0).is_unit()
    assert not ModulusRing(6).element(4).is_unit()


def test_unit_inverse_property():
    for n in range(2, 13):
        ring = ModulusRing(n)
        for u in ring.units():
            assert (u * u.inv()).value == 1


def test_pow_additivity():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(2, 12)
        ring = ModulusRing(n)
        units = ring.units()
        x = units[rng.randrange(len(units))]
        a, b = rng.randrange(-6, 7), rng.randrange(-6, 7)
        assert (x ** (a + b)) == (x ** a) * (x ** b)


def test_matches_bigint_oracle():
    rng = random.Random(20260808)
    for _ in range(10_000):
        n = rng.randrange(2, 50)
        ring = ModulusRing(n)
        a, b = rng.randrange(10**6), rng.randrange(10**6)
        assert (ring.element(a) + ring.element(b)).value == (a + b) % n
        assert (ring.element(a) * ring.element(b)).value == (a * b) % n
        assert (ring.element(a) - ring.element(b)).value == (a - b) % n


def test_modulus_mismatch_is_checked():
    with pytest.raises(RingMismatchError):
        ModulusRing(5).one() + ModulusRing(7).one()


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        ModulusRing(1)
