import pytest

from hkdecomp.fields import PrimeField, is_prime


def brute_force_inverse(a, p):
    for b in range(1, p):
        if (a * b) % p == 1:
            return b
    raise AssertionError(f"{a} has no inverse mod {p}")


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for n in range(25):
        assert is_prime(n) == (n in primes)


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_inverse_against_brute_force():
    F = PrimeField(5)
    assert F.inv(2) == brute_force_inverse(2, 5) == 3
    for p in (2, 3, 5, 7, 11, 13):
        F = PrimeField(p)
        for a in range(1, p):
            assert F.inv(a) == brute_force_inverse(a, p)
            assert F.mul(a, F.inv(a)) == 1


def test_characteristic_two_addition():
    F = PrimeField(2)
    assert F.add(1, 1) == 0


def test_pow():
    F = PrimeField(3)
    assert F.pow(2, 3) == 8 % 3 == 2
    assert F.pow(2, -1) == F.inv(2)


def test_fermat_exhaustive():
    for p in (2, 3, 5, 7, 11, 13):
        F = PrimeField(p)
        for a in range(1, p):
            assert F.pow(a, p - 1) == 1


def test_inversion_of_zero_rejected():
    F = PrimeField(7)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.inv(7)


def test_normalization():
    F = PrimeField(5)
    assert F.normalize(-1) == 4
    assert F.sub(1, 3) == 3
    assert F.neg(2) == 3
