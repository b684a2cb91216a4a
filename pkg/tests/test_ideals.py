import random

import pytest

from hkdecomp.errors import HomogeneityError, NotMPrimaryError
from hkdecomp.groebner import Ideal
from hkdecomp.ideals import (colength, colon_element, colon_ideal,
                             elt_times_ideal, frobenius_power, h0_annihilator_exponent,
                             h0_length, hilbert_series, ideal_intersection,
                             ideal_product, ideal_sum, irrelevant_ideal,
                             krull_dimension, power_of_irrelevant, principal_ideal,
                             quotient_summary, ring_dimension, saturate_element,
                             saturate_m, unit_ideal, zero_ideal)
from hkdecomp.poly import make_ring, parse_polynomial

from support import (count_standard_monomials, random_homogeneous_ideal,
                     random_homogeneous_poly)

R2 = make_ring(2, ["x", "y"])
X, Y = R2.gens()


def I2(*texts):
    return Ideal(R2, [parse_polynomial(t, R2) for t in texts])


def test_sum_product_scale():
    assert ideal_sum(I2("x"), I2("y")).equals(I2("x", "y"))
    assert elt_times_ideal(X, I2("x", "y")).equals(I2("x^2", "x*y"))
    assert ideal_sum(I2("x"), zero_ideal(R2)).equals(I2("x"))
    assert ideal_product(I2("x"), I2("x", "y")).equals(I2("x^2", "x*y"))


def test_intersection_examples():
    inter = ideal_intersection(I2("x"), I2("y"))
    assert inter.equals(I2("x*y"))
    I = I2("x^2", "x*y")
    assert ideal_intersection(I, I).equals(I)
    assert ideal_intersection(I2("x"), unit_ideal(R2)).equals(I2("x"))


def test_colon_element_examples():
    assert colon_element(I2("x^2", "x*y"), X).equals(I2("x", "y"))
    assert colon_element(I2("x", "y"), R2.one()).equals(I2("x", "y"))
    assert colon_element(I2("x"), Y).equals(I2("x"))


def test_colon_ideal_examples():
    assert colon_ideal(I2("x^2", "x*y"), I2("x", "y")).equals(I2("x"))
    assert colon_ideal(I2("x^2"), unit_ideal(R2)).equals(I2("x^2"))
    # any ideal colon itself contains 1
    assert colon_ideal(I2("x", "y"), I2("x", "y")).is_unit()


def test_saturate_element_examples():
    assert saturate_element(I2("x^2", "x*y"), Y).equals(I2("x"))
    assert saturate_element(I2("x^2", "x*y"), R2.one()).equals(I2("x^2", "x*y"))
    q = 4
    I = Ideal(R2, [X ** (2 * q), (X ** q) * (Y ** q)])
    assert saturate_element(I, X).is_unit()


def test_saturate_m_examples():
    assert saturate_m(I2("x^2", "x*y")).equals(I2("x"))
    assert saturate_m(I2("x^2", "x*y", "y^2")).is_unit()
    assert saturate_m(I2("x")).equals(I2("x"))


def test_frobenius_power_examples():
    assert frobenius_power(I2("x", "y"), 2).equals(I2("x^2", "y^2"))
    R3 = make_ring(3, ["x", "y"])
    I = Ideal(R3, [parse_polynomial("x^2 + y^2", R3), parse_polynomial("x*y", R3)])
    F = frobenius_power(I, 3)
    assert F.equals(Ideal(R3, [parse_polynomial("x^6 + y^6", R3),
                               parse_polynomial("x^3*y^3", R3)]))
    with pytest.raises(ValueError):
        frobenius_power(I2("x"), 6)


def test_frobenius_composition_random():
    rng = random.Random(41)
    checked = 0
    for p in (2, 3, 5):
        ring = make_ring(p, ["x", "y", "z"])
        for _ in range(6):
            I = random_homogeneous_ideal(ring, rng)
            assert frobenius_power(frobenius_power(I, p), p).equals(
                frobenius_power(I, p * p))
            checked += 1
    assert checked >= 18


def test_hilbert_series_examples():
    assert hilbert_series(I2("x", "y")).numerator == (1, -2, 1)  # (1-t)^2
    assert hilbert_series(I2("x^2", "x*y")).numerator == (1, 0, -2, 1)
    assert hilbert_series(unit_ideal(R2)).numerator == ()


def test_hilbert_series_rejects_inhomogeneous():
    with pytest.raises(HomogeneityError):
        hilbert_series(I2("x^2 + y"))


def test_hilbert_series_matches_standard_monomials():
    rng = random.Random(59)
    checked = 0
    for p in (2, 3, 5):
        ring = make_ring(p, ["x", "y", "z"])
        for _ in range(6):
            I = random_homogeneous_ideal(ring, rng)
            series = hilbert_series(I)
            lts = I.basis().leading_monomials()
            maxdeg = max((g.degree() for g in I.generators), default=1)
            for d in range(2 * maxdeg + 3):
                assert series.coefficient(d) == count_standard_monomials(lts, ring.nvars, d)
            checked += 1
    assert checked >= 18


def test_krull_dimension():
    assert krull_dimension(I2("x^2", "x*y")) == 1
    assert krull_dimension(unit_ideal(R2)) is None
    assert krull_dimension(zero_ideal(R2)) == 2
    assert krull_dimension(I2("x^2", "y^2")) == 0


def test_colength_examples():
    assert colength(I2("x", "y")) == 1
    assert colength(I2("x^2", "y^2")) == 4
    assert colength(I2("x^4", "x^2*y^2", "y^4")) == 12
    with pytest.raises(NotMPrimaryError):
        colength(I2("x"))


def test_h0_length_examples():
    assert h0_length(I2("x^2", "x*y")) == 1
    assert h0_length(I2("x")) == 0
    assert h0_length(I2("x^2", "x*y", "y^2")) == 3
    assert h0_length(unit_ideal(R2)) == 0


def test_h0_matches_colength_when_m_primary():
    rng = random.Random(61)
    for _ in range(10):
        ring = make_ring(3, ["x", "y"])
        I = random_homogeneous_ideal(ring, rng)
        if krull_dimension(I) == 0:
            assert h0_length(I) == colength(I)


def test_saturation_invariants_random():
    rng = random.Random(71)
    for p in (2, 3):
        ring = make_ring(p, ["x", "y", "z"])
        for _ in range(5):
            I = random_homogeneous_ideal(ring, rng, max_degree=2)
            sat = saturate_m(I)
            assert all(sat.contains(g) for g in I.all_generators())  # I inside I^sat
            assert saturate_m(sat).equals(sat)  # idempotent
            # some power of m multiplies the saturation back into I
            n = h0_annihilator_exponent(I, sat)
            mpow = power_of_irrelevant(ring, n)
            assert all(I.contains(a * b) for a in mpow.generators for b in sat.generators)
            assert (h0_length(I) == 0) == I.equals(sat)


def test_saturate_element_matches_stabilized_colon():
    rng = random.Random(73)
    ring = make_ring(2, ["x", "y", "z"])
    for _ in range(5):
        I = random_homogeneous_ideal(ring, rng, max_degree=2)
        f = random_homogeneous_poly(ring, 1, rng)
        sat = saturate_element(I, f)
        current = I
        while True:
            nxt = colon_element(current, f)
            if all(current.contains(g) for g in nxt.generators):
                break
            current = nxt
        assert sat.equals(current)
        assert colon_element(sat, f).equals(sat)


def test_quotient_summary_and_ring_dimension():
    summary = quotient_summary(I2("x^2", "y^2"))
    assert summary.mprimary and summary.dimension == 0
    assert summary.series.numerator_at_one() == 0  # numerator vanishes at 1 in positive vars
    assert ring_dimension(R2) == 2
    hyp = make_ring(2, ["x", "y", "z"], quotient=["x^2 + y*z"])
    assert ring_dimension(hyp) == 2


def test_quotient_ring_operations():
    # R = F_2[x,y,z]/(x^2+yz): ideals carry the relation implicitly
    ring = make_ring(2, ["x", "y", "z"], quotient=["x^2 + y*z"])
    x, y, z = ring.gens()
    I = Ideal(ring, [y])
    assert I.contains(x * x)  # x^2 = yz mod the relation, and yz is in (y)
    F = frobenius_power(I, 2)
    assert F.generators == (y * y,)  # relation not raised
    assert F.contains(x * x + y * z)  # the relation sits inside every ideal
    assert not F.contains(x * x)  # but x^2 = yz does not land in (y^2)
    assert krull_dimension(I) == 1


def test_power_of_irrelevant():
    m2 = power_of_irrelevant(R2, 2)
    assert m2.equals(ideal_product(irrelevant_ideal(R2), irrelevant_ideal(R2)))
    assert power_of_irrelevant(R2, 0).is_unit()


def test_annihilator_exponent_values():
    I = I2("x^2", "x*y")
    assert h0_annihilator_exponent(I) == 1  # m * (x) lands in (x^2, xy)
    assert h0_annihilator_exponent(I2("x")) == 0
    q = 2
    Iq = frobenius_power(I, q)
    assert h0_annihilator_exponent(Iq) == 2 * q - 1


def test_colon_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        colon_element(I2("x"), R2.zero())
    with pytest.raises(ZeroDivisionError):
        colon_ideal(I2("x"), zero_ideal(R2))
