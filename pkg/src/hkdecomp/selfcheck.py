"""Built-in invariant corpus for the `selfcheck` command.

A quick battery of exact identities with known answers; each check
returns pass/fail so a broken build is visible without the test suite.
"""

from .decompose import decompose_dim1, evaluate_combination
from .fields import PrimeField
from .groebner import Ideal, normal_form, s_polynomial
from .hk import ghk_series, lc_probe
from .ideals import h0_length, krull_dimension, saturate_m
from .poly import format_polynomial, make_ring, parse_polynomial


def _check_field_axioms() -> bool:
    for p in (2, 3, 5, 7, 11, 13):
        F = PrimeField(p)
        for a in range(1, p):
            if F.mul(a, F.inv(a)) != 1 or F.pow(a, p - 1) != 1:
                return False
    return True


def _check_frobenius_additivity() -> bool:
    for p in (2, 3):
        R = make_ring(p, ["x", "y"])
        x, y = R.gens()
        f = x + 2 * y + x * y
        g = y * y + x
        if (f + g) ** p != f ** p + g ** p:
            return False
    return True


def _check_parser_roundtrip() -> bool:
    R = make_ring(5, ["x", "y", "z"])
    for text in ("x^2 + 3*x*y + 4", "z^3 + 2*y", "x - y"):
        f = parse_polynomial(text, R)
        if parse_polynomial(format_polynomial(f), R) != f:
            return False
    return True


def _check_groebner_kernel() -> bool:
    R = make_ring(2, ["x", "y"])
    x, y = R.gens()
    I = Ideal(R, [x * x + y * y, x * y])
    gb = I.basis()
    if y ** 3 not in [g for g in gb.elements]:
        if not I.contains(y ** 3):
            return False
    for i, f in enumerate(gb.elements):
        for g in gb.elements[i + 1:]:
            if not normal_form(s_polynomial(f, g, gb.order), gb).is_zero():
                return False
    return True


def _check_saturation_example() -> bool:
    R = make_ring(2, ["x", "y"])
    x, y = R.gens()
    I = Ideal(R, [x * x, x * y])
    return (saturate_m(I).equals(Ideal(R, [x]))
            and krull_dimension(I) == 1
            and h0_length(I) == 1
            and ghk_series(I, 2).values() == [1, 4, 16])


def _check_lc_probe() -> bool:
    R = make_ring(2, ["x", "y"])
    x, y = R.gens()
    report = lc_probe(Ideal(R, [x * x, x * y]), 2)
    return report.per_q == ((1, 1), (2, 3), (4, 7)) and report.inferred_N == 2


def _check_dim1_decomposition() -> bool:
    R = make_ring(2, ["x", "y"])
    x, y = R.gens()
    I = Ideal(R, [x * x, x * y])
    combo, cert = decompose_dim1(I, q_list=[1, 2, 4], rng_seed=0)
    return (cert.passed and sorted(c for c, _ in combo.terms) == [-1, 2]
            and [evaluate_combination(combo, q) for q in (1, 2, 4)] == [1, 4, 16])


_CHECKS = (
    ("prime field axioms (p <= 13, exhaustive)", _check_field_axioms),
    ("characteristic-p binomial identity", _check_frobenius_additivity),
    ("polynomial parse/print round trip", _check_parser_roundtrip),
    ("Groebner basis and S-pair reduction", _check_groebner_kernel),
    ("saturation, dimension, torsion length", _check_saturation_example),
    ("linear torsion bound probe", _check_lc_probe),
    ("dimension-1 decomposition certificate", _check_dim1_decomposition),
)


def run_selfchecks() -> list[dict]:
    results = []
    for name, fn in _CHECKS:
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failure, not an abort
            results.append({"name": name, "pass": False, "error": f"{type(exc).__name__}: {exc}"})
            continue
        results.append({"name": name, "pass": ok})
    return results
