"""Hilbert-Kunz and generalized Hilbert-Kunz series, multiplicity ratio
tables, and the empirical (LC) probe.

The classical series records lengths of quotients by Frobenius powers of
an m-primary ideal; the generalized series records lengths of the
m-torsion of quotients by Frobenius powers of an arbitrary homogeneous
ideal. Ratio tables are exact rationals; no limit is ever claimed.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import HomogeneityError, NotMPrimaryError
from .groebner import Ideal
from .ideals import (colength, frobenius_power, h0_annihilator_exponent,
                     h0_length, krull_dimension, ring_dimension, saturate_m)


@dataclass(frozen=True)
class HKSeries:
    ideal: Ideal
    kind: str  # "classical" | "generalized"
    entries: tuple[tuple[int, int, int], ...]  # (n, q = p^n, value)

    def values(self) -> list[int]:
        return [v for _, _, v in self.entries]


@dataclass(frozen=True)
class LCReport:
    ideal: Ideal
    per_q: tuple[tuple[int, int], ...]  # (q, minimal n with m^n * H0 = 0)
    inferred_N: int
    verdict: str  # "consistent-with-LC" | "violated-in-range"


def default_n_max(p: int) -> int:
    # Frobenius powers scale generator degrees by q; keep q modest for p >= 5
    return 3 if p <= 3 else 2


def _check_proper_homogeneous(I: Ideal):
    if not I.is_homogeneous():
        raise HomogeneityError("a homogeneous ideal is required")
    if I.is_unit():
        raise NotMPrimaryError("the unit ideal is not a proper ideal")


def hk_series(I: Ideal, n_max: int) -> HKSeries:
    """Classical series: length of the quotient by each Frobenius power."""
    if krull_dimension(I) != 0:
        raise NotMPrimaryError(
            "the classical Hilbert-Kunz series needs an m-primary ideal "
            f"(dimension is {krull_dimension(I)})")
    p = I.ring.p
    entries = []
    for n in range(n_max + 1):
        q = p ** n
        entries.append((n, q, colength(frobenius_power(I, q))))
    return HKSeries(I, "classical", tuple(entries))


def ghk_series(I: Ideal, n_max: int) -> HKSeries:
    """Generalized series: length of the m-torsion of each Frobenius quotient."""
    _check_proper_homogeneous(I)
    p = I.ring.p
    entries = []
    for n in range(n_max + 1):
        q = p ** n
        entries.append((n, q, h0_length(frobenius_power(I, q))))
    return HKSeries(I, "generalized", tuple(entries))


def multiplicity_estimate(series: HKSeries) -> list[tuple[int, Fraction]]:
    """Exact ratios value / q^d, d the Krull dimension of the ring.

    This is the finite table feeding the multiplicity; the limit itself
    is not computed.
    """
    if not series.entries:
        raise ValueError("empty series")
    d = ring_dimension(series.ideal.ring)
    return [(n, Fraction(value, q ** d)) for n, q, value in series.entries]


def lc_probe(I: Ideal, n_max: int) -> LCReport:
    """Search, for each q, the least n with m^n annihilating the torsion of
    the Frobenius quotient, and report whether one uniform linear bound
    N*q fits the observed range. The verdict is a finite-range
    observation, never a proof.
    """
    _check_proper_homogeneous(I)
    p = I.ring.p
    per_q = []
    ratios = []
    for n in range(n_max + 1):
        q = p ** n
        J = frobenius_power(I, q)
        n_q = h0_annihilator_exponent(J, saturate_m(J))
        per_q.append((q, n_q))
        ratios.append(-(-n_q // q))  # ceil(n_q / q)
    inferred = max(ratios) if ratios else 0
    if len(ratios) >= 2 and ratios[-1] > max(ratios[:-1]):
        verdict = "violated-in-range"
    else:
        verdict = "consistent-with-LC"
    return LCReport(I, tuple(per_q), inferred, verdict)
