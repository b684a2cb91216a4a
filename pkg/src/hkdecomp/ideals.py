"""Ideal-theoretic calculus: sums, intersections, colons, saturations,
Frobenius powers, Hilbert series, dimension, and graded lengths.

All length computations go through Hilbert series numerators, which keeps
them exact and terminating: for a homogeneous ideal I in an n-variable
ring, HS(S/I) = N(t)/(1-t)^n with N computed from the leading-term
monomial ideal by the standard pivot splitting recursion.
"""

import itertools
from dataclasses import dataclass
from math import comb

from .errors import (BudgetExceededError, HomogeneityError, InternalError,
                     NotMPrimaryError)
from .groebner import Ideal, buchberger, exact_quotient
from .orders import EliminationOrder
from .poly import Monomial, Polynomial, Ring, is_power_of, mon_degree


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ())


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, (ring.one(),))


def principal_ideal(f: Polynomial) -> Ideal:
    return Ideal(f.ring, (f,))


def irrelevant_ideal(ring: Ring) -> Ideal:
    """The ideal generated by all variables (the graded maximal ideal)."""
    return Ideal(ring, tuple(ring.gens()))


def power_of_irrelevant(ring: Ring, n: int) -> Ideal:
    """The n-th power of the irrelevant ideal: all monomials of degree n."""
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return unit_ideal(ring)
    gens = []
    for combo in itertools.combinations_with_replacement(range(ring.nvars), n):
        exps = [0] * ring.nvars
        for i in combo:
            exps[i] += 1
        gens.append(Polynomial(ring, {tuple(exps): 1}))
    return Ideal(ring, gens)


def _same_ring(I: Ideal, J: Ideal) -> Ring:
    if I.ring is not J.ring:
        raise ValueError("ideals over different rings")
    return I.ring


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    return Ideal(ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    return Ideal(ring, tuple(g * h for g in I.generators for h in J.generators))


def elt_times_ideal(x: Polynomial, K: Ideal) -> Ideal:
    if x.ring is not K.ring:
        raise ValueError("element and ideal over different rings")
    return Ideal(K.ring, tuple(x * g for g in K.generators))


def _fresh_var_name(ring: Ring) -> str:
    for i in itertools.count():
        name = f"t{i}"
        if name not in ring.variables:
            return name


def _lift(f: Polynomial, ext: Ring) -> Polynomial:
    return Polynomial(ext, {(0,) + m: c for m, c in f.terms.items()})


def _drop_first(f: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m[1:]: c for m, c in f.terms.items()})


def _eliminate_auxiliary(ring: Ring, big_gens: list[Polynomial], ext: Ring) -> list[Polynomial]:
    gb = buchberger(big_gens, EliminationOrder(1))
    kept = [g for g in gb if all(m[0] == 0 for m in g.terms)]
    return [_drop_first(g, ring) for g in kept]


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I n J via the auxiliary-variable trick: eliminate t from tI + (1-t)J."""
    ring = _same_ring(I, J)
    ext = Ring(ring.p, (_fresh_var_name(ring),) + ring.variables)
    t = ext.variable(ext.variables[0])
    one_minus_t = ext.one() - t
    big = [t * _lift(g, ext) for g in I.all_generators()]
    big += [one_minus_t * _lift(g, ext) for g in J.all_generators()]
    if not big:
        return zero_ideal(ring)
    return Ideal(ring, _eliminate_auxiliary(ring, big, ext))


def colon_element(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : g*f in I}, via I n (f) divided exactly by f.

    The intersection uses the plain ambient principal ideal (f), not the
    quotient-ring ideal, so every computed generator is a true multiple
    of f.
    """
    if f.is_zero():
        raise ZeroDivisionError("colon by the zero element")
    if f.ring is not I.ring:
        raise ValueError("element and ideal over different rings")
    ring = I.ring
    ext = Ring(ring.p, (_fresh_var_name(ring),) + ring.variables)
    t = ext.variable(ext.variables[0])
    big = [t * _lift(g, ext) for g in I.all_generators()]
    big.append((ext.one() - t) * _lift(f, ext))
    inter = _eliminate_auxiliary(ring, big, ext)
    quotients = []
    for g in inter:
        try:
            quotients.append(exact_quotient(g, f))
        except ValueError as exc:
            raise InternalError(
                f"generator {g} of I n (f) is not divisible by {f}") from exc
    return Ideal(ring, quotients)


def colon_ideal(I: Ideal, K: Ideal) -> Ideal:
    """(I : K) as the intersection of (I : k) over the generators k of K."""
    gens = [k for k in K.generators if not k.is_zero()]
    if not gens:
        raise ZeroDivisionError("colon by the zero ideal")
    result = colon_element(I, gens[0])
    for k in gens[1:]:
        result = ideal_intersection(result, colon_element(I, k))
    return result


_SATURATION_STEP_CAP = 10_000


def saturate_element(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^infinity): iterate (.. : f) until one step is a fixed point."""
    if f.is_zero():
        raise ZeroDivisionError("saturation by the zero element")
    current = I
    for _ in range(_SATURATION_STEP_CAP):
        nxt = colon_element(current, f)
        # current is always contained in the colon, so one inclusion suffices
        if all(current.contains(g) for g in nxt.generators):
            return current
        current = nxt
    raise BudgetExceededError("element saturation did not stabilize")


def saturate_m(I: Ideal) -> Ideal:
    """Saturation at the irrelevant maximal ideal.

    For homogeneous I this is the intersection of the saturations at the
    individual variables. Cached on the ideal.
    """
    cached = I.cache.get("saturation")
    if cached is not None:
        return cached
    ring = I.ring
    result = None
    for name in ring.variables:
        part = saturate_element(I, ring.variable(name))
        result = part if result is None else ideal_intersection(result, part)
    if result is None:
        result = I
    I.cache["saturation"] = result
    return result


def frobenius_power(I: Ideal, q: int) -> Ideal:
    """The ideal of q-th powers of the listed generators, q a power of p.

    The defining relations of a quotient ring stay unraised; Frobenius on
    R = S/D fixes the presentation ideal.
    """
    if not is_power_of(q, I.ring.p):
        raise ValueError(f"{q} is not a power of the characteristic {I.ring.p}")
    if q == 1:
        return I
    return Ideal(I.ring, tuple(g.frobenius(q) for g in I.generators))


@dataclass(frozen=True)
class HilbertSeries:
    """HS(S/I) = numerator(t) / (1-t)^ambient_dim, exact integer data."""

    numerator: tuple[int, ...]
    ambient_dim: int

    def coefficient(self, d: int) -> int:
        """Hilbert function value: dim of the degree-d graded piece."""
        n = self.ambient_dim
        total = 0
        for i, c in enumerate(self.numerator):
            if c and d - i >= 0:
                total += c * comb(d - i + n - 1, n - 1) if n > 0 else (c if d == i else 0)
        return total

    def numerator_at_one(self) -> int:
        return sum(self.numerator)


def _poly_trim(a: list[int]) -> tuple[int, ...]:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _poly_add_shifted(a: list[int], b, shift: int, sign: int = 1) -> None:
    if len(a) < len(b) + shift:
        a.extend([0] * (len(b) + shift - len(a)))
    for i, c in enumerate(b):
        a[i + shift] += sign * c


def divide_one_minus_t(coeffs) -> tuple[int, ...] | None:
    """Quotient of an integer polynomial by (1 - t), or None if inexact."""
    acc = 0
    out = []
    for c in coeffs:
        acc += c
        out.append(acc)
    if acc != 0:
        return None
    return _poly_trim(out[:-1])


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=lambda m: (mon_degree(m), m))
    minimal: list[Monomial] = []
    for m in gens:
        if not any(all(x <= y for x, y in zip(g, m)) for g in minimal):
            minimal.append(m)
    return minimal


def _monomial_numerator(gens: list[Monomial], nvars: int, memo: dict) -> tuple[int, ...]:
    """Hilbert numerator of a monomial ideal by pivot splitting.

    N(I) = N(I + (x)) + t * N(I : x) for a pivot variable x, with the
    coprime product formula as the base case.
    """
    key = tuple(gens)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not gens:
        result = (1,)
    elif any(mon_degree(g) == 0 for g in gens):
        result = ()
    else:
        support_counts = [0] * nvars
        for g in gens:
            for i, e in enumerate(g):
                if e > 0:
                    support_counts[i] += 1
        pivot = max(range(nvars), key=lambda i: support_counts[i])
        if support_counts[pivot] <= 1:
            # pairwise coprime generators: N = prod (1 - t^deg)
            acc = [1]
            for g in gens:
                d = mon_degree(g)
                nxt = [0] * (len(acc) + d)
                for i, c in enumerate(acc):
                    nxt[i] += c
                    nxt[i + d] -= c
                acc = nxt
            result = _poly_trim(acc)
        else:
            e_piv = tuple(1 if i == pivot else 0 for i in range(nvars))
            left = [g for g in gens if g[pivot] == 0] + [e_piv]
            right = _minimalize(
                [tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(g)) for g in gens])
            nl = _monomial_numerator(_minimalize(left), nvars, memo)
            nr = _monomial_numerator(right, nvars, memo)
            acc = list(nl)
            _poly_add_shifted(acc, nr, 1)
            result = _poly_trim(acc)
    memo[key] = result
    return result


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Hilbert series numerator of the graded quotient by a homogeneous ideal."""
    cached = I.cache.get("hilbert")
    if cached is not None:
        return cached
    if not I.is_homogeneous():
        raise HomogeneityError("Hilbert series requires a homogeneous ideal")
    lts = _minimalize(I.basis().leading_monomials())
    numerator = _monomial_numerator(lts, I.ring.nvars, {})
    series = HilbertSeries(numerator, I.ring.nvars)
    I.cache["hilbert"] = series
    return series


def krull_dimension(I: Ideal) -> int | None:
    """Dimension of the graded quotient; None for the unit ideal (empty scheme)."""
    cached = I.cache.get("dimension", "missing")
    if cached != "missing":
        return cached
    series = hilbert_series(I)
    coeffs = series.numerator
    if not coeffs:
        dim = None
    else:
        k = 0
        while True:
            reduced = divide_one_minus_t(coeffs)
            if reduced is None:
                break
            coeffs = reduced
            k += 1
        dim = series.ambient_dim - k
    I.cache["dimension"] = dim
    return dim


def is_m_primary(I: Ideal) -> bool:
    return krull_dimension(I) == 0


def colength(I: Ideal) -> int:
    """Vector-space dimension of the quotient; only for m-primary ideals."""
    if krull_dimension(I) != 0:
        raise NotMPrimaryError(f"{I!r} is not m-primary (dimension {krull_dimension(I)})")
    coeffs = hilbert_series(I).numerator
    for _ in range(I.ring.nvars):
        reduced = divide_one_minus_t(coeffs)
        if reduced is None:
            raise InternalError("numerator of an m-primary quotient must be divisible by (1-t)^n")
        coeffs = reduced
    return sum(coeffs)


def h0_torsion_series(I: Ideal) -> tuple[int, ...]:
    """Graded dimensions of the m-torsion submodule of the quotient.

    Computed as (N_I - N_sat)/(1-t)^n, which is a polynomial with
    non-negative coefficients exactly because the torsion module
    I^sat / I has finite length.
    """
    sat = saturate_m(I)
    diff = list(hilbert_series(I).numerator)
    _poly_add_shifted(diff, hilbert_series(sat).numerator, 0, sign=-1)
    coeffs = _poly_trim(diff)
    for _ in range(I.ring.nvars):
        reduced = divide_one_minus_t(coeffs)
        if reduced is None:
            raise InternalError("torsion series is not a polynomial; saturation is wrong")
        coeffs = reduced
    if any(c < 0 for c in coeffs):
        raise InternalError("torsion series has a negative coefficient; saturation is wrong")
    return coeffs


def h0_length(I: Ideal) -> int:
    """Length of the m-torsion of the quotient (zero iff I is saturated)."""
    return sum(h0_torsion_series(I))


@dataclass(frozen=True)
class GradedQuotientSummary:
    ideal: Ideal
    dimension: int | None
    mprimary: bool
    series: HilbertSeries


def quotient_summary(I: Ideal) -> GradedQuotientSummary:
    dim = krull_dimension(I)
    return GradedQuotientSummary(I, dim, dim == 0, hilbert_series(I))


def ring_dimension(ring: Ring) -> int:
    """Krull dimension of the ring itself (the zero ideal's quotient)."""
    dim = krull_dimension(zero_ideal(ring))
    if dim is None:
        raise InternalError("ring presented by a unit defining ideal")
    return dim


def contains_ideal(I: Ideal, J: Ideal) -> bool:
    """True when J is a subideal of I."""
    return all(I.contains(g) for g in J.all_generators())


def h0_annihilator_exponent(I: Ideal, saturation: Ideal | None = None, cap: int = 100_000) -> int:
    """Minimal n with m^n * I^sat contained in I (zero when I is saturated)."""
    sat = saturation if saturation is not None else saturate_m(I)
    ring = I.ring

    def kills(n: int) -> bool:
        mpow = power_of_irrelevant(ring, n)
        return all(I.contains(a * b) for a in mpow.generators for b in sat.generators)

    if all(I.contains(g) for g in sat.generators):
        return 0
    hi = 1
    while not kills(hi):
        hi *= 2
        if hi > cap:
            raise InternalError("annihilator exponent search exceeded its cap")
    lo = hi // 2  # kills(lo) is False (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if kills(mid):
            hi = mid
        else:
            lo = mid
    return hi
