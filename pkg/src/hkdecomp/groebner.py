"""Buchberger's algorithm, normal forms, reduced bases, and elimination.

This is the computational kernel behind every ideal operation. Pair
selection uses the normal strategy (smallest lcm degree first) with the
coprimality and chain criteria. All computations carry a pair budget;
running past it raises ``BudgetExceededError`` rather than ever
returning a truncated (wrong) basis.
"""

from contextlib import contextmanager
from dataclasses import dataclass

from .errors import BudgetExceededError
from .orders import GREVLEX, EliminationOrder, MonomialOrder
from .poly import (Polynomial, Ring, mon_degree, mon_divides, mon_lcm,
                   mon_mul, mon_quotient)

DEFAULT_PAIR_BUDGET = 200_000
_current_budget = DEFAULT_PAIR_BUDGET


def default_pair_budget() -> int:
    return _current_budget


@contextmanager
def pair_budget(n: int):
    """Temporarily override the default pair budget (one job per process)."""
    global _current_budget
    old = _current_budget
    _current_budget = n
    try:
        yield
    finally:
        _current_budget = old


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_monomials(self):
        return [g.leading(self.order)[0] for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Full remainder of f on division by the basis.

    No term of the result is divisible by any leading term of the basis;
    f minus the result lies in the ideal the basis generates. For a
    reduced Groebner basis the result is the unique canonical
    representative of f modulo the ideal.
    """
    if isinstance(basis, GroebnerBasis):
        order = order or basis.order
        elems = basis.elements
    else:
        order = order or GREVLEX
        elems = [g for g in basis if not g.is_zero()]
    if not elems:
        return f
    p = f.ring.p
    leads = [(g.leading(order), g) for g in elems]
    work = dict(f.terms)
    out: dict = {}
    while work:
        m = max(work, key=order.key)
        c = work[m]
        for (lm, lc), g in leads:
            if mon_divides(lm, m):
                q = mon_quotient(m, lm)
                s = (c * pow(lc, p - 2, p)) % p
                for tm, tc in g.terms.items():
                    key = mon_mul(tm, q)
                    v = (work.get(key, 0) - s * tc) % p
                    if v:
                        work[key] = v
                    elif key in work:
                        del work[key]
                break
        else:
            out[m] = c
            del work[m]
    return Polynomial(f.ring, out)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    (mf, cf), (mg, cg) = f.leading(order), g.leading(order)
    field = f.ring.field
    lcm = mon_lcm(mf, mg)
    return f.times_term(mon_quotient(lcm, mf), field.inv(cf)) - g.times_term(
        mon_quotient(lcm, mg), field.inv(cg))


def buchberger(generators, order: MonomialOrder = GREVLEX, budget: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the given generators.

    Returns [] for the zero ideal. The result is the unique reduced
    basis: elements monic, no term of any element divisible by the
    leading term of another, sorted by descending leading term.
    """
    budget = budget if budget is not None else default_pair_budget()
    G = [g for g in generators if not g.is_zero()]
    if not G:
        return []
    lt = [g.leading(order)[0] for g in G]
    pending = {(i, j) for j in range(len(G)) for i in range(j)}
    processed = 0

    def lcm_deg(pair):
        i, j = pair
        return mon_degree(mon_lcm(lt[i], lt[j]))

    while pending:
        pair = min(pending, key=lambda ij: (lcm_deg(ij), ij))
        pending.discard(pair)
        processed += 1
        if processed > budget:
            raise BudgetExceededError(
                f"Groebner pair budget of {budget} exceeded", pairs_processed=processed)
        i, j = pair
        lcm = mon_lcm(lt[i], lt[j])
        if lcm == mon_mul(lt[i], lt[j]):
            continue  # coprime leading terms
        # chain criterion: some k divides the lcm and both companion pairs settled
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if mon_divides(lt[k], lcm):
                ik = (min(i, k), max(i, k))
                jk = (min(j, k), max(j, k))
                if ik not in pending and jk not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if not r.is_zero():
            pending.update((k, len(G)) for k in range(len(G)))
            G.append(r)
            lt.append(r.leading(order)[0])
    return reduce_basis(G, order)


def reduce_basis(G, order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    """Inter-reduce a basis to the unique reduced form."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return []
    by_lt = sorted(G, key=lambda g: order.key(g.leading(order)[0]))
    minimal: list[Polynomial] = []
    for g in by_lt:
        m = g.leading(order)[0]
        if not any(mon_divides(h.leading(order)[0], m) for h in minimal):
            minimal.append(g)
    basis = [g.monic(order) for g in minimal]
    # leading terms are pairwise indivisible, so tails can be reduced in place
    while True:
        changed = False
        for idx in range(len(basis)):
            others = basis[:idx] + basis[idx + 1:]
            r = normal_form(basis[idx], others, order).monic(order)
            if r != basis[idx]:
                basis[idx] = r
                changed = True
        if not changed:
            break
    basis.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return basis


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases.

    For a ring with a defining ideal the generator list implicitly
    includes the defining relations: ideals of R = S/D are represented by
    their ambient preimages. ``generators`` holds only the user-level
    part; ``all_generators`` appends the relations.

    ``cache`` is a scratch memo used by higher layers (saturations,
    Hilbert data); it only ever stores values derivable from the ideal,
    so concurrent duplication is harmless.
    """

    __slots__ = ("ring", "generators", "_bases", "cache")

    def __init__(self, ring: Ring, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring is not ring:
                raise ValueError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._bases: dict = {}
        self.cache: dict = {}

    def all_generators(self) -> tuple[Polynomial, ...]:
        return self.generators + self.ring.defining

    def basis(self, order: MonomialOrder = GREVLEX, budget: int | None = None) -> GroebnerBasis:
        gb = self._bases.get(order)
        if gb is None:
            gb = GroebnerBasis(order, tuple(buchberger(self.all_generators(), order, budget)))
            self._bases[order] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        if f.ring is not self.ring:
            raise ValueError("membership test across rings")
        return normal_form(f, self.basis()).is_zero()

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def equals(self, other: "Ideal") -> bool:
        """Ideal equality by two-way membership of generators."""
        if self.ring is not other.ring:
            raise ValueError("comparing ideals over different rings")
        return (all(self.contains(g) for g in other.all_generators())
                and all(other.contains(g) for g in self.all_generators()))

    def is_zero(self) -> bool:
        return len(self.basis()) == 0

    def is_unit(self) -> bool:
        gb = self.basis()
        return len(gb) == 1 and gb.elements[0].is_constant()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.all_generators())

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"({inside})"


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def eliminate(I: Ideal, k: int) -> Ideal:
    """I intersected with the subring in the last n-k variables.

    Returned as an ideal of the original ring via inclusion.
    """
    if k < 0 or k > I.ring.nvars:
        raise ValueError(f"cannot eliminate {k} of {I.ring.nvars} variables")
    if k == 0:
        return I
    gb = I.basis(EliminationOrder(k))
    kept = [g for g in gb if all(all(e == 0 for e in m[:k]) for m in g.terms)]
    return Ideal(I.ring, kept)


def exact_quotient(g: Polynomial, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """g / f for an exact multiple g of f; raises ValueError otherwise."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = g.ring
    p = ring.p
    lm, lc = f.leading(order)
    lc_inv = pow(lc, p - 2, p)
    work = dict(g.terms)
    quot: dict = {}
    while work:
        m = max(work, key=order.key)
        c = work[m]
        if not mon_divides(lm, m):
            raise ValueError("polynomial is not an exact multiple of the divisor")
        q = mon_quotient(m, lm)
        s = (c * lc_inv) % p
        quot[q] = s
        for tm, tc in f.terms.items():
            key = mon_mul(tm, q)
            v = (work.get(key, 0) - s * tc) % p
            if v:
                work[key] = v
            elif key in work:
                del work[key]
    return Polynomial(ring, quot)
