"""Independent oracles and random generators used by the tests.

The oracles here deliberately avoid the Groebner path: membership is
decided by linear algebra on monomial multiples, lengths by enumerating
standard monomials degree by degree.
"""

import itertools
import random

from hkdecomp.poly import Polynomial, Ring, mon_degree, mon_divides


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows if any(v % p for v in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col] % p, p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def macaulay_membership(f: Polynomial, generators) -> bool:
    """Membership of a homogeneous f in a homogeneous ideal, by rank.

    f lies in the ideal iff it is an F_p-combination of monomial
    multiples of the generators in f's own degree.
    """
    if f.is_zero():
        return True
    assert f.is_homogeneous(), "oracle needs homogeneous queries"
    ring = f.ring
    p = ring.p
    d = f.degree()
    basis = monomials_of_degree(ring.nvars, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        if g.is_zero():
            continue
        assert g.is_homogeneous(), "oracle needs homogeneous generators"
        dg = g.degree()
        if dg > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - dg):
            prod = g.times_term(m, 1)
            row = [0] * len(basis)
            for mon, c in prod.terms.items():
                row[index[mon]] = c
            rows.append(row)
    f_row = [0] * len(basis)
    for mon, c in f.terms.items():
        f_row[index[mon]] = c
    base_rank = rank_mod_p(rows, p)
    return rank_mod_p(rows + [f_row], p) == base_rank


def count_standard_monomials(lead_monomials, nvars: int, d: int) -> int:
    """Monomials of degree d not divisible by any leading monomial."""
    count = 0
    for m in monomials_of_degree(nvars, d):
        if not any(mon_divides(lt, m) for lt in lead_monomials):
            count += 1
    return count


def torsion_length_by_enumeration(I, sat, max_degree: int) -> int:
    """Length of sat/I summed degreewise by Macaulay rank differences.

    Only sound when the torsion vanishes beyond max_degree; callers pick
    a bound from the structure of the example.
    """
    ring = I.ring
    p = ring.p
    total = 0
    for d in range(max_degree + 1):
        basis = monomials_of_degree(ring.nvars, d)
        index = {m: i for i, m in enumerate(basis)}

        def span_rank(gens):
            rows = []
            for g in gens:
                if g.is_zero() or g.degree() > d:
                    continue
                for m in monomials_of_degree(ring.nvars, d - g.degree()):
                    prod = g.times_term(m, 1)
                    row = [0] * len(basis)
                    for mon, c in prod.terms.items():
                        row[index[mon]] = c
                    rows.append(row)
            return rank_mod_p(rows, p)

        total += span_rank(sat.all_generators()) - span_rank(I.all_generators())
    return total


def random_homogeneous_poly(ring: Ring, degree: int, rng: random.Random) -> Polynomial:
    mons = monomials_of_degree(ring.nvars, degree)
    while True:
        terms = {m: rng.randrange(ring.p) for m in mons}
        f = Polynomial(ring, terms)
        if not f.is_zero():
            return f


def random_poly(ring: Ring, max_degree: int, rng: random.Random,
                allow_zero: bool = False) -> Polynomial:
    terms = {}
    for d in range(max_degree + 1):
        for m in monomials_of_degree(ring.nvars, d):
            if rng.random() < 0.3:
                terms[m] = rng.randrange(1, ring.p) if ring.p > 1 else 0
    f = Polynomial(ring, terms)
    if f.is_zero() and not allow_zero:
        return random_poly(ring, max_degree, rng, allow_zero)
    return f


def random_homogeneous_ideal(ring: Ring, rng: random.Random, max_gens: int = 3,
                             max_degree: int = 3):
    from hkdecomp.groebner import Ideal

    count = rng.randrange(1, max_gens + 1)
    gens = [random_homogeneous_poly(ring, rng.randrange(1, max_degree + 1), rng)
            for _ in range(count)]
    return Ideal(ring, gens)
