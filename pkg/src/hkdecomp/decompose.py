"""Decomposition of generalized Hilbert-Kunz functions into integer
combinations of classical ones, with per-q exact certification.

The engine rewrites star expressions. A star expression is a base ideal
J together with steps (eps, y, K); evaluating at q starts from the
Frobenius power of J and applies, left to right,

    eps = 0:  E -> E + y^q * K^[q]
    eps = 1:  E -> (E : y^q) + (y^q)        (K must be the unit ideal)

Splitting with a validated element y turns one expression into a +/- pair
whose torsion lengths difference reproduces the parent's; the injection
rewrite removes the rightmost eps = 1 step at the cost of a richer
cofactor. Both rewrites are verified exactly at every working q, and the
verified equalities form the certificate. Element choices are randomized
and validated by the colon-equals-saturation test instead of any prime
avoidance argument; all randomness flows from one recorded seed.
"""

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import (CertificateError, DimensionError, ElementSelectionError,
                     InternalError)
from .groebner import Ideal
from .ideals import (colength, colon_element, elt_times_ideal, frobenius_power,
                     h0_annihilator_exponent, h0_length, ideal_sum,
                     krull_dimension, principal_ideal, saturate_m, unit_ideal)
from .poly import Polynomial, Ring, is_power_of


@dataclass(frozen=True)
class SelectionPolicy:
    """Randomized candidate policy for splitting elements."""

    degree: int = 1
    retries: int = 8
    degree_cap: int = 4


def default_q_list(p: int) -> tuple[int, ...]:
    qs = [1, p, p * p]
    if p == 2:
        qs.append(8)
    return tuple(qs)


class StarStep:
    """One rewrite step: eps in {0, 1}, a homogeneous element, a cofactor ideal."""

    __slots__ = ("epsilon", "element", "cofactor")

    def __init__(self, epsilon: int, element: Polynomial, cofactor: Ideal | None = None):
        if epsilon not in (0, 1):
            raise ValueError("epsilon must be 0 or 1")
        if element.is_zero() or not element.is_homogeneous() or element.degree() < 1:
            raise ValueError("step element must be homogeneous of positive degree")
        if cofactor is None:
            cofactor = unit_ideal(element.ring)
        if epsilon == 1 and not cofactor.is_unit():
            raise ValueError("a colon step carries no cofactor (it must be the unit ideal)")
        self.epsilon = epsilon
        self.element = element
        self.cofactor = cofactor


class StarExpression:
    """A base ideal with a sequence of star steps, evaluated per q."""

    __slots__ = ("base", "steps", "_evals", "_base_dim")

    def __init__(self, base: Ideal, steps=()):
        self.base = base
        self.steps = tuple(steps)
        self._evals: dict[int, Ideal] = {}
        self._base_dim = None

    def evaluate(self, q: int) -> Ideal:
        cached = self._evals.get(q)
        if cached is not None:
            return cached
        E = frobenius_power(self.base, q)
        for step in self.steps:
            yq = step.element.frobenius(q)
            if step.epsilon == 0:
                E = ideal_sum(E, elt_times_ideal(yq, frobenius_power(step.cofactor, q)))
            else:
                E = ideal_sum(colon_element(E, yq), principal_ideal(yq))
        self._evals[q] = E
        return E

    @property
    def base_dimension(self) -> int:
        if self._base_dim is None:
            dim = krull_dimension(self.base)
            if dim is None:
                raise DimensionError("the unit ideal has no star expressions")
            self._base_dim = dim
        return self._base_dim

    @property
    def dimension(self) -> int:
        """Quotient dimension: each validated step drops it by exactly one."""
        return self.base_dimension - len(self.steps)

    def epsilons(self) -> tuple[int, ...]:
        return tuple(step.epsilon for step in self.steps)

    def extended(self, step: StarStep) -> "StarExpression":
        return StarExpression(self.base, self.steps + (step,))

    def collapse(self) -> Ideal:
        """For all-eps-0 expressions: the fixed ideal J + sum y_i K_i whose
        Frobenius powers are exactly the evaluations."""
        if any(step.epsilon == 1 for step in self.steps):
            raise ValueError("only an all-eps-0 expression collapses to a fixed ideal")
        result = self.base
        for step in self.steps:
            result = ideal_sum(result, elt_times_ideal(step.element, step.cofactor))
        return result

    def describe(self) -> str:
        parts = ["(" + (", ".join(str(g) for g in self.base.generators) or "0") + ")"]
        for step in self.steps:
            if step.epsilon == 1:
                parts.append(f"*_1 {step.element}")
            elif step.cofactor.is_unit():
                parts.append(f"*_0 {step.element}")
            else:
                gens = ", ".join(str(g) for g in step.cofactor.generators)
                parts.append(f"*_0 {step.element}*({gens})")
        return " ".join(parts)


def step_measure(epsilons, c: int) -> int:
    """Termination measure sum eps_i * 2^(c-i) on a (padded) step tuple."""
    return sum(e << (c - i) for i, e in enumerate(epsilons, start=1))


def _potential(expr: StarExpression, c: int) -> int:
    """Largest measure any dimension-0 descendant of this expression can have."""
    return step_measure(expr.epsilons(), c) + (1 << (c - len(expr.steps))) - 1


class SignedCombination:
    """Integer combination of m-primary ideals; evaluated via colengths of
    Frobenius powers."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=()):
        terms = tuple((int(c), J) for c, J in terms)
        for _, J in terms:
            if krull_dimension(J) != 0:
                raise DimensionError(f"combination term {J!r} is not m-primary")
        self.ring = ring
        self.terms = terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = " + ".join(f"{c}*l(R/{J!r})" for c, J in self.terms) or "0"
        return f"<combination {body}>"


def evaluate_combination(C: SignedCombination, q: int) -> int:
    """Sum of coefficient * colength(Frobenius power) over the terms."""
    if not is_power_of(q, C.ring.p):
        raise ValueError(f"{q} is not a power of the characteristic {C.ring.p}")
    return sum(c * colength(frobenius_power(J, q)) for c, J in C.terms)


@dataclass
class Certificate:
    """The machine-checked record of one decomposition or verification run."""

    q_list: tuple[int, ...]
    seed: int | None
    elements: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.get("pass", True) for entry in self.checks)

    def to_payload(self) -> dict:
        return {
            "seed": self.seed,
            "q_list": list(self.q_list),
            "elements": self.elements,
            "checks": self.checks,
        }


def _normalize_q_list(ring: Ring, q_list) -> tuple[int, ...]:
    qs = sorted(set(int(q) for q in q_list))
    if not qs:
        raise ValueError("empty q list")
    for q in qs:
        if not is_power_of(q, ring.p):
            raise ValueError(f"{q} is not a power of the characteristic {ring.p}")
    return tuple(qs)


def _monomials_of_degree(ring: Ring, d: int):
    out = []
    for combo in combinations_with_replacement(range(ring.nvars), d):
        exps = [0] * ring.nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def _random_form(ring: Ring, degree: int, rng: random.Random, seen: set):
    """A fresh random homogeneous form, or None when the degree is exhausted."""
    mons = _monomials_of_degree(ring, degree)
    for _ in range(64):
        coeffs = tuple(rng.randrange(ring.p) for _ in mons)
        if not any(coeffs) or coeffs in seen:
            continue
        seen.add(coeffs)
        return Polynomial(ring, {m: c for m, c in zip(mons, coeffs) if c})
    return None


def _select_element(family: StarExpression, q_list, rng: random.Random,
                    policy: SelectionPolicy) -> tuple[Polynomial, dict]:
    """Find s with (E_q : s^q) = saturation(E_q) for every working q.

    Candidates are random homogeneous forms; each is tried raw and, when
    that fails, raised to the inferred linear torsion bound N (the
    maximal ceil(N_q/q) over the family). Validation is always the pair
    of ideal equalities, never an avoidance argument.
    """
    if family.dimension < 1:
        raise DimensionError("element selection needs a positive-dimensional quotient")
    evals = {q: family.evaluate(q) for q in q_list}
    sats = {q: saturate_m(evals[q]) for q in q_list}
    bound = 1
    for q in q_list:
        n_q = h0_annihilator_exponent(evals[q], sats[q])
        bound = max(bound, -(-n_q // q))
    powers = (1,) if bound == 1 else (1, bound)
    attempts = []
    last_fail = None
    for degree in range(policy.degree, policy.degree_cap + 1):
        seen: set = set()
        for _ in range(policy.retries):
            s0 = _random_form(family.base.ring, degree, rng, seen)
            if s0 is None:
                break
            for power in powers:
                s = s0 ** power if power > 1 else s0
                failed_q = None
                for q in q_list:
                    if not colon_element(evals[q], s.frobenius(q)).equals(sats[q]):
                        failed_q = q
                        break
                attempts.append({"candidate": str(s0), "power": power,
                                 "ok": failed_q is None, "failed_q": failed_q})
                if failed_q is None:
                    record = {
                        "family": family.describe(),
                        "candidate": str(s0),
                        "candidate_degree": degree,
                        "power": power,
                        "element": str(s),
                        "torsion_bound": bound,
                        "checks": [{"q": q, "colon_equals_saturation": True} for q in q_list],
                    }
                    return s, record
                last_fail = failed_q
    raise ElementSelectionError(
        f"no element passed validation for {family.describe()} "
        f"(degrees {policy.degree}..{policy.degree_cap}, {policy.retries} retries each)",
        failing_q=last_fail, attempts=attempts)


def choose_element(family: StarExpression, q_list, degree: int = 1, rng_seed: int = 0,
                   retries: int = 8, degree_cap: int = 4) -> Polynomial:
    policy = SelectionPolicy(degree=degree, retries=retries, degree_cap=degree_cap)
    element, _ = _select_element(family, q_list, random.Random(rng_seed), policy)
    return element


def split_once(E: StarExpression, z: Polynomial, q_list=(), checks_sink: list | None = None):
    """Split E into (+1, E *_0 z) and (-1, E *_1 z).

    When a q list is given, the torsion length identity
    h0(E_q) = h0((E *_0 z)_q) - h0((E *_1 z)_q) is checked exactly at
    every q; a failure means the element was not valid after all.
    """
    plus = E.extended(StarStep(0, z))
    minus = E.extended(StarStep(1, z))
    for q in q_list:
        lhs = h0_length(E.evaluate(q))
        val_plus = h0_length(plus.evaluate(q))
        val_minus = h0_length(minus.evaluate(q))
        entry = {"kind": "split", "q": q, "family": E.describe(), "element": str(z),
                 "lhs": lhs, "plus": val_plus, "minus": val_minus,
                 "pass": lhs == val_plus - val_minus}
        if checks_sink is not None:
            checks_sink.append(entry)
        if not entry["pass"]:
            raise CertificateError(
                f"split identity failed at q={q} for element {z}: "
                f"{lhs} != {val_plus} - {val_minus}")
    return (1, plus), (-1, minus)


def inject_rewrite(E: StarExpression, q_list=(), checks_sink: list | None = None):
    """Remove the rightmost eps = 1 step by the multiplication injection.

    Both results share E's prefix before that step; the +1 result carries
    the enlarged cofactor (y_j) + sum y_i K_i over the dropped tail, the
    -1 result adds y_j alone. Checked per q like split_once.
    """
    eps = E.epsilons()
    if 1 not in eps:
        raise ValueError("injection rewrite needs a colon step to remove")
    j = max(i for i, e in enumerate(eps) if e == 1)
    yj = E.steps[j].element
    prefix = StarExpression(E.base, E.steps[:j])
    cof_gens = [yj]
    for step in E.steps[j + 1:]:
        cof_gens.extend(step.element * g for g in step.cofactor.generators)
    enlarged = Ideal(E.base.ring, cof_gens)
    plus = prefix.extended(StarStep(0, yj, enlarged))
    minus = prefix.extended(StarStep(0, yj))
    for q in q_list:
        lhs = h0_length(E.evaluate(q))
        val_plus = h0_length(plus.evaluate(q))
        val_minus = h0_length(minus.evaluate(q))
        entry = {"kind": "inject", "q": q, "family": E.describe(),
                 "element": str(yj), "lhs": lhs, "plus": val_plus,
                 "minus": val_minus, "pass": lhs == val_plus - val_minus}
        if checks_sink is not None:
            checks_sink.append(entry)
        if not entry["pass"]:
            raise CertificateError(
                f"injection identity failed at q={q}: {lhs} != {val_plus} - {val_minus}")
    return (1, plus), (-1, minus)


def _direct_ghk(I: Ideal, q: int) -> int:
    return h0_length(frobenius_power(I, q))


def _record_identity(cert: Certificate, kind: str, q: int, combination_value: int,
                     direct_value: int, strict: bool = True):
    entry = {"kind": kind, "q": q, "combination": combination_value,
             "direct": direct_value, "pass": combination_value == direct_value}
    cert.checks.append(entry)
    if strict and not entry["pass"]:
        raise CertificateError(
            f"{kind} failed at q={q}: combination gives {combination_value}, "
            f"direct saturation gives {direct_value}")


def _dim1(I: Ideal, q_list, rng: random.Random, policy: SelectionPolicy,
          cert: Certificate) -> SignedCombination:
    if krull_dimension(I) != 1:
        raise DimensionError(
            f"dimension-1 decomposition on a quotient of dimension {krull_dimension(I)}")
    s, record = _select_element(StarExpression(I), q_list, rng, policy)
    plus = ideal_sum(I, principal_ideal(s))
    minus = ideal_sum(I, principal_ideal(s * s))
    record["results_m_primary"] = (krull_dimension(plus) == 0 and krull_dimension(minus) == 0)
    cert.elements.append(record)
    if not record["results_m_primary"]:
        raise CertificateError(f"element {s} did not cut the quotient down to dimension 0")
    combo = SignedCombination(I.ring, ((2, plus), (-1, minus)))
    for q in q_list:
        _record_identity(cert, "dim1-identity", q, evaluate_combination(combo, q),
                         _direct_ghk(I, q))
    return combo


def decompose_dim1(I: Ideal, q_list=None, rng_seed: int = 0,
                   policy: SelectionPolicy = SelectionPolicy()):
    """Closed form in dimension 1: coefficients (2, -1) on I+(s), I+(s^2)."""
    q_list = _normalize_q_list(I.ring, q_list if q_list is not None else default_q_list(I.ring.p))
    cert = Certificate(q_list, rng_seed)
    combo = _dim1(I, q_list, random.Random(rng_seed), policy, cert)
    return combo, cert


def _merge_terms(ring: Ring, raw_terms) -> SignedCombination:
    merged: list[list] = []
    for c, J in raw_terms:
        for entry in merged:
            if entry[1].equals(J):
                entry[0] += c
                break
        else:
            merged.append([c, J])
    return SignedCombination(ring, tuple((c, J) for c, J in merged if c != 0))


def decompose_dim2(I: Ideal, q_list=None, rng_seed: int = 0,
                   policy: SelectionPolicy = SelectionPolicy()):
    """Dimension 2: coefficients (2, -2, 1) on the one-dimensional ideals
    I+(s), I+(s^2, st), I+(s^2, st^2), each then expanded by the
    dimension-1 closed form and flattened."""
    if krull_dimension(I) != 2:
        raise DimensionError(
            f"dimension-2 decomposition on a quotient of dimension {krull_dimension(I)}")
    q_list = _normalize_q_list(I.ring, q_list if q_list is not None else default_q_list(I.ring.p))
    cert = Certificate(q_list, rng_seed)
    rng = random.Random(rng_seed)
    s, s_record = _select_element(StarExpression(I), q_list, rng, policy)
    cert.elements.append(s_record)
    # t is validated against the colon family (I^[q] : s^q) + (s^q)
    t, t_record = _select_element(StarExpression(I, (StarStep(1, s),)), q_list, rng, policy)
    cert.elements.append(t_record)
    s2 = s * s
    level1 = (
        (2, ideal_sum(I, principal_ideal(s))),
        (-2, Ideal(I.ring, I.generators + (s2, s * t))),
        (1, Ideal(I.ring, I.generators + (s2, s * t * t))),
    )
    for coeff, J in level1:
        if krull_dimension(J) != 1:
            raise CertificateError(f"intermediate ideal {J!r} is not one-dimensional")
    for q in q_list:
        mid = sum(c * _direct_ghk(J, q) for c, J in level1)
        _record_identity(cert, "dim2-intermediate-identity", q, mid, _direct_ghk(I, q))
    raw_terms = []
    for coeff, J in level1:
        sub = _dim1(J, q_list, rng, policy, cert)
        raw_terms.extend((coeff * c, K) for c, K in sub.terms)
    combo = _merge_terms(I.ring, raw_terms)
    for q in q_list:
        _record_identity(cert, "decomposition-identity", q,
                         evaluate_combination(combo, q), _direct_ghk(I, q))
    return combo, cert


_WORKLIST_GUARD = 100_000


def decompose_general(I: Ideal, q_list=None, rng_seed: int = 0,
                      policy: SelectionPolicy = SelectionPolicy()):
    """Rewrite-to-fixpoint engine for any quotient dimension.

    Positive-dimensional terms are split with freshly validated elements;
    zero-dimensional terms with a colon step are rewritten by injection
    (strictly decreasing the termination measure) and re-split; terms
    with no colon steps collapse to fixed m-primary ideals and join the
    combination. Like terms merge by ideal equality. Every rewrite and
    the final identity are verified exactly at every working q.
    """
    ring = I.ring
    if not I.is_homogeneous():
        raise DimensionError("decomposition requires a homogeneous ideal")
    q_list = _normalize_q_list(ring, q_list if q_list is not None else default_q_list(ring.p))
    cert = Certificate(q_list, rng_seed)
    if I.is_unit():
        # H0 of the zero ring vanishes; the empty combination certifies trivially
        for q in q_list:
            _record_identity(cert, "decomposition-identity", q, 0, 0)
        return SignedCombination(ring, ()), cert
    c = krull_dimension(I)
    if c == 0:
        combo = SignedCombination(ring, ((1, I),))
        for q in q_list:
            _record_identity(cert, "decomposition-identity", q,
                             evaluate_combination(combo, q), _direct_ghk(I, q))
        return combo, cert
    rng = random.Random(rng_seed)
    work = deque([(1, StarExpression(I), (1 << c) - 1)])
    emitted: list[tuple[int, Ideal]] = []
    pops = 0
    while work:
        sign, expr, potential = work.popleft()
        pops += 1
        if pops > _WORKLIST_GUARD:
            raise InternalError("rewrite worklist failed to terminate")
        if expr.dimension > 0:
            z, record = _select_element(expr, q_list, rng, policy)
            cert.elements.append(record)
            (sp, plus), (sm, minus) = split_once(expr, z, q_list, cert.checks)
            for child_sign, child in ((sp, plus), (sm, minus)):
                child_potential = _potential(child, c)
                if child_potential > potential:
                    raise InternalError("split increased the termination measure bound")
                work.append((sign * child_sign, child, child_potential))
        elif 1 in expr.epsilons():
            (sp, plus), (sm, minus) = inject_rewrite(expr, q_list, cert.checks)
            for child_sign, child in ((sp, plus), (sm, minus)):
                child_potential = _potential(child, c)
                if child_potential > potential - 1:
                    raise InternalError("injection did not decrease the termination measure")
                work.append((sign * child_sign, child, child_potential))
        else:
            fixed = expr.collapse()
            if krull_dimension(fixed) != 0:
                raise CertificateError(
                    f"collapsed term {fixed!r} is not m-primary; an element choice was invalid")
            emitted.append((sign, fixed))
    combo = _merge_terms(ring, emitted)
    for q in q_list:
        _record_identity(cert, "decomposition-identity", q,
                         evaluate_combination(combo, q), _direct_ghk(I, q))
    return combo, cert


def verify_identity(I: Ideal, C: SignedCombination, q_list) -> Certificate:
    """Compare the combination against the saturation route at each q.

    Failures are recorded in the certificate, never raised.
    """
    q_list = _normalize_q_list(I.ring, q_list)
    cert = Certificate(q_list, None)
    for q in q_list:
        _record_identity(cert, "verify-identity", q, evaluate_combination(C, q),
                         _direct_ghk(I, q), strict=False)
    return cert
