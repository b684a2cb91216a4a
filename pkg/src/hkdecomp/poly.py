"""Rings, monomials, and exact multivariate polynomials over F_p.

Monomials are exponent tuples (one entry per ring variable, standard
grading). Polynomials are immutable maps from monomials to nonzero
residues mod p. A ring may carry a defining ideal, presenting the
quotient of the ambient polynomial ring by homogeneous relations; all
computations stay at the ambient level.
"""

from dataclasses import dataclass, field

from .errors import HomogeneityError, PolynomialParseError
from .fields import PrimeField
from .orders import GREVLEX

Monomial = tuple[int, ...]


def mon_degree(m: Monomial) -> int:
    return sum(m)


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_quotient(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class Ring:
    """A graded polynomial ring F_p[x_1..x_n], optionally presented as a quotient.

    ``defining`` lists homogeneous relations of positive degree; ideals of
    the quotient are represented as ambient ideals implicitly containing
    them. Rings compare by identity; polynomials from different ring
    objects never mix.
    """

    p: int
    variables: tuple[str, ...]
    defining: tuple["Polynomial", ...] = field(default=())

    def __post_init__(self):
        PrimeField(self.p)  # validates primality
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        for name in self.variables:
            if not name.isidentifier():
                raise ValueError(f"variable name {name!r} is not an identifier")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: 1})

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.variable(v) for v in self.variables]

    def __repr__(self):
        base = f"F_{self.p}[{', '.join(self.variables)}]"
        if self.defining:
            return base + " / (" + ", ".join(str(g) for g in self.defining) + ")"
        return base


def make_ring(p: int, variables, quotient=()) -> Ring:
    """Build a ring, parsing optional quotient relations over it.

    Every relation must be homogeneous of positive degree.
    """
    ring = Ring(p, tuple(variables))
    if quotient:
        polys = []
        for q in quotient:
            f = parse_polynomial(q, ring) if isinstance(q, str) else q
            if f.is_zero():
                continue
            if not f.is_homogeneous():
                raise HomogeneityError(f"defining relation {f} is not homogeneous")
            if f.degree() == 0:
                raise ValueError("defining relation of degree 0 would collapse the ring")
            polys.append(f)
        object.__setattr__(ring, "defining", tuple(polys))
    return ring


def is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


class Polynomial:
    """An exact multivariate polynomial over the ring's prime field."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        n = ring.nvars
        p = ring.p
        acc: dict[Monomial, int] = {}
        for mon, c in items:
            mon = tuple(mon)
            if len(mon) != n:
                raise ValueError(f"exponent vector {mon} has wrong length for {ring!r}")
            if any(e < 0 for e in mon):
                raise ValueError(f"negative exponent in {mon}")
            acc[mon] = (acc.get(mon, 0) + c) % p
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {m: c for m, c in acc.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def _check_ring(self, other: "Polynomial"):
        if self.ring is not other.ring:
            raise ValueError("operands come from different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mon_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mon_degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(mon_degree(m) == 0 for m in self.terms)

    def leading(self, order=GREVLEX) -> tuple[Monomial, int]:
        """Leading (monomial, coefficient) for the given order."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        out = dict(self.terms)
        p = self.ring.p
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.ring.p
            c0 = other % p
            return Polynomial(self.ring, {m: (c * c0) % p for m, c in self.terms.items()})
        self._check_ring(other)
        p = self.ring.p
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = mon_mul(m1, m2)
                v = (out.get(key, 0) + c1 * c2) % p
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def times_term(self, mon: Monomial, coeff: int) -> "Polynomial":
        p = self.ring.p
        c0 = coeff % p
        return Polynomial(self.ring, {mon_mul(m, mon): (c * c0) % p for m, c in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def frobenius(self, q: int) -> "Polynomial":
        """Raise to the q-th power for q a power of the characteristic.

        In characteristic p, (sum c_i m_i)^q = sum c_i^q m_i^q, and
        c^q = c for c in F_p, so only exponents scale.
        """
        if not is_power_of(q, self.ring.p):
            raise ValueError(f"{q} is not a power of the characteristic {self.ring.p}")
        return Polynomial(self.ring, {tuple(e * q for e in m): c for m, c in self.terms.items()})

    def monic(self, order=GREVLEX) -> "Polynomial":
        if self.is_zero():
            return self
        _, lc = self.leading(order)
        return self * self.ring.field.inv(lc)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((id(self.ring), frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


def format_polynomial(f: Polynomial, order=GREVLEX) -> str:
    """Canonical text form: terms descending in the order, explicit '*'."""
    if f.is_zero():
        return "0"
    names = f.ring.variables
    parts = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[m]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([str(c)] + factors))
    return " + ".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolynomialParseError("expected a number", start)
        return int(self.text[start:self.pos])

    def take_ident(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            raise PolynomialParseError("expected a variable name", start)
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos], start


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse the ASCII polynomial grammar over the given ring.

    expr := ('-')? term (('+'|'-') term)*
    term := coeff? ('*'? factor)*        (at least a coeff or one factor)
    factor := var ('^' nat)?

    '-' is folded into mod-p coefficients; whitespace is insignificant.
    """
    sc = _Scanner(text)
    if sc.peek() == "":
        raise PolynomialParseError("empty polynomial", 0)
    p = ring.p
    n = ring.nvars
    index = {name: i for i, name in enumerate(ring.variables)}
    acc: dict[Monomial, int] = {}

    def parse_term(sign: int):
        coeff = sign
        exps = [0] * n
        saw_anything = False
        if sc.peek().isdigit():
            coeff = (coeff * sc.take_nat()) % p
            saw_anything = True
        while True:
            ch = sc.peek()
            if ch == "*":
                sc.pos += 1
                ch = sc.peek()
                if not (ch.isalpha() or ch == "_"):
                    raise PolynomialParseError("expected a variable after '*'", sc.pos)
            elif not (ch.isalpha() or ch == "_"):
                break
            name, at = sc.take_ident()
            if name not in index:
                raise PolynomialParseError(f"unknown variable {name!r}", at)
            e = 1
            if sc.peek() == "^":
                sc.pos += 1
                e = sc.take_nat()
            exps[index[name]] += e
            saw_anything = True
        if not saw_anything:
            raise PolynomialParseError("expected a term", sc.pos)
        key = tuple(exps)
        acc[key] = (acc.get(key, 0) + coeff) % p

    sign = 1
    if sc.peek() == "-":
        sc.pos += 1
        sign = p - 1
    parse_term(sign)
    while True:
        ch = sc.peek()
        if ch == "":
            break
        if ch == "+":
            sc.pos += 1
            parse_term(1)
        elif ch == "-":
            sc.pos += 1
            parse_term(p - 1)
        else:
            raise PolynomialParseError(f"unexpected character {ch!r}", sc.pos)
    return Polynomial(ring, acc)
