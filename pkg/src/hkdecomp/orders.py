"""Monomial orders.

Every order exposes ``key(exponents) -> sortable tuple`` such that the
natural tuple comparison realizes the order (bigger key = bigger
monomial). All three orders are total, multiplicative, and have 1 as the
minimal monomial; the elimination order additionally guarantees that any
monomial involving one of the first ``block`` variables is larger than
every monomial in the remaining variables.
"""

from dataclasses import dataclass


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class GrevlexOrder:
    """Graded reverse lexicographic order (the default everywhere)."""

    def key(self, m):
        return _grevlex_key(m)

    def __repr__(self):
        return "grevlex"


@dataclass(frozen=True)
class LexOrder:
    """Pure lexicographic order, first variable dominant."""

    def key(self, m):
        return m

    def __repr__(self):
        return "lex"


@dataclass(frozen=True)
class EliminationOrder:
    """Block order eliminating the first ``block`` variables.

    Compares the leading block by grevlex, ties broken by grevlex on the
    rest; this is an elimination order for the leading block.
    """

    block: int

    def key(self, m):
        k = self.block
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __repr__(self):
        return f"eliminate({self.block})"


GREVLEX = GrevlexOrder()
LEX = LexOrder()

MonomialOrder = GrevlexOrder | LexOrder | EliminationOrder
