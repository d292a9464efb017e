"""Exact degree assortativity.

The coefficient r is kept as the integer pair (N, D) where

    N = 4 m P - S**2        D = 2 m Q - S**2

with P, S, Q the edge sums of d_u*d_v, d_u+d_v and d_u**2+d_v**2. Dividing
both by 4 m**2 recovers the usual Pearson form, so r = N / D whenever D > 0.
Python integers are unbounded, so no overflow handling is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import Disconnected, EmptyEdgeSet
from .graph import Graph, is_connected

ASSORTATIVE = "assortative"
DISASSORTATIVE = "disassortative"
NEUTRAL = "neutral"
UNDEFINED_REGULAR = "undefined-regular"
TAGS = (ASSORTATIVE, DISASSORTATIVE, NEUTRAL, UNDEFINED_REGULAR)


@dataclass(frozen=True)
class AssortStats:
    m: int
    P: int
    S: int
    Q: int

    @property
    def N(self) -> int:
        return 4 * self.m * self.P - self.S * self.S

    @property
    def D(self) -> int:
        return 2 * self.m * self.Q - self.S * self.S

    @property
    def r(self) -> Optional[Fraction]:
        D = self.D
        return Fraction(self.N, D) if D > 0 else None

    def as_dict(self) -> dict:
        r = self.r
        return {
            "m": self.m,
            "P": self.P,
            "S": self.S,
            "Q": self.Q,
            "N": self.N,
            "D": self.D,
            "r": None if r is None else f"{r.numerator}/{r.denominator}",
        }


@dataclass(frozen=True)
class Classification:
    tag: str
    r: Optional[Fraction]


def stats(g: Graph) -> AssortStats:
    if not g.edges:
        raise EmptyEdgeSet("assortativity is undefined without edges")
    d = g.degrees
    P = S = Q = 0
    for u, v in g.edges:
        a, b = d[u], d[v]
        P += a * b
        S += a + b
        Q += a * a + b * b
    return AssortStats(len(g.edges), P, S, Q)


def classify_stats(st: AssortStats) -> Classification:
    D = st.D
    if D == 0:
        return Classification(UNDEFINED_REGULAR, None)
    N = st.N
    r = Fraction(N, D)
    if N > 0:
        return Classification(ASSORTATIVE, r)
    if N < 0:
        return Classification(DISASSORTATIVE, r)
    return Classification(NEUTRAL, r)


def classify(g: Graph) -> Classification:
    """Classify g; regular graphs (r = 0/0) are undefined-regular, never neutral."""
    return classify_stats(stats(g))


def is_neutral(g: Graph) -> bool:
    st = stats(g)
    return st.N == 0 and st.D > 0


def lemma1_condition(g: Graph) -> bool:
    """True iff sum over edges of (d_u + d_v) equals 4m.

    For connected graphs this singles out cycles and trees whose only vertex
    of degree above 2 has degree exactly 3.
    """
    if not g.edges:
        raise EmptyEdgeSet("no edges")
    if not is_connected(g):
        raise Disconnected("condition is stated for connected graphs")
    st = stats(g)
    return st.S == 4 * st.m


def pearson_rational(g: Graph) -> Optional[Fraction]:
    """Assortativity written out term by term with fractions.

    Means over edges of d_u d_v, (d_u + d_v)/2 and (d_u^2 + d_v^2)/2; serves as
    an independent check on the integer (N, D) path. None when the
    denominator vanishes.
    """
    if not g.edges:
        raise EmptyEdgeSet("no edges")
    d = g.degrees
    inv_m = Fraction(1, len(g.edges))
    half = Fraction(1, 2)
    prod_mean = inv_m * sum(Fraction(d[u] * d[v]) for u, v in g.edges)
    lin_mean = inv_m * sum(half * (d[u] + d[v]) for u, v in g.edges)
    sq_mean = inv_m * sum(half * (d[u] ** 2 + d[v] ** 2) for u, v in g.edges)
    den = sq_mean - lin_mean**2
    if den == 0:
        return None
    return (prod_mean - lin_mean**2) / den


def format_r(r: Optional[Fraction]) -> str:
    if r is None:
        return "undefined"
    return f"{r.numerator}/{r.denominator} (~{float(r):.12g})"
