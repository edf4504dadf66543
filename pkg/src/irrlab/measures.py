"""Exact computation of the five irregularity measures.

All arithmetic is in Python integers; the degree variance is kept as an
exact rational so theorem checks never see a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RegularGraphError
from .graphs import Graph, degrees

CSV_FIELDS = ("n", "m", "delta", "Delta", "irr", "sigma", "sigma_t", "var_num", "var_den")


@dataclass(frozen=True)
class MeasureReport:
    """All measures of one graph, exact."""

    n: int
    m: int
    delta: int
    Delta: int
    irr: int
    sigma: int
    sigma_t: int
    var_num: int
    var_den: int

    @property
    def var(self) -> Fraction:
        return Fraction(self.var_num, self.var_den)

    def as_dict(self) -> dict:
        return {f: getattr(self, f) for f in CSV_FIELDS}

    def as_csv_row(self) -> str:
        return ",".join(str(getattr(self, f)) for f in CSV_FIELDS)


def sigma_t_closed_form(d) -> int:
    """n * sum(d^2) - (sum d)^2, the closed form of the pairwise sum."""
    n = len(d)
    return n * sum(x * x for x in d) - sum(d) ** 2


def sigma_t_naive(d) -> int:
    """Pairwise double loop; kept as the independent test oracle."""
    n = len(d)
    return sum(
        (d[u] - d[v]) ** 2 for u in range(n) for v in range(u + 1, n)
    )


def sum_centered_squares(d, c: int) -> int:
    """Sum over vertices of (d[v] - c)^2."""
    return sum((x - c) ** 2 for x in d)


def measure_all(g: Graph) -> MeasureReport:
    """Compute every measure of a non-empty graph."""
    if g.n < 1:
        raise ValueError("measure_all needs n >= 1")
    d = degrees(g)
    irr = 0
    sigma = 0
    for u, v in g.edges:
        diff = d[u] - d[v]
        irr += abs(diff)
        sigma += diff * diff
    sigma_t = sigma_t_closed_form(d)
    var = Fraction(sigma_t, g.n * g.n)
    return MeasureReport(
        n=g.n,
        m=g.m,
        delta=min(d),
        Delta=max(d),
        irr=irr,
        sigma=sigma,
        sigma_t=sigma_t,
        var_num=var.numerator,
        var_den=var.denominator,
    )


def ratio(g: Graph) -> Fraction:
    """sigma_t / sigma as an exact rational; defined for irregular graphs only."""
    rep = measure_all(g)
    if rep.sigma == 0:
        raise RegularGraphError("sigma = 0: ratio undefined for regular graphs")
    return Fraction(rep.sigma_t, rep.sigma)
