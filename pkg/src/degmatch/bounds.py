"""Sequence-level lower bounds on matchings.

Five bounds, all functions of the degree sequence alone:

* ``maximality_bound`` (k*): every maximal matching has at least this size.
* ``gale_ryser_bound`` (ell*): a finer inequality family, same guarantee.
* ``matching_lower_bound`` (noP3): lower bound on the matching number.
* ``posa_bound``: lower bound on the matching number via the count of
  low-degree vertices.
* ``vizing_bound``: m / (max degree + 1), exact rational.

Zero entries (isolated vertices) are stripped before evaluation since the
bounds concern graphs without isolated vertices; ``bound_report`` records
whether stripping happened.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from .errors import InternalConsistencyError, NotGraphicError
from .graphicality import is_graphic_eg
from .sequences import DegreeSequence

__all__ = [
    "BoundReport",
    "maximality_bound",
    "vizing_bound",
    "posa_bound",
    "gale_ryser_bound",
    "matching_lower_bound",
    "bound_report",
]


@dataclass(frozen=True)
class BoundReport:
    """All five bounds for one degree sequence, plus consistency flags."""

    k_star: int
    ell_star: int
    noP3: int
    posa: int
    vizing_num: int
    vizing_den: int
    vizing_ceil: int
    zeros_stripped: bool

    @property
    def vizing(self) -> Fraction:
        return Fraction(self.vizing_num, self.vizing_den)

    def as_record(self) -> dict:
        """Flat key/value view for serialization."""
        return {
            "k_star": self.k_star,
            "ell_star": self.ell_star,
            "noP3": self.noP3,
            "posa": self.posa,
            "vizing_num": self.vizing_num,
            "vizing_den": self.vizing_den,
            "vizing_ceil": self.vizing_ceil,
            "zeros_stripped": self.zeros_stripped,
        }


def _positive_degrees(d: DegreeSequence) -> tuple[int, ...]:
    stripped, _ = d.strip_zeros()
    return stripped.degrees


def _positive_degrees_graphic(d: DegreeSequence) -> tuple[int, ...]:
    verdict = is_graphic_eg(d)
    if not verdict.is_graphic:
        raise NotGraphicError(f"sequence {d} is not graphic", verdict)
    return _positive_degrees(d)


def maximality_bound(d: DegreeSequence) -> int:
    """Smallest k whose deficiency sum(top 2k) - m - k is non-negative.

    The deficiency is strictly increasing in k, so a linear scan stops at
    the first hit.
    """
    degs = _positive_degrees_graphic(d)
    n = len(degs)
    prefix = [0, *accumulate(degs)]
    m = prefix[n] // 2
    k = 0
    while True:
        if prefix[min(2 * k, n)] - m - k >= 0:
            return k
        k += 1
        if k > n:
            raise InternalConsistencyError("maximality bound scan ran past n")


def vizing_bound(d: DegreeSequence) -> tuple[Fraction, int]:
    """Edge count over (max degree + 1), as an exact rational and its ceiling."""
    degs = _positive_degrees(d)
    if not degs:
        return Fraction(0), 0
    m = sum(degs) // 2
    frac = Fraction(m, degs[0] + 1)
    return frac, math.ceil(frac)


def posa_bound(d: DegreeSequence) -> int:
    """ceil((n - r) / 2), where r is the smallest slack that dominates
    the low-degree counts t(q) - q + 1 over all q below (n - r) / 2."""
    degs = _positive_degrees(d)
    n = len(degs)
    asc = sorted(degs)

    def t(q: int) -> int:
        # number of vertices with degree <= q
        lo, hi = 0, n
        while lo < hi:
            mid = (lo + hi) // 2
            if asc[mid] <= q:
                lo = mid + 1
            else:
                hi = mid
        return lo

    r = n
    for ell in range(1, n + 1):
        if all(t(q) - q + 1 <= ell for q in range(0, (n - ell + 1) // 2)):
            r = ell
            break
    return (n - r + 1) // 2


def gale_ryser_bound(d: DegreeSequence) -> int:
    """Smallest ell such that the top 2*ell degrees, each capped at k after
    discounting one matching edge, dominate the next k degrees for every k."""
    degs = _positive_degrees_graphic(d)
    n = len(degs)
    prefix = [0, *accumulate(degs)]
    for ell in range(0, n // 2 + 1):
        ok = True
        for k in range(1, n - 2 * ell + 1):
            lhs = sum(min(degs[i] - 1, k) for i in range(2 * ell))
            rhs = prefix[min(2 * ell + k, n)] - prefix[2 * ell]
            if lhs < rhs:
                ok = False
                break
        if ok:
            return ell
    raise InternalConsistencyError("gale-ryser scan found no feasible ell")


def matching_lower_bound(d: DegreeSequence) -> int:
    """Smallest k with 2*sum(top k) + sum(next k) >= degree sum."""
    degs = _positive_degrees_graphic(d)
    n = len(degs)
    prefix = [0, *accumulate(degs)]
    total = prefix[n]
    for k in range(0, n + 1):
        lhs = 2 * prefix[min(k, n)] + (prefix[min(2 * k, n)] - prefix[min(k, n)])
        if lhs >= total:
            return k
    raise InternalConsistencyError("matching lower bound scan ran past n")


def bound_report(d: DegreeSequence) -> BoundReport:
    """Evaluate all five bounds and cross-check m/(2*max_degree - 1) <= k*."""
    verdict = is_graphic_eg(d)
    if not verdict.is_graphic:
        raise NotGraphicError(f"sequence {d} is not graphic", verdict)
    stripped, had_zeros = d.strip_zeros()
    degs = stripped.degrees
    k_star = maximality_bound(stripped)
    ell_star = gale_ryser_bound(stripped)
    nop3 = matching_lower_bound(stripped)
    posa = posa_bound(stripped)
    viz, viz_ceil = vizing_bound(stripped)
    m = sum(degs) // 2
    if m > 0:
        delta = degs[0]
        if m > k_star * (2 * delta - 1):
            raise InternalConsistencyError(
                f"k* fell below m/(2*max_degree - 1) on {stripped}: "
                f"m={m}, k*={k_star}, max degree={delta}"
            )
    return BoundReport(
        k_star=k_star,
        ell_star=ell_star,
        noP3=nop3,
        posa=posa,
        vizing_num=viz.numerator,
        vizing_den=viz.denominator,
        vizing_ceil=viz_ceil,
        zeros_stripped=had_zeros,
    )
