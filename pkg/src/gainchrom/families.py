"""Catalan, Shi, Linial, and intermediate gain graphs with their closed forms.

Conventions: all families live on the complete graph over [n].  Gains are
0/1/-1 per family, always oriented low vertex to high vertex:

  catalan          gains {0, 1, -1} on every pair
  hollow catalan   gains {1, -1}
  shi              gains {0, 1}
  linial           gain 1 only
  sc(G)            shi plus a gain -1 edge on every pair in G

Closed forms return exact polynomials plus the least q from which the
integral and modular counting functions are claimed to match them.  The
thresholds are data, never enforced; evaluating below them is allowed and
simply may disagree with the coloring counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .combinatorics import (
    SetPartition,
    SimpleGraph,
    cycle_count,
    descending_path_partitions,
    lower_degrees,
    normalize_partition,
    overlap_graph,
    set_partitions,
    stirling2,
)
from .chromatic import region_count
from .gaingraph import IntegralGainGraph
from .poly import ONE, Poly2, Q


class NonIntegerResult(ArithmeticError):
    """A computation that must clear to integer coefficients failed to."""


# -- constructors -----------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def catalan_graph(n: int) -> IntegralGainGraph:
    return IntegralGainGraph(n, [(i, j, g) for i, j in _pairs(n) for g in (0, 1, -1)])


def hollow_catalan_graph(n: int) -> IntegralGainGraph:
    return IntegralGainGraph(n, [(i, j, g) for i, j in _pairs(n) for g in (1, -1)])


def shi_graph(n: int) -> IntegralGainGraph:
    return IntegralGainGraph(n, [(i, j, g) for i, j in _pairs(n) for g in (0, 1)])


def linial_graph(n: int) -> IntegralGainGraph:
    return IntegralGainGraph(n, [(i, j, 1) for i, j in _pairs(n)])


def sc_graph(minus: SimpleGraph) -> IntegralGainGraph:
    """Shi graph on [n] plus a gain -1 edge on every pair of ``minus``."""
    edges = [(i, j, g) for i, j in _pairs(minus.n) for g in (0, 1)]
    edges += [(i, j, -1) for i, j in sorted(minus.edges)]
    return IntegralGainGraph(minus.n, edges)


def sc_partition_graph(pi: SetPartition) -> IntegralGainGraph:
    """sc graph on the blocks of pi, with -1 edges on overlapping block pairs."""
    return sc_graph(overlap_graph(pi)[0])


# -- closed forms -------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedForms:
    """Exact polynomials for one family instance.

    integral_min_q / modular_min_q are the least q for which the respective
    counting function is claimed to equal the polynomial; the zero-free
    polynomial is an identity, valid coefficientwise.
    """

    integral: Poly2
    modular: Poly2
    zero_free: Poly2
    integral_min_q: int
    modular_min_q: int


def _falling_from(shift: int, length: int) -> Poly2:
    """(q - shift)(q - shift - 1)...(q - shift - length + 1)."""
    out = ONE
    for i in range(length):
        out = out * (Q - (shift + i))
    return out


def shi_closed_forms(n: int) -> ClosedForms:
    """integral (q-n+1)^n from q >= n-1; modular and zero-free q(q-n)^(n-1),
    modular from q > n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    integral = (Q - (n - 1)) ** n
    zero_free = Q * (Q - n) ** (n - 1)
    return ClosedForms(integral, zero_free, zero_free, n - 1, n + 1)


def catalan_closed_forms(n: int) -> ClosedForms:
    """integral (q-n+1)_n from q >= n-1; modular and zero-free q(q-n-1)_(n-1),
    modular from q > n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    integral = _falling_from(n - 1, n)
    zero_free = Q * _falling_from(n + 1, n - 1)
    return ClosedForms(integral, zero_free, zero_free, n - 1, n + 1)


def hollow_catalan_closed_forms(n: int) -> ClosedForms:
    """integral sum_j S(n,j)(q-j+1)_j; modular and zero-free
    q sum_j S(n,j)(q-j-1)_(j-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    integral = Poly2.zero()
    zero_free = Poly2.zero()
    for j in range(1, n + 1):
        s = stirling2(n, j)
        integral = integral + s * _falling_from(j - 1, j)
        zero_free = zero_free + s * _falling_from(j + 1, j - 1)
    zero_free = Q * zero_free
    return ClosedForms(integral, zero_free, zero_free, n - 1, n + 1)


def sc_path_closed_forms(minus: SimpleGraph) -> ClosedForms:
    """Forms for sc(G) from descending path partitions of the complement:
    integral sum_r p_r (q-n+1)_r, zero-free q sum_r p_r (q-n-1)_(r-1)."""
    n = minus.n
    if n < 1:
        raise ValueError("graphs on at least one vertex only")
    p = descending_path_partitions(minus.complement())
    integral = Poly2.zero()
    zero_free = Poly2.zero()
    for r in range(1, n + 1):
        if not p[r]:
            continue
        integral = integral + p[r] * _falling_from(n - 1, r)
        zero_free = zero_free + p[r] * _falling_from(n + 1, r - 1)
    zero_free = Q * zero_free
    return ClosedForms(integral, zero_free, zero_free, n - 1, n + 1)


def sc_partition_closed_forms(pi: SetPartition) -> ClosedForms:
    """Forms for sc of the overlap graph of pi, in terms of the lower degrees:
    integral prod_i (q-k+1-d_i), zero-free q prod_{i>=2} (q-k-d_i)."""
    pi = normalize_partition(pi)
    k = len(pi)
    if k == 0:
        return ClosedForms(ONE, ONE, ONE, 0, 1)
    d = lower_degrees(pi)
    integral = ONE
    zero_free = Q
    for i in range(1, k + 1):
        integral = integral * (Q - (k - 1 + d[i - 1]))
        if i >= 2:
            zero_free = zero_free * (Q - (k + d[i - 1]))
    dmax = max(d)
    return ClosedForms(integral, zero_free, zero_free, k - 1 + dmax, k + dmax)


def linial_closed_forms(n: int) -> ClosedForms:
    """Sums of the sc partition forms over all partitions of [n]; integral
    valid from q >= n-1, modular from q >= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    integral = Poly2.zero()
    zero_free = Poly2.zero()
    for pi in set_partitions(n):
        forms = sc_partition_closed_forms(pi)
        integral = integral + forms.integral
        zero_free = zero_free + forms.zero_free
    return ClosedForms(integral, zero_free, zero_free, n - 1, n)


def linial_athanasiadis(n: int) -> Poly2:
    """Independent cross-check form (q/2) sum_j binom(n,j) ((q-j)/2)^(n-1).

    Computed with exact rationals; raises NonIntegerResult if it fails to
    clear to integer coefficients.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    acc: dict[int, Fraction] = {}
    for j in range(n + 1):
        w = comb(n, j)
        # (q - j)^(n-1) expanded by the binomial theorem
        for i in range(n):
            c = Fraction(w * comb(n - 1, i) * (-j) ** (n - 1 - i))
            acc[i] = acc.get(i, Fraction(0)) + c
    scale = Fraction(1, 2**n)
    terms: dict[tuple[int, int], int] = {}
    for i, c in acc.items():
        value = c * scale
        if value == 0:
            continue
        if value.denominator != 1:
            raise NonIntegerResult(f"coefficient of q^{i + 1} is {value}")
        terms[(i + 1, 0)] = int(value)
    return Poly2(terms)


@dataclass(frozen=True)
class RegionCounts:
    """Catalan region count both ways, with the hollow counts used by the
    recurrence r_n = sum_j c(n,j) r'_j."""

    direct: int
    via_recurrence: int
    hollow: tuple[int, ...]  # hollow[j-1] = regions of the hollow graph on j vertices


def catalan_region_counts(n: int, max_edges: int = 26) -> RegionCounts:
    if n < 1:
        raise ValueError("n must be >= 1")
    hollow = tuple(region_count(hollow_catalan_graph(j), max_edges) for j in range(1, n + 1))
    via = sum(cycle_count(n, j) * hollow[j - 1] for j in range(1, n + 1))
    direct = region_count(catalan_graph(n), max_edges)
    return RegionCounts(direct, via, hollow)


FAMILY_BUILDERS = {
    "catalan": catalan_graph,
    "hollow-catalan": hollow_catalan_graph,
    "shi": shi_graph,
    "linial": linial_graph,
}

FAMILY_CLOSED_FORMS = {
    "catalan": catalan_closed_forms,
    "hollow-catalan": hollow_catalan_closed_forms,
    "shi": shi_closed_forms,
    "linial": linial_closed_forms,
}
