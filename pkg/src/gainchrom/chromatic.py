"""Coloring oracles and the subset-expansion chromatic polynomials.

The counting functions enumerate proper colorations directly (backtracking
with incremental constraint checks); they are the ground truth every closed
form and identity is tested against.  The polynomial functions evaluate the
alternating sum over edge subsets

    sum over S of (-1)^|S| q^(balanced components of S) z^(other components of S)

with a rollback union-find carrying per-vertex potentials, so each subset
costs amortized constant work.  The zero-free variant prunes to balanced
subsets only (unbalance is monotone under adding edges), which keeps large
instances feasible.
"""

from __future__ import annotations

from collections.abc import Iterator

from .gaingraph import IntegralGainGraph, ModularGainGraph
from .poly import Poly2


class TooManyEdges(RuntimeError):
    """Subset expansion refused: 2^|E| would exceed the configured guard."""


# -- coloring oracles -----------------------------------------------------------


def count_integral_colorings(g: IntegralGainGraph, q: int) -> int:
    """Colorations k: V -> [q] with k(head) != k(tail) + gain on every edge."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = g.n
    if n == 0:
        return 1
    if q == 0:
        return 0
    cons: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for t, h, gain in g.edges:
        if t == h:
            if gain == 0:
                return 0
        else:
            cons[h].append((t, gain))
    color = [0] * (n + 1)

    def count_from(v: int) -> int:
        forbidden = {color[t] + gain for t, gain in cons[v]}
        if v == n:
            return q - sum(1 for c in forbidden if 0 <= c < q)
        total = 0
        for c in range(q):
            if c not in forbidden:
                color[v] = c
                total += count_from(v + 1)
        return total

    return count_from(1)


def enumerate_integral_colorings(g: IntegralGainGraph, q: int) -> Iterator[dict[int, int]]:
    """Proper colorations as {vertex: color} dicts, colors in 1..q."""
    n = g.n
    if n == 0:
        if q >= 0:
            yield {}
        return
    if q <= 0:
        return
    cons: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for t, h, gain in g.edges:
        if t == h:
            if gain == 0:
                return
        else:
            cons[h].append((t, gain))
    color = [0] * (n + 1)

    def walk(v: int) -> Iterator[dict[int, int]]:
        if v > n:
            yield {u: color[u] for u in range(1, n + 1)}
            return
        forbidden = {color[t] + gain for t, gain in cons[v]}
        for c in range(1, q + 1):
            if c not in forbidden:
                color[v] = c
                yield from walk(v + 1)

    yield from walk(1)


def count_modular_colorings(g: IntegralGainGraph, q: int) -> int:
    """Colorations k: V -> Z_q with k(head) != k(tail) + gain (mod q)."""
    if q < 1:
        raise ValueError("q must be positive")
    n = g.n
    if n == 0:
        return 1
    cons: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for t, h, gain in g.edges:
        if t == h:
            if gain % q == 0:
                return 0
        else:
            cons[h].append((t, gain))
    color = [0] * (n + 1)

    def count_from(v: int) -> int:
        forbidden = {(color[t] + gain) % q for t, gain in cons[v]}
        if v == n:
            return q - len(forbidden)
        total = 0
        for c in range(q):
            if c not in forbidden:
                color[v] = c
                total += count_from(v + 1)
        return total

    return count_from(1)


def count_multizero_colorings(g: ModularGainGraph, k: int, z: int) -> int:
    """Proper colorations by (Z_m x [k]) union [z].

    An edge (t, h, gain) excludes equal null colors at both ends, and paired
    colors with equal index whose group parts differ by the gain mod m.  At a
    loop the null clause is violated outright, so any loop bans null colors
    at its vertex, and a gain-0 (mod m) loop bans every color.  Colors are
    encoded 0..z-1 for nulls, then z + index*m + group.
    """
    if k < 0 or z < 0:
        raise ValueError("k and z must be nonnegative")
    n, m = g.n, g.modulus
    if n == 0:
        return 1
    q = k * m + z
    if q == 0:
        return 0
    cons: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    no_null = [False] * (n + 1)
    for t, h, gain in g.edges:
        if t == h:
            if gain % m == 0:
                return 0
            no_null[t] = True
        else:
            cons[h].append((t, gain))
    color = [0] * (n + 1)

    def clash(ct: int, gain: int) -> int:
        if ct < z:
            return ct
        idx, grp = divmod(ct - z, m)
        return z + idx * m + (grp + gain) % m

    def count_from(v: int) -> int:
        lo = z if no_null[v] else 0
        forbidden = {clash(color[t], gain) for t, gain in cons[v]}
        if v == n:
            return (q - lo) - sum(1 for f in forbidden if f >= lo)
        total = 0
        for c in range(lo, q):
            if c not in forbidden:
                color[v] = c
                total += count_from(v + 1)
        return total

    return count_from(1)


# -- rollback union-find with potentials -----------------------------------------


class _GainDSU:
    """Union-find over vertices with gain potentials and an undo journal.

    Tracks component count and how many components contain an inconsistent
    (nonzero-gain) circle; exponents of the expansion terms read directly off
    those counters.
    """

    __slots__ = ("parent", "rank", "offset", "unbal", "mod", "n_comp", "n_unbal", "journal")

    def __init__(self, n: int, modulus: int | None = None):
        self.parent = list(range(n + 1))
        self.rank = [0] * (n + 1)
        self.offset = [0] * (n + 1)  # potential relative to parent
        self.unbal = [False] * (n + 1)  # meaningful at roots
        self.mod = modulus
        self.n_comp = n
        self.n_unbal = 0
        self.journal: list[tuple] = []

    def find(self, v: int) -> tuple[int, int]:
        pot = 0
        while self.parent[v] != v:
            pot += self.offset[v]
            v = self.parent[v]
        if self.mod is not None:
            pot %= self.mod
        return v, pot

    def add_edge(self, t: int, h: int, gain: int) -> None:
        rt, pt = self.find(t)
        rh, ph = self.find(h)
        if rt == rh:
            diff = ph - pt - gain
            consistent = (diff % self.mod == 0) if self.mod is not None else (diff == 0)
            if consistent or self.unbal[rt]:
                self.journal.append((0,))
            else:
                self.unbal[rt] = True
                self.n_unbal += 1
                self.journal.append((1, rt))
            return
        if self.rank[rt] >= self.rank[rh]:
            parent_root, child_root = rt, rh
            delta = gain + pt - ph  # so that pot(head) - pot(tail) == gain
        else:
            parent_root, child_root = rh, rt
            delta = ph - pt - gain
        if self.mod is not None:
            delta %= self.mod
        bumped = self.rank[parent_root] == self.rank[child_root]
        if bumped:
            self.rank[parent_root] += 1
        ua, ub = self.unbal[parent_root], self.unbal[child_root]
        self.parent[child_root] = parent_root
        self.offset[child_root] = delta
        if ub and not ua:
            self.unbal[parent_root] = True
        if ua and ub:
            self.n_unbal -= 1
        self.n_comp -= 1
        self.journal.append((2, child_root, parent_root, bumped, ua, ub))

    def mark(self) -> int:
        return len(self.journal)

    def rollback(self, mark: int) -> None:
        while len(self.journal) > mark:
            entry = self.journal.pop()
            kind = entry[0]
            if kind == 0:
                continue
            if kind == 1:
                _, root = entry
                self.unbal[root] = False
                self.n_unbal -= 1
                continue
            _, child_root, parent_root, bumped, ua, ub = entry
            self.parent[child_root] = child_root
            self.offset[child_root] = 0
            if bumped:
                self.rank[parent_root] -= 1
            self.unbal[parent_root] = ua
            self.unbal[child_root] = ub
            if ua and ub:
                self.n_unbal += 1
            self.n_comp += 1


def _expand_subsets(
    n: int,
    edges: tuple[tuple[int, int, int], ...],
    modulus: int | None,
    balanced_only: bool,
) -> dict[tuple[int, int], int]:
    """Signed counts of (balanced components, unbalanced components) over subsets."""
    terms: dict[tuple[int, int], int] = {}
    dsu = _GainDSU(n, modulus)
    m = len(edges)

    def rec(i: int, sign: int) -> None:
        if i == m:
            key = (dsu.n_comp - dsu.n_unbal, dsu.n_unbal)
            value = terms.get(key, 0) + sign
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
            return
        rec(i + 1, sign)
        mk = dsu.mark()
        dsu.add_edge(*edges[i])
        if not (balanced_only and dsu.n_unbal):
            rec(i + 1, -sign)
        dsu.rollback(mk)

    rec(0, 1)
    return terms


def _modulus_of(g: IntegralGainGraph | ModularGainGraph) -> int | None:
    return getattr(g, "modulus", None)


def total_poly(g: IntegralGainGraph | ModularGainGraph, max_edges: int = 26) -> Poly2:
    """The bivariate subset-expansion polynomial; q counts balanced components,
    z the unbalanced ones.  Guarded by max_edges since the sum has 2^|E| terms."""
    if len(g.edges) > max_edges:
        raise TooManyEdges(f"{len(g.edges)} edges exceed the expansion bound {max_edges}")
    terms = _expand_subsets(g.n, g.edges, _modulus_of(g), balanced_only=False)
    return Poly2(terms)


def zero_free_poly(g: IntegralGainGraph | ModularGainGraph, max_edges: int = 26) -> Poly2:
    """The z = 0 slice of total_poly, summed over balanced subsets only."""
    if len(g.edges) > max_edges:
        raise TooManyEdges(f"{len(g.edges)} edges exceed the expansion bound {max_edges}")
    terms = _expand_subsets(g.n, g.edges, _modulus_of(g), balanced_only=True)
    return Poly2(terms)


def chromatic_poly(g: IntegralGainGraph | ModularGainGraph, max_edges: int = 26) -> Poly2:
    """The z = 1 slice of total_poly, univariate in q."""
    return total_poly(g, max_edges).substitute_z(1)


def ordinary_chromatic_poly(n: int, pairs: list[tuple[int, int]]) -> Poly2:
    """Chromatic polynomial of an ordinary multigraph via the subset expansion.

    Loops make the polynomial vanish (their subset pairs cancel exactly).
    """
    edges = tuple((a, b, 0) for a, b in pairs)
    terms = _expand_subsets(n, edges, None, balanced_only=False)
    return Poly2(terms)


def region_count(g: IntegralGainGraph, max_edges: int = 26) -> int:
    """(-1)^n times the zero-free polynomial at q = -1: chambers of the
    arrangement of hyperplanes x_head = x_tail + gain."""
    return (-1) ** g.n * zero_free_poly(g, max_edges).evaluate(-1, 0)
