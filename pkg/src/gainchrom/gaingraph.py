"""Integral gain graphs and their structural operations.

A gain graph is a multigraph whose oriented edges carry integer gains;
reversing an edge negates its gain, so one stored triple represents both
orientations.  Canonical storage keeps every link as (tail, head, gain)
with tail < head and every loop with nonnegative gain, and the edge list
sorted, so graphs built from any orientations of the same edges compare
equal.

Vertices are labelled 1..n (n = 0 is legal: the empty graph is the
multiplicative identity for every chromatic function here).  Graphs are
immutable; every operation returns a new graph.  Edge subsets are passed
around as collections of indices into ``edges`` so that parallel copies
stay distinguishable.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from itertools import permutations

Edge = tuple[int, int, int]


class NonNeutralEdgeInSet(ValueError):
    """Raised when a gain-0-only contraction receives an edge with gain != 0."""


class UnbalancedSet(ValueError):
    """Raised when a balanced-set contraction receives an unbalanced edge set."""


def _canonical_edge(n: int, tail: int, head: int, gain: int) -> Edge:
    if not (1 <= tail <= n and 1 <= head <= n):
        raise ValueError(f"edge ({tail},{head},{gain}) out of range for n={n}")
    if tail == head:
        return (tail, head, abs(gain))
    if tail > head:
        return (head, tail, -gain)
    return (tail, head, gain)


class IntegralGainGraph:
    """Multigraph on vertices 1..n with an integer gain per oriented edge."""

    __slots__ = ("n", "edges", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Sequence[frozenset[int]] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(
            sorted(_canonical_edge(n, t, h, g) for t, h, g in edges)
        )
        if labels is not None:
            labels = tuple(frozenset(b) for b in labels)
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
        self.labels: tuple[frozenset[int], ...] | None = labels

    # -- identity & serialization -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegralGainGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"IntegralGainGraph(n={self.n}, edges={list(self.edges)!r})"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "IntegralGainGraph":
        edges = data.get("edges", [])
        return cls(int(data["n"]), [(int(t), int(h), int(g)) for t, h, g in edges])

    def effective_labels(self) -> tuple[frozenset[int], ...]:
        """Per-vertex provenance sets; each vertex names itself when unset."""
        if self.labels is not None:
            return self.labels
        return tuple(frozenset({v}) for v in range(1, self.n + 1))

    # -- basic queries --------------------------------------------------------

    def neutral_indices(self) -> tuple[int, ...]:
        return tuple(i for i, (_, _, g) in enumerate(self.edges) if g == 0)

    def has_neutral_loop(self) -> bool:
        return any(t == h and g == 0 for t, h, g in self.edges)

    def underlying_pairs(self, indices: Iterable[int] | None = None) -> list[tuple[int, int]]:
        """Endpoint pairs (gains dropped), loops included."""
        idx = range(len(self.edges)) if indices is None else indices
        return [(self.edges[i][0], self.edges[i][1]) for i in idx]

    # -- component / balance machinery ---------------------------------------

    def _component_data(
        self, indices: Iterable[int] | None, root_pick: Callable[[list[int]], int] | None = None
    ) -> tuple[list[int], list[list[int]], list[int], set[int]]:
        """Split (V, selected edges) into components with DFS potentials.

        Returns (component id per vertex, components ordered by least vertex,
        potential per vertex relative to the component root, ids of components
        containing a gain-inconsistent circle).  Potentials satisfy
        pot[head] - pot[tail] == gain along every consistent selected edge.
        """
        idx = list(range(len(self.edges))) if indices is None else sorted(set(indices))
        adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.n + 1)}
        for i in idx:
            t, h, g = self.edges[i]
            if t != h:
                adjacency[t].append((h, g))
                adjacency[h].append((t, -g))
        comp_of = [0] * (self.n + 1)
        pot = [0] * (self.n + 1)
        comps: list[list[int]] = []
        seen = [False] * (self.n + 1)
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            members = [start]
            while stack:
                v = stack.pop()
                for w, g in adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        pot[w] = pot[v] + g
                        members.append(w)
                        stack.append(w)
            comps.append(sorted(members))
        if root_pick is not None:
            # Re-run the potential assignment from the chosen roots.
            for members in comps:
                root = root_pick(members)
                if root not in members:
                    raise ValueError("root_pick must choose a vertex of the component")
                base = pot[root]
                for v in members:
                    pot[v] -= base
        for ci, members in enumerate(comps, start=1):
            for v in members:
                comp_of[v] = ci
        unbalanced: set[int] = set()
        for i in idx:
            t, h, g = self.edges[i]
            if pot[h] - pot[t] != g:
                unbalanced.add(comp_of[t])
        return comp_of, comps, pot, unbalanced

    def is_balanced(self, indices: Iterable[int] | None = None) -> bool:
        """True iff every circle inside the selected edges has total gain 0."""
        _, _, _, unbalanced = self._component_data(indices)
        return not unbalanced

    def components_stats(self, indices: Iterable[int] | None = None) -> tuple[int, int]:
        """(component count, balanced component count) of the spanning subgraph."""
        _, comps, _, unbalanced = self._component_data(indices)
        return len(comps), len(comps) - len(unbalanced)

    def max_circle_gain(self) -> int | None:
        """Largest |gain| over all circles (loops, digons, longer cycles); None if acyclic."""
        best: int | None = None

        def consider(value: int) -> None:
            nonlocal best
            if best is None or value > best:
                best = value

        adjacency: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(1, self.n + 1)}
        for i, (t, h, g) in enumerate(self.edges):
            if t == h:
                consider(abs(g))
            else:
                adjacency[t].append((h, g, i))
                adjacency[h].append((t, -g, i))

        on_path = [False] * (self.n + 1)

        def extend(start: int, v: int, gain: int, used: set[int], depth: int) -> None:
            for w, gw, ei in adjacency[v]:
                if ei in used:
                    continue
                if w == start and depth >= 1:
                    consider(abs(gain + gw))
                elif w > start and not on_path[w]:
                    on_path[w] = True
                    used.add(ei)
                    extend(start, w, gain + gw, used, depth + 1)
                    used.discard(ei)
                    on_path[w] = False

        for start in range(1, self.n + 1):
            extend(start, start, 0, set(), 0)
        return best

    # -- rewriting operations --------------------------------------------------

    def switch(self, eta: Mapping[int, int] | Sequence[int]) -> "IntegralGainGraph":
        """Re-gain every edge by -eta(tail) + gain + eta(head)."""
        if isinstance(eta, Mapping):
            values = [0] * (self.n + 1)
            for v in range(1, self.n + 1):
                if v not in eta:
                    raise ValueError(f"switching function undefined on vertex {v}")
                values[v] = eta[v]
        else:
            if len(eta) != self.n:
                raise ValueError("switching sequence must list a value per vertex")
            values = [0, *eta]
        return IntegralGainGraph(
            self.n,
            [(t, h, -values[t] + g + values[h]) for t, h, g in self.edges],
            self.labels,
        )

    def delete_edges(self, indices: Iterable[int]) -> "IntegralGainGraph":
        drop = set(indices)
        keep = [e for i, e in enumerate(self.edges) if i not in drop]
        return IntegralGainGraph(self.n, keep, self.labels)

    def delete_neutral_edges(self) -> "IntegralGainGraph":
        return self.delete_edges(self.neutral_indices())

    def _contract_blocks(
        self, blocks: list[list[int]], drop: frozenset[int]
    ) -> "IntegralGainGraph":
        blocks = sorted((sorted(b) for b in blocks), key=lambda b: b[0])
        vmap = [0] * (self.n + 1)
        for bi, members in enumerate(blocks, start=1):
            for v in members:
                vmap[v] = bi
        old_labels = self.effective_labels()
        labels = tuple(
            frozenset().union(*(old_labels[v - 1] for v in members)) for members in blocks
        )
        new_edges = [
            (vmap[t], vmap[h], g) for i, (t, h, g) in enumerate(self.edges) if i not in drop
        ]
        return IntegralGainGraph(len(blocks), new_edges, labels)

    def contract_neutral_set(self, indices: Iterable[int]) -> "IntegralGainGraph":
        """Identify the components of a gain-0 edge set and remove those edges.

        The contracted vertices are ordered (and named, via labels) by least
        original vertex.
        """
        drop = frozenset(indices)
        for i in drop:
            if self.edges[i][2] != 0:
                raise NonNeutralEdgeInSet(f"edge {self.edges[i]} has nonzero gain")
        _, comps, _, _ = self._component_data(drop)
        return self._contract_blocks(comps, drop)

    def contract_balanced_set(
        self,
        indices: Iterable[int],
        root_pick: Callable[[list[int]], int] | None = None,
    ) -> "IntegralGainGraph":
        """Contract a balanced edge set by first switching it neutral.

        The switching function used is the one vanishing at the minimum
        potential of each component and nonnegative elsewhere, which makes
        the result independent of ``root_pick`` (the per-component DFS root;
        exposed so tests can exercise that independence).
        """
        sel = frozenset(indices)
        _, comps, pot, unbalanced = self._component_data(sel, root_pick)
        if unbalanced:
            raise UnbalancedSet("edge set contains a circle with nonzero gain")
        eta = [0] * (self.n + 1)
        for members in comps:
            low = min(-pot[v] for v in members)
            for v in members:
                eta[v] = -pot[v] - low
        switched = self.switch(eta[1:])
        return switched.contract_neutral_set(sel)

    def contract_partition(self, blocks: Iterable[Iterable[int]]) -> "IntegralGainGraph":
        """Identify each block to one vertex, keeping every edge and its gain."""
        blocks = [sorted(set(b)) for b in blocks]
        flat = sorted(v for b in blocks for v in b)
        if flat != list(range(1, self.n + 1)):
            raise ValueError("blocks must partition the vertex set")
        return self._contract_blocks(blocks, frozenset())

    def simplify(self) -> "IntegralGainGraph":
        """Keep one edge per parallel class with equal gain; loops are kept."""
        return IntegralGainGraph(self.n, sorted(set(self.edges)), self.labels)

    def add_neutral_complete(self) -> "IntegralGainGraph":
        """Add a gain-0 link on every vertex pair that lacks one."""
        present = {(t, h) for t, h, g in self.edges if g == 0 and t != h}
        extra = [
            (i, j, 0)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if (i, j) not in present
        ]
        return IntegralGainGraph(self.n, list(self.edges) + extra, self.labels)

    def without_nonneutral_loops(self) -> "IntegralGainGraph":
        keep = [e for e in self.edges if not (e[0] == e[1] and e[2] != 0)]
        return IntegralGainGraph(self.n, keep, self.labels)

    # -- graph building helpers -------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "IntegralGainGraph":
        """Subgraph induced by a vertex subset, relabelled 1..|W| in order."""
        verts = sorted(set(vertices))
        vmap = {v: i for i, v in enumerate(verts, start=1)}
        old_labels = self.effective_labels()
        edges = [(vmap[t], vmap[h], g) for t, h, g in self.edges if t in vmap and h in vmap]
        labels = tuple(old_labels[v - 1] for v in verts)
        return IntegralGainGraph(len(verts), edges, labels)

    def disjoint_union(self, other: "IntegralGainGraph") -> "IntegralGainGraph":
        shift = self.n
        edges = list(self.edges) + [(t + shift, h + shift, g) for t, h, g in other.edges]
        labels = None
        if self.labels is not None or other.labels is not None:
            labels = self.effective_labels() + other.effective_labels()
        return IntegralGainGraph(self.n + other.n, edges, labels)

    def relabel(self, perm: Mapping[int, int]) -> "IntegralGainGraph":
        """Apply a vertex permutation (labels are reset)."""
        if sorted(perm) != list(range(1, self.n + 1)) or sorted(perm.values()) != list(
            range(1, self.n + 1)
        ):
            raise ValueError("perm must permute 1..n")
        return IntegralGainGraph(self.n, [(perm[t], perm[h], g) for t, h, g in self.edges])

    def canonical_iso_key(self) -> tuple:
        """Least relabelled edge tuple over all vertex permutations (small n only)."""
        if self.n > 8:
            raise ValueError("isomorphism canonicalization is exponential; n > 8 refused")
        best = None
        for images in permutations(range(1, self.n + 1)):
            perm = {v: images[v - 1] for v in range(1, self.n + 1)}
            relabelled = tuple(
                sorted(_canonical_edge(self.n, perm[t], perm[h], g) for t, h, g in self.edges)
            )
            if best is None or relabelled < best:
                best = relabelled
        return (self.n, best)

    def reduce_mod(self, modulus: int) -> "ModularGainGraph":
        return ModularGainGraph(self.n, self.edges, modulus)


def _canonical_mod_edge(n: int, tail: int, head: int, gain: int, modulus: int) -> Edge:
    if not (1 <= tail <= n and 1 <= head <= n):
        raise ValueError(f"edge ({tail},{head},{gain}) out of range for n={n}")
    if tail == head:
        return (tail, head, gain % modulus)
    if tail > head:
        return (head, tail, (-gain) % modulus)
    return (tail, head, gain % modulus)


class ModularGainGraph:
    """Gain graph with gains in Z_m, stored in the range [0, m)."""

    __slots__ = ("n", "modulus", "edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), modulus: int = 1):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        self.n = n
        self.modulus = modulus
        self.edges: tuple[Edge, ...] = tuple(
            sorted(_canonical_mod_edge(n, t, h, g, modulus) for t, h, g in edges)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModularGainGraph):
            return NotImplemented
        return (self.n, self.modulus, self.edges) == (other.n, other.modulus, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.modulus, self.edges))

    def __repr__(self) -> str:
        return f"ModularGainGraph(n={self.n}, m={self.modulus}, edges={list(self.edges)!r})"
