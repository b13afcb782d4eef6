"""Set partitions, Stirling numbers, flats, and overlap-degree machinery.

Partitions of [n] are tuples of tuples: blocks sorted internally, blocks
ordered by least element.  Enumeration follows restricted-growth order, so
iteration is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

SetPartition = tuple[tuple[int, ...], ...]


class InvalidSequence(ValueError):
    """Raised when a degree sequence fails the realizability shape conditions."""


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n], blocks ordered by least element; Bell(n) of them."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    blocks: list[list[int]] = [[] for _ in range(n)]

    def rec(i: int, nblocks: int) -> Iterator[SetPartition]:
        if i > n:
            yield tuple(tuple(b) for b in blocks[:nblocks])
            return
        for b in range(nblocks):
            blocks[b].append(i)
            yield from rec(i + 1, nblocks)
            blocks[b].pop()
        blocks[nblocks].append(i)
        yield from rec(i + 1, nblocks + 1)
        blocks[nblocks].pop()

    yield from rec(1, 0)


def normalize_partition(blocks: Iterable[Iterable[int]]) -> SetPartition:
    out = sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[0])
    return tuple(out)


def is_partition_of(pi: SetPartition, n: int) -> bool:
    flat = sorted(v for b in pi for v in b)
    return flat == list(range(1, n + 1))


def bell_number(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Partitions of [n] into k blocks."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def cycle_count(n: int, k: int) -> int:
    """Permutations of [n] with k cycles (unsigned Stirling numbers of the first kind)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return (n - 1) * cycle_count(n - 1, k) + cycle_count(n - 1, k - 1)


def stirling1_signed(n: int, k: int) -> int:
    return (-1) ** (n - k) * cycle_count(n, k)


def partition_mobius(pi: SetPartition) -> int:
    """Mobius value of pi over the all-singletons partition: prod (-1)^(|B|-1) (|B|-1)!."""
    out = 1
    for block in pi:
        b = len(block)
        sign = -1 if (b - 1) % 2 else 1
        fact = 1
        for i in range(2, b):
            fact *= i
        out *= sign * fact
    return out


# -- closed edge sets (flats) of an ordinary multigraph ------------------------


def _pair_components(n: int, pairs: list[tuple[int, int]], subset: Iterable[int]) -> list[int]:
    comp = list(range(n + 1))

    def find(v: int) -> int:
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for i in subset:
        a, b = pairs[i]
        ra, rb = find(a), find(b)
        if ra != rb:
            comp[max(ra, rb)] = min(ra, rb)
    return [find(v) for v in range(n + 1)]


def closure(n: int, pairs: list[tuple[int, int]], subset: Iterable[int]) -> frozenset[int]:
    """Indices of every edge whose endpoints the subset connects (loops always qualify)."""
    roots = _pair_components(n, pairs, subset)
    return frozenset(i for i, (a, b) in enumerate(pairs) if roots[a] == roots[b])


def closed_edge_sets(n: int, pairs: list[tuple[int, int]]) -> list[frozenset[int]]:
    """All closure-fixed edge subsets, smallest first."""
    flats = []
    m = len(pairs)
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            s = frozenset(subset)
            if closure(n, pairs, s) == s:
                flats.append(s)
    return flats


def flat_mobius(n: int, pairs: list[tuple[int, int]], flat: frozenset[int]) -> int:
    """sum of (-1)^|S| over subsets S with closure(S) == flat.

    Equals the Mobius value from the empty set in the lattice of flats, and
    is identically 0 whenever the empty set is not closed (loops present).
    """
    total = 0
    members = sorted(flat)
    for size in range(len(members) + 1):
        for subset in combinations(members, size):
            if closure(n, pairs, subset) == flat:
                total += -1 if size % 2 else 1
    return total


# -- simple graphs -------------------------------------------------------------


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless graph on vertices 1..n with unordered edges (i, j), i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "SimpleGraph":
        norm = set()
        for a, b in pairs:
            if a == b:
                raise ValueError("simple graphs have no loops")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            norm.add((min(a, b), max(a, b)))
        return cls(n, frozenset(norm))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def complement(self) -> "SimpleGraph":
        comp = {
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if (i, j) not in self.edges
        }
        return SimpleGraph(self.n, frozenset(comp))


def stable_partitions(n: int, pairs: Iterable[tuple[int, int]]) -> Iterator[SetPartition]:
    """Partitions of [n] whose blocks induce none of the given edges.

    Accepts multigraph pairs; a loop makes every block containing its vertex
    unstable, so a loopy graph has no stable partitions.
    """
    edgeset = set()
    for a, b in pairs:
        if a == b:
            return
        edgeset.add((min(a, b), max(a, b)))
    for pi in set_partitions(n):
        if all(
            (block[i], block[j]) not in edgeset
            for block in pi
            for i in range(len(block))
            for j in range(i + 1, len(block))
        ):
            yield pi


# -- descending paths and overlap graphs ---------------------------------------


def descending_path_partitions(g: SimpleGraph) -> list[int]:
    """p[r] = partitions of [n] into r blocks, each a descending path of g.

    A block qualifies iff its elements in decreasing order form a path; a
    singleton always qualifies.  Index 0 is used only for n = 0.
    """
    feasible: dict[tuple[int, ...], bool] = {}

    def block_ok(block: tuple[int, ...]) -> bool:
        cached = feasible.get(block)
        if cached is None:
            desc = sorted(block, reverse=True)
            cached = all(g.has_edge(desc[i], desc[i + 1]) for i in range(len(desc) - 1))
            feasible[block] = cached
        return cached

    counts = [0] * (g.n + 1)
    for pi in set_partitions(g.n):
        if all(block_ok(b) for b in pi):
            counts[len(pi)] += 1
    return counts


def overlap_graph(pi: SetPartition) -> tuple[SimpleGraph, tuple[tuple[int, int], ...]]:
    """Interval graph of the block spans [min B_i, max B_i], blocks by least element."""
    pi = normalize_partition(pi)
    intervals = tuple((b[0], b[-1]) for b in pi)
    k = len(pi)
    edges = {
        (i, j)
        for i in range(1, k + 1)
        for j in range(i + 1, k + 1)
        if intervals[j - 1][0] <= intervals[i - 1][1] and intervals[i - 1][0] <= intervals[j - 1][1]
    }
    return SimpleGraph(k, frozenset(edges)), intervals


def lower_degrees(pi: SetPartition) -> tuple[int, ...]:
    """d_i = number of earlier blocks whose span overlaps block i's span."""
    g, _ = overlap_graph(pi)
    return tuple(sum(1 for j in range(1, i) if g.has_edge(j, i)) for i in range(1, g.n + 1))


def ascents(d: tuple[int, ...]) -> frozenset[int]:
    """Positions i (1-based) with d_{i+1} > d_i."""
    return frozenset(i + 1 for i in range(len(d) - 1) if d[i + 1] > d[i])


def _shape_ok(d: tuple[int, ...]) -> bool:
    if not d:
        return True
    if d[0] != 0 or any(x < 0 for x in d):
        return False
    return all(d[i + 1] <= d[i] + 1 for i in range(len(d) - 1))


def is_vertex_order_lds(d: tuple[int, ...], n: int) -> bool:
    """Whether d arises as the lower degree sequence, in block order, of some
    partition of [n]."""
    return _shape_ok(d) and n >= len(d) + len(ascents(d))


def is_increasing_lds(d: tuple[int, ...], n: int) -> bool:
    """Whether the nondecreasing sequence d arises as a sorted lower degree
    sequence of some partition of [n]."""
    if any(d[i + 1] < d[i] for i in range(len(d) - 1)):
        return False
    return _shape_ok(d) and n >= len(d) + (d[-1] if d else 0)


def realize_lds(d: tuple[int, ...]) -> SetPartition:
    """A partition of [k + #ascents] whose vertex-order lower degrees equal d.

    Blocks are the two-point sets {a_i, b_i} with
      m_i = min{j >= i : d_{j+1} <= d_i}   (d_{k+1} = 0)
      t_i = #ascents at positions <= i
      a_i = i + t_{i-1} - d_i,  b_i = m_i + t_{m_i} - d_i.
    """
    if not _shape_ok(d):
        raise InvalidSequence(f"{d} is not a realizable lower degree sequence")
    k = len(d)
    if k == 0:
        return ()
    asc = ascents(d)
    t = [0] * (k + 1)
    for i in range(1, k + 1):
        t[i] = t[i - 1] + (1 if i in asc else 0)
    dd = list(d) + [0]  # dd[i] = d_{i+1}; trailing 0 is d_{k+1}

    def m_of(i: int) -> int:
        j = i
        while dd[j] > dd[i - 1]:  # compare d_{j+1} with d_i
            j += 1
        return j

    blocks = []
    for i in range(1, k + 1):
        mi = m_of(i)
        a = i + t[i - 1] - d[i - 1]
        b = mi + t[mi] - d[i - 1]
        blocks.append({a, b})
    return normalize_partition(blocks)
