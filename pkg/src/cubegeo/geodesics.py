"""Geodesic paths in hypercube subgraphs.

A geodesic is a path whose edge directions are pairwise distinct
(equivalently, a shortest path in Q_n between its endpoints). An
increasing geodesic additionally uses directions in strictly increasing
order with respect to a direction ordering.

The central algorithm is a direction-sweep dynamic program: process the
direction classes of the ordering one at a time, relaxing every edge of a
class simultaneously from pre-class values. Two edges in the same
direction are vertex-disjoint, so the batch update is well defined and
the whole table costs O(|E|). The table's per-vertex totals always sum to
at least 2|E(G)|, which is the inequality the verification harness checks
on every generated instance.

All functions are pure; tables and paths are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .core import CubeSubgraph, Edge, average_degree

__all__ = [
    "DirectionOrdering",
    "GeodesicPath",
    "IncreasingGeodesic",
    "LTable",
    "brute_force_increasing_lengths",
    "brute_force_longest_geodesic",
    "count_increasing_geodesics",
    "enumerate_geodesics_of_length",
    "extract_increasing_geodesic",
    "greedy_geodesic",
    "increasing_geodesic_table",
    "longest_geodesic_lower_bound",
    "random_ordering",
]

#: Default caps for the exhaustive oracles: an instance is in range when
#: n <= ORACLE_MAX_N or |E| <= ORACLE_MAX_EDGES.
ORACLE_MAX_N = 8
ORACLE_MAX_EDGES = 200


@dataclass(frozen=True)
class DirectionOrdering:
    """A permutation of the directions [0, n). ``perm[r]`` is the
    direction of rank r; a path is increasing with respect to the
    ordering when the ranks of its edge directions strictly increase."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation of 0..{len(self.perm) - 1}")

    @classmethod
    def identity(cls, n: int) -> "DirectionOrdering":
        return cls(tuple(range(n)))

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """Inverse permutation: ranks[direction] -> rank."""
        inv = [0] * len(self.perm)
        for r, d in enumerate(self.perm):
            inv[d] = r
        return tuple(inv)

    @property
    def n(self) -> int:
        return len(self.perm)


def random_ordering(n: int, rng) -> DirectionOrdering:
    """Uniformly random direction ordering via a Fisher-Yates shuffle.

    ``rng`` must expose ``randrange(k)`` returning a uniform int in
    [0, k); with an unbiased source every permutation is equiprobable.
    """
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return DirectionOrdering(tuple(perm))


class GeodesicPath:
    """A geodesic: vertex sequence plus the direction of each step.

    Directions are pairwise distinct, so the vertices are automatically
    distinct too. A path and its reversal are the same geodesic; equality
    and hashing use the canonical orientation (smaller endpoint first).
    """

    __slots__ = ("vertices", "directions")

    def __init__(self, vertices, directions=None):
        vertices = tuple(vertices)
        if not vertices:
            raise ValueError("a path needs at least one vertex")
        if directions is None:
            directions = tuple(
                Edge.between(u, v).dir for u, v in zip(vertices, vertices[1:])
            )
        else:
            directions = tuple(directions)
            if len(directions) != len(vertices) - 1:
                raise ValueError("need exactly one direction per step")
            for u, v, d in zip(vertices, vertices[1:], directions):
                if u ^ v != 1 << d:
                    raise ValueError(f"step {u}->{v} is not in direction {d}")
        if len(set(directions)) != len(directions):
            raise ValueError(f"directions {directions} repeat: not a geodesic")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "directions", directions)

    def __setattr__(self, name, value):
        raise AttributeError("GeodesicPath is immutable")

    @property
    def length(self) -> int:
        return len(self.directions)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> "GeodesicPath":
        return GeodesicPath(self.vertices[::-1], self.directions[::-1])

    def canonical(self) -> "GeodesicPath":
        """The orientation starting at the numerically smaller endpoint."""
        if self.end < self.start:
            return self.reversed()
        return self

    def _key(self):
        c = self.canonical()
        return (c.vertices, c.directions)

    def __eq__(self, other):
        if not isinstance(other, GeodesicPath):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}(vertices={self.vertices}, directions={self.directions})"


class IncreasingGeodesic(GeodesicPath):
    """A geodesic whose direction ranks strictly increase along the path
    (identity ordering by default)."""

    __slots__ = ("ordering",)

    def __init__(self, vertices, directions=None, ordering: DirectionOrdering | None = None):
        super().__init__(vertices, directions)
        if ordering is not None:
            ranks = ordering.ranks
            seq = [ranks[d] for d in self.directions]
        else:
            seq = list(self.directions)
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"directions {self.directions} are not increasing")
        object.__setattr__(self, "ordering", ordering)


@dataclass(frozen=True)
class LTable:
    """Per-vertex longest increasing-geodesic lengths for one subgraph
    and ordering, with enough predecessor data to rebuild a witness.

    ``lengths[v]`` is the number of edges of the longest increasing
    geodesic ending at v. Internally the table keeps immutable snapshot
    chains (vertex, direction, parent-chain); a plain per-vertex
    predecessor map cannot reconstruct witnesses once a predecessor later
    improves its own optimum, so extraction walks the chains instead.
    ``pred`` exposes the final edge of each vertex's witness.
    """

    n: int
    ordering: DirectionOrdering
    lengths: dict[int, int]
    _chains: dict[int, tuple | None] = field(repr=False)

    @cached_property
    def pred(self) -> dict[int, tuple[int, int] | None]:
        return {
            v: (c[0], c[1]) if c is not None else None
            for v, c in self._chains.items()
        }

    @property
    def total(self) -> int:
        """Sum of lengths over all vertices; always >= 2|E(G)|."""
        return sum(self.lengths.values())


def increasing_geodesic_table(
    g: CubeSubgraph, ordering: DirectionOrdering | None = None
) -> LTable:
    """Longest increasing geodesic ending at each vertex, by a sweep over
    direction classes in rank order.

    Relaxing an edge (x, y) of the current class from pre-class values
    raises the two endpoint totals by at least 2 (whether or not the old
    values were equal), so the output always satisfies
    sum(lengths) >= 2|E(G)|.

    Ties between predecessors reaching the same length resolve toward the
    smaller predecessor vertex, which makes witnesses deterministic.
    """
    if ordering is None:
        ordering = DirectionOrdering.identity(g.n)
    if ordering.n != g.n:
        raise ValueError(f"ordering over {ordering.n} directions used with Q_{g.n}")
    lengths = dict.fromkeys(g.vertices, 0)
    chains: dict[int, tuple | None] = dict.fromkeys(g.vertices, None)
    by_dir = g.edges_by_direction
    for dir in ordering.perm:
        los = by_dir.get(dir)
        if not los:
            continue
        bit = 1 << dir
        for lo in los:
            hi = lo ^ bit
            llo = lengths[lo]
            lhi = lengths[hi]
            clo = chains[lo]
            chi = chains[hi]
            cand = llo + 1
            if cand > lhi:
                lengths[hi] = cand
                chains[hi] = (lo, dir, clo)
            elif cand == lhi and lo < chains[hi][0]:
                chains[hi] = (lo, dir, clo)
            cand = lhi + 1
            if cand > llo:
                lengths[lo] = cand
                chains[lo] = (hi, dir, chi)
            elif cand == llo and hi < chains[lo][0]:
                chains[lo] = (hi, dir, chi)
    return LTable(g.n, ordering, lengths, chains)


def extract_increasing_geodesic(table: LTable, v: int) -> IncreasingGeodesic:
    """The recorded witness ending at v: a valid increasing geodesic with
    exactly ``table.lengths[v]`` edges."""
    if v not in table.lengths:
        raise ValueError(f"vertex {v} not in table")
    verts = [v]
    dirs = []
    node = table._chains[v]
    while node is not None:
        u, dir, node = node
        verts.append(u)
        dirs.append(dir)
    path = IncreasingGeodesic(verts[::-1], dirs[::-1], ordering=table.ordering)
    assert path.length == table.lengths[v]
    return path


def longest_geodesic_lower_bound(
    g: CubeSubgraph, ordering: DirectionOrdering | None = None
) -> GeodesicPath:
    """The longest witness in the sweep table: a geodesic whose length is
    at least ceil(average_degree(g)), since the table totals at least
    2|E| = avg * |G| and lengths are integers."""
    if not g.vertices:
        raise ValueError("empty graph has no geodesics")
    table = increasing_geodesic_table(g, ordering)
    best_v = min(g.vertices)
    best_len = table.lengths[best_v]
    for v in g.vertices:
        if table.lengths[v] > best_len:
            best_v, best_len = v, table.lengths[v]
    return extract_increasing_geodesic(table, best_v)


def _min_degree_core(g: CubeSubgraph, threshold) -> set[int]:
    """Vertices surviving repeated deletion of degree < threshold.

    Nonempty when threshold is half the average degree: each deletion
    then removes fewer than |E|/|V| edges, so deleting all |V| vertices
    would discard fewer than |E| edges.
    """
    deg = dict(g.degrees)
    alive = set(g.vertices)
    stack = sorted((v for v in alive if deg[v] < threshold), reverse=True)
    while stack:
        v = stack.pop()
        if v not in alive or deg[v] >= threshold:
            continue
        alive.remove(v)
        for dir, w in g.neighbours(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] < threshold:
                    stack.append(w)
    return alive


def greedy_geodesic(g: CubeSubgraph) -> GeodesicPath:
    """Baseline geodesic of length >= ceil(average_degree/2).

    Strips vertices of degree below half the average degree to reach a
    min-degree core, then extends greedily from the smallest core vertex
    along unused directions (smallest direction first). While fewer than
    avg/2 directions are used, the current core vertex still has an
    unused-direction neighbour in the core, so the walk cannot stop early.
    """
    if not g.vertices:
        raise ValueError("empty graph has no geodesics")
    half = average_degree(g) / 2
    core = _min_degree_core(g, half)
    assert core, "min-degree core is never empty"
    v = min(core)
    verts = [v]
    dirs = []
    used = 0
    while True:
        step = None
        for dir, w in g.neighbours(v):
            if not (used >> dir) & 1 and w in core:
                step = (dir, w)
                break
        if step is None:
            break
        dir, w = step
        used |= 1 << dir
        dirs.append(dir)
        verts.append(w)
        v = w
    path = GeodesicPath(verts, dirs)
    assert path.length >= math.ceil(half)
    return path


def _adjacency(g: CubeSubgraph) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.lo].append((e.dir, e.hi))
        adj[e.hi].append((e.dir, e.lo))
    for lst in adj.values():
        lst.sort()
    return adj


def _check_oracle_cap(g: CubeSubgraph, max_n: int, max_edges: int) -> None:
    if g.n > max_n and len(g.edges) > max_edges:
        raise ValueError(
            f"instance (n={g.n}, |E|={len(g.edges)}) exceeds the oracle cap "
            f"(n <= {max_n} or |E| <= {max_edges})"
        )


def brute_force_longest_geodesic(
    g: CubeSubgraph, max_n: int = ORACLE_MAX_N, max_edges: int = ORACLE_MAX_EDGES
) -> GeodesicPath:
    """Exact maximum-length geodesic by memoized DFS over simple paths
    with a used-direction bitmask. Exponential in principle; guarded by
    the oracle cap."""
    if not g.vertices:
        raise ValueError("empty graph has no geodesics")
    _check_oracle_cap(g, max_n, max_edges)
    adj = _adjacency(g)
    memo: dict[tuple[int, int], tuple[int, int | None]] = {}

    def longest_from(v: int, used: int) -> tuple[int, int | None]:
        key = (v, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best, best_dir = 0, None
        for dir, w in adj[v]:
            b = 1 << dir
            if used & b:
                continue
            sub = longest_from(w, used | b)[0] + 1
            if sub > best:
                best, best_dir = sub, dir
        memo[key] = (best, best_dir)
        return (best, best_dir)

    start = min(g.vertices)
    best = 0
    for v in g.vertices:
        length = longest_from(v, 0)[0]
        if length > best:
            start, best = v, length
    verts = [start]
    dirs = []
    v, used = start, 0
    while True:
        _, dir = longest_from(v, used)
        if dir is None:
            break
        v ^= 1 << dir
        used |= 1 << dir
        verts.append(v)
        dirs.append(dir)
    return GeodesicPath(verts, dirs)


def enumerate_geodesics_of_length(
    g: CubeSubgraph,
    d: int,
    max_n: int = ORACLE_MAX_N,
    max_edges: int = ORACLE_MAX_EDGES,
    witnesses: bool = False,
):
    """Count the geodesics of g with exactly d edges.

    A path and its reversal count once: the orientation-sensitive DFS
    finds exactly twice as many directed paths, and the count returned is
    that total halved. With ``witnesses=True``, also returns the sorted
    canonical paths.
    """
    if d < 1:
        raise ValueError("geodesic length must be at least 1")
    _check_oracle_cap(g, max_n, max_edges)
    adj = _adjacency(g)
    directed = 0
    found: set[GeodesicPath] | None = set() if witnesses else None
    stack: list[int] = []

    def dfs(v: int, used: int, depth: int) -> None:
        nonlocal directed
        if depth == d:
            directed += 1
            if found is not None:
                found.add(GeodesicPath(list(stack)))
            return
        for dir, w in adj[v]:
            b = 1 << dir
            if used & b:
                continue
            stack.append(w)
            dfs(w, used | b, depth + 1)
            stack.pop()

    for s in g.vertices:
        stack.append(s)
        dfs(s, 0, 0)
        stack.pop()
    assert directed % 2 == 0
    count = directed // 2
    if found is not None:
        assert len(found) == count
        return count, sorted(found, key=lambda p: (p.canonical().vertices))
    return count


def count_increasing_geodesics(
    g: CubeSubgraph, d: int, ordering: DirectionOrdering | None = None
) -> int:
    """Number of oriented increasing geodesics with exactly d edges.

    Oriented means each path is counted with its increasing orientation;
    for d >= 2 that is the same as counting path objects (only one
    orientation can be increasing), while for d = 1 every edge counts in
    both orientations. Under this convention the count is at least |G|
    whenever average_degree(g) >= d for an integer d, and averaging over
    uniform orderings satisfies E(count) = 2 * L / d! where L is the
    unordered geodesic count of enumerate_geodesics_of_length.
    """
    if d < 1:
        raise ValueError("geodesic length must be at least 1")
    if ordering is None:
        ordering = DirectionOrdering.identity(g.n)
    ranks = ordering.ranks
    adj = _adjacency(g)
    count = 0

    def dfs(v: int, last_rank: int, depth: int) -> None:
        nonlocal count
        if depth == d:
            count += 1
            return
        for dir, w in adj[v]:
            r = ranks[dir]
            if r > last_rank:
                dfs(w, r, depth + 1)

    for s in g.vertices:
        dfs(s, -1, 0)
    return count


def brute_force_increasing_lengths(
    g: CubeSubgraph, ordering: DirectionOrdering | None = None
) -> dict[int, int]:
    """Oracle for the sweep table: per-vertex longest increasing-geodesic
    length by plain DFS over all rank-increasing paths. Shares no logic
    with increasing_geodesic_table."""
    if ordering is None:
        ordering = DirectionOrdering.identity(g.n)
    ranks = ordering.ranks
    adj = _adjacency(g)
    best = dict.fromkeys(g.vertices, 0)

    def dfs(v: int, last_rank: int, depth: int) -> None:
        if depth > best[v]:
            best[v] = depth
        for dir, w in adj[v]:
            r = ranks[dir]
            if r > last_rank:
                dfs(w, r, depth + 1)

    for s in g.vertices:
        dfs(s, -1, 0)
    return best
