"""Vertices, directions, edges, and subgraphs of the hypercube Q_n.

Vertices of Q_n are plain ints in [0, 2^n), read as bitmasks: bit i is
coordinate i. Directions are ints in [0, n); an edge joins two vertices
that differ in exactly one coordinate, and its direction is that
coordinate's index. Everything here is 0-based, including all serialized
formats.

All values are immutable after construction and safe to share across
concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

#: Hard cap on the ambient dimension. Subset-indexed tables allocate
#: O(2^n) state, so anything beyond this is a usage error, not a feature.
MAX_DIMENSION = 24


class Edge(NamedTuple):
    """An edge of Q_n in canonical form: ``lo`` is the endpoint with bit
    ``dir`` equal to 0; the other endpoint is ``lo ^ (1 << dir)``."""

    lo: int
    dir: int

    @property
    def hi(self) -> int:
        return self.lo ^ (1 << self.dir)

    def endpoints(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def other(self, v: int) -> int:
        return v ^ (1 << self.dir)

    @classmethod
    def between(cls, u: int, v: int) -> "Edge":
        """Canonical edge between two adjacent vertices.

        Raises ValueError if u and v do not differ in exactly one bit.
        """
        diff = u ^ v
        if diff == 0 or diff & (diff - 1):
            raise ValueError(
                f"vertices {u} and {v} differ in {bin(diff).count('1')} bits, not 1"
            )
        return cls(min(u, v), diff.bit_length() - 1)


def _check_dimension(n: int) -> None:
    if not 0 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension {n} outside supported range 0..{MAX_DIMENSION}")


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} out of range for Q_{n}")


@dataclass(frozen=True)
class CubeSubgraph:
    """A subgraph of Q_n with canonically sorted vertex and edge tuples,
    so equality of subgraphs is plain structural equality."""

    n: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def edges_by_direction(self) -> dict[int, tuple[int, ...]]:
        """Direction -> sorted lo-endpoints of the edges in that direction."""
        buckets: dict[int, list[int]] = {}
        for e in self.edges:
            buckets.setdefault(e.dir, []).append(e.lo)
        return {d: tuple(los) for d, los in buckets.items()}

    @cached_property
    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for e in self.edges:
            deg[e.lo] += 1
            deg[e.hi] += 1
        return deg

    def neighbours(self, v: int) -> list[tuple[int, int]]:
        """(direction, neighbour) pairs for edges of this subgraph at v."""
        out = []
        for dir in range(self.n):
            w = v ^ (1 << dir)
            if Edge(min(v, w), dir) in self.edge_set:
                out.append((dir, w))
        return out

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __len__(self) -> int:
        return len(self.vertices)


def make_subgraph(
    n: int,
    vertices: Iterable[int],
    edges: Iterable[Edge | tuple[int, int]],
) -> CubeSubgraph:
    """Validate and canonicalize a subgraph of Q_n.

    Edges may be given as canonical ``Edge`` values or as (u, v) endpoint
    pairs; endpoint pairs must differ in exactly one bit. Duplicates are
    dropped. Every edge endpoint must appear in ``vertices``.
    """
    _check_dimension(n)
    vset = set()
    for v in vertices:
        _check_vertex(v, n)
        vset.add(v)
    eset = set()
    for item in edges:
        if isinstance(item, Edge):
            e = item
            if not 0 <= e.dir < n:
                raise ValueError(f"edge direction {e.dir} out of range for Q_{n}")
            if e.lo & (1 << e.dir):
                raise ValueError(f"edge {e} is not canonical: bit {e.dir} of lo is set")
            _check_vertex(e.hi, n)
        else:
            u, v = item
            _check_vertex(u, n)
            _check_vertex(v, n)
            e = Edge.between(u, v)
        if e.lo not in vset or e.hi not in vset:
            raise ValueError(f"edge {e} has an endpoint outside the vertex set")
        eset.add(e)
    return CubeSubgraph(n, tuple(sorted(vset)), tuple(sorted(eset)))


def _trusted_subgraph(
    n: int, vertices: tuple[int, ...], edges: tuple[Edge, ...]
) -> CubeSubgraph:
    """Construction fast path for callers that already produced sorted,
    canonical, validated data (generators and induced_subgraph)."""
    return CubeSubgraph(n, vertices, edges)


def induced_subgraph(n: int, vertices: Iterable[int]) -> CubeSubgraph:
    """The subgraph of Q_n induced on a vertex set: all Q_n edges with
    both endpoints inside the set."""
    _check_dimension(n)
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(v, n)
    vset = frozenset(vs)
    edges = []
    for v in vs:
        for dir in range(n):
            w = v | (1 << dir)
            if w != v and w in vset:
                edges.append(Edge(v, dir))
    return _trusted_subgraph(n, tuple(vs), tuple(sorted(edges)))


def average_degree(g: CubeSubgraph) -> Fraction:
    """2|E| / |V| as an exact rational. Theorem checks compare against
    this value exactly, so no floating point is involved anywhere."""
    if not g.vertices:
        raise ValueError("average degree of the empty graph is undefined")
    return Fraction(2 * len(g.edges), len(g.vertices))


def hamming_distance(x: int, y: int) -> int:
    return (x ^ y).bit_count()


def max_hamming_pair(g: CubeSubgraph) -> tuple[int, int, int]:
    """A pair of vertices realizing the maximum pairwise Hamming distance,
    plus that distance. Ties resolve to the lexicographically smallest
    pair. The returned distance is at least ceil(average_degree) on every
    valid subgraph; the test harness checks that bound on all instances.
    """
    vs = g.vertices
    if not vs:
        raise ValueError("max_hamming_pair of the empty graph is undefined")
    best = (vs[0], vs[0], 0)
    n = g.n
    for i, x in enumerate(vs):
        if best[2] == n:
            break
        for y in vs[i + 1 :]:
            d = (x ^ y).bit_count()
            if d > best[2]:
                best = (x, y, d)
    return best


def antipode(x: int, n: int) -> int:
    """The vertex with every coordinate flipped."""
    _check_vertex(x, n)
    return x ^ ((1 << n) - 1)
