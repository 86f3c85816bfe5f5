"""Red/blue edge colourings of the full hypercube and antipodal-pair
searches: monochromatic antipodal paths and geodesics, one-change
geodesics, minimum colour changes, and the constructive equivalence
between the monochromatic-geodesic and one-change-geodesic properties.

A colouring assigns a colour to every edge of Q_n. Internally it is a
single big-int bitmask over edge positions (dir << n) | lo, bit set for
blue, which keeps exhaustive sweeps over 2^16 colourings cheap.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Iterable, Iterator

from .core import CubeSubgraph, Edge, antipode
from .geodesics import GeodesicPath, increasing_geodesic_table, extract_increasing_geodesic
from .rng import SplitMix64, derive

__all__ = [
    "AntipodalWitness",
    "Colour",
    "EdgeColouring",
    "all_edges",
    "antipodal_edge",
    "antipodal_pair_count",
    "antipodal_colouring_from_index",
    "colouring_from_index",
    "derive_A_from_B",
    "derive_B_from_A",
    "find_monochromatic_antipodal_geodesic",
    "find_monochromatic_antipodal_path",
    "find_one_change_antipodal_geodesic",
    "is_antipodal",
    "lift_to_antipodal",
    "min_colour_changes_antipodal",
    "monochromatic_half_geodesic",
    "random_antipodal_colouring",
    "random_colouring",
    "restrict_to_bottom",
    "validate_witness",
]

#: Colourings materialize all n * 2^(n-1) edges; beyond this the masks
#: get unwieldy and no supported operation needs them.
MAX_COLOURING_DIMENSION = 16

#: Default cap for the per-start subset searches (state space 2^n).
SEARCH_MAX_N = 12


class Colour(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def opposite(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED


@lru_cache(maxsize=None)
def _lo_pattern(n: int, dir: int) -> int:
    """Bitmask over 2^n positions with a 1 at position v iff bit ``dir``
    of v is 0, i.e. the canonical lo endpoints of direction ``dir``."""
    block = (1 << (1 << dir)) - 1
    period = 1 << (dir + 1)
    return block * (((1 << (1 << n)) - 1) // ((1 << period) - 1))


@lru_cache(maxsize=None)
def _valid_edge_mask(n: int) -> int:
    mask = 0
    for dir in range(n):
        mask |= _lo_pattern(n, dir) << (dir << n)
    return mask


def _pos(lo: int, dir: int, n: int) -> int:
    return (dir << n) | lo


def all_edges(n: int) -> Iterator[Edge]:
    """All n * 2^(n-1) edges of Q_n in (lo, dir) order."""
    for lo in range(1 << n):
        for dir in range(n):
            if not (lo >> dir) & 1:
                yield Edge(lo, dir)


def edge_count(n: int) -> int:
    return n << (n - 1) if n else 0


def antipodal_edge(e: Edge, n: int) -> Edge:
    """The edge on the antipodal endpoints; same direction. Involution;
    at n = 1 the unique edge is its own antipodal edge."""
    if not 0 <= e.dir < n or e.lo >> n:
        raise ValueError(f"{e} is not an edge of Q_{n}")
    return Edge(((1 << n) - 1) ^ e.lo ^ (1 << e.dir), e.dir)


def antipodal_pair_count(n: int) -> int:
    """Number of antipodal edge pairs: half the edge count for n >= 2."""
    if n < 2:
        raise ValueError("antipodal edge pairs need n >= 2")
    return edge_count(n) // 2


@dataclass(frozen=True)
class EdgeColouring:
    """A total red/blue colouring of E(Q_n). ``blue_mask`` has bit
    (dir << n) | lo set iff the edge (lo, dir) is blue."""

    n: int
    blue_mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_COLOURING_DIMENSION:
            raise ValueError(f"colouring dimension {self.n} outside 1..{MAX_COLOURING_DIMENSION}")
        if self.blue_mask & ~_valid_edge_mask(self.n):
            raise ValueError("blue_mask has bits at non-edge positions")

    @classmethod
    def constant(cls, n: int, colour: Colour) -> "EdgeColouring":
        return cls(n, _valid_edge_mask(n) if colour is Colour.BLUE else 0)

    @classmethod
    def direction_split(cls, n: int) -> "EdgeColouring":
        """Directions 0..n-2 red, direction n-1 blue. Not antipodal; the
        standard example of a colouring with no monochromatic antipodal
        path."""
        if n < 2:
            raise ValueError("direction split needs n >= 2")
        return cls(n, _lo_pattern(n, n - 1) << ((n - 1) << n))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int, Colour]]) -> "EdgeColouring":
        """Build from (lo, dir, colour) triples; must cover every edge
        exactly once."""
        blue = 0
        seen = 0
        for lo, dir, colour in pairs:
            if not 0 <= dir < n or lo >> n or (lo >> dir) & 1:
                raise ValueError(f"({lo}, {dir}) is not a canonical edge of Q_{n}")
            p = 1 << _pos(lo, dir, n)
            if seen & p:
                raise ValueError(f"edge ({lo}, {dir}) coloured twice")
            seen |= p
            if colour is Colour.BLUE:
                blue |= p
        if seen != _valid_edge_mask(n):
            raise ValueError("colouring does not cover every edge of the cube")
        return cls(n, blue)

    def colour_of(self, e: Edge) -> Colour:
        if not 0 <= e.dir < self.n or e.lo >> self.n or (e.lo >> e.dir) & 1:
            raise ValueError(f"{e} is not a canonical edge of Q_{self.n}")
        return Colour.BLUE if (self.blue_mask >> _pos(e.lo, e.dir, self.n)) & 1 else Colour.RED

    def colour_between(self, u: int, v: int) -> Colour:
        """Colour of the edge between two adjacent vertices."""
        dir = (u ^ v).bit_length() - 1
        if u ^ v != 1 << dir:
            raise ValueError(f"{u} and {v} are not adjacent")
        return Colour.BLUE if (self.blue_mask >> _pos(min(u, v), dir, self.n)) & 1 else Colour.RED

    def blue_count(self) -> int:
        return self.blue_mask.bit_count()

    def pairs(self) -> Iterator[tuple[int, int, Colour]]:
        """(lo, dir, colour) for every edge, in (lo, dir) order."""
        for e in all_edges(self.n):
            yield (e.lo, e.dir, self.colour_of(e))


def _antipodal_representatives(n: int) -> list[Edge]:
    """One edge per antipodal pair, the (lo, dir)-smaller one."""
    return [e for e in all_edges(n) if e < antipodal_edge(e, n)]


def is_antipodal(c: EdgeColouring) -> bool:
    """True iff every edge and its antipodal edge have different colours.
    Always False at n = 1, where the unique edge is self-antipodal."""
    n = c.n
    blue = c.blue_mask
    for e in all_edges(n):
        a = antipodal_edge(e, n)
        if a < e:
            continue
        if ((blue >> _pos(e.lo, e.dir, n)) & 1) == ((blue >> _pos(a.lo, a.dir, n)) & 1):
            return False
    return True


def random_antipodal_colouring(n: int, seed: int) -> EdgeColouring:
    """One uniform colour choice per antipodal edge pair, the partner
    forced opposite. Deterministic in the seed."""
    if n < 2:
        raise ValueError("antipodal colourings need n >= 2")
    rng = SplitMix64(derive(seed))
    blue = 0
    for e in _antipodal_representatives(n):
        a = antipodal_edge(e, n)
        if rng.bits(1):
            blue |= 1 << _pos(e.lo, e.dir, n)
        else:
            blue |= 1 << _pos(a.lo, a.dir, n)
    return EdgeColouring(n, blue)


def random_colouring(n: int, seed: int) -> EdgeColouring:
    """Every edge coloured independently and uniformly. Deterministic in
    the seed."""
    rng = SplitMix64(derive(seed))
    raw = rng.bits(n << n)
    return EdgeColouring(n, raw & _valid_edge_mask(n))


def antipodal_colouring_from_index(n: int, index: int) -> EdgeColouring:
    """The index-th antipodal colouring: bit i of the index blues the
    i-th representative edge (else its partner). Indices in
    [0, 2^antipodal_pair_count(n)) enumerate them all."""
    reps = _antipodal_representatives(n)
    if not 0 <= index < (1 << len(reps)):
        raise ValueError(f"index {index} out of range for {len(reps)} antipodal pairs")
    blue = 0
    for i, e in enumerate(reps):
        a = antipodal_edge(e, n)
        if (index >> i) & 1:
            blue |= 1 << _pos(e.lo, e.dir, n)
        else:
            blue |= 1 << _pos(a.lo, a.dir, n)
    return EdgeColouring(n, blue)


def colouring_from_index(n: int, index: int) -> EdgeColouring:
    """The index-th general colouring: bit i of the index blues the i-th
    edge in (lo, dir) order. Indices in [0, 2^edge_count(n))."""
    edges = list(all_edges(n))
    if not 0 <= index < (1 << len(edges)):
        raise ValueError(f"index {index} out of range for {len(edges)} edges")
    blue = 0
    for i, e in enumerate(edges):
        if (index >> i) & 1:
            blue |= 1 << _pos(e.lo, e.dir, n)
    return EdgeColouring(n, blue)


@dataclass(frozen=True)
class AntipodalWitness:
    """A path between antipodal vertices together with what it certifies:
    'mono-path' (all one colour), 'mono-geodesic', 'one-change-geodesic'
    (geodesics of length n), or a generic 'path' carrying its exact
    colour-change count."""

    kind: str
    vertices: tuple[int, ...]
    pair: tuple[int, int]
    change_count: int | None = None


def validate_witness(w: AntipodalWitness, c: EdgeColouring) -> None:
    """Structural check, independent of how the witness was found.
    Raises ValueError on any defect."""
    n = c.n
    x, y = w.pair
    if y != antipode(x, n):
        raise ValueError(f"pair {w.pair} is not antipodal in Q_{n}")
    verts = w.vertices
    if verts[0] != x or verts[-1] != y:
        raise ValueError("path endpoints do not match the antipodal pair")
    dirs = []
    for u, v in zip(verts, verts[1:]):
        d = u ^ v
        if d == 0 or d & (d - 1):
            raise ValueError(f"step {u}->{v} is not a cube edge")
        dirs.append(d.bit_length() - 1)
    cols = [c.colour_between(u, v) for u, v in zip(verts, verts[1:])]
    changes = sum(1 for a, b in zip(cols, cols[1:]) if a is not b)
    if w.kind == "mono-path":
        if changes != 0:
            raise ValueError("mono-path witness is not monochromatic")
    elif w.kind in ("mono-geodesic", "one-change-geodesic"):
        if len(set(dirs)) != len(dirs) or len(dirs) != n:
            raise ValueError("witness is not a full-length geodesic")
        limit = 0 if w.kind == "mono-geodesic" else 1
        if changes > limit:
            raise ValueError(f"{w.kind} witness changes colour {changes} times")
    elif w.kind == "path":
        if changes != w.change_count:
            raise ValueError(
                f"witness records {w.change_count} changes but has {changes}"
            )
    else:
        raise ValueError(f"unknown witness kind {w.kind!r}")


def _edge_is_blue(blue: int, n: int, u: int, v: int) -> bool:
    dir = (u ^ v).bit_length() - 1
    return (blue >> ((dir << n) | min(u, v))) & 1 == 1


def find_monochromatic_antipodal_path(c: EdgeColouring):
    """Search every antipodal pair and both colour classes for a
    single-colour path joining the pair (breadth-first in the colour
    subgraph). None means no such path exists for any pair."""
    n = c.n
    blue = c.blue_mask
    mask = (1 << n) - 1
    for x in range(1 << (n - 1)):
        target = x ^ mask
        for want_blue in (False, True):
            parent = {x: None}
            queue = deque([x])
            while queue:
                v = queue.popleft()
                if v == target:
                    verts = []
                    while v is not None:
                        verts.append(v)
                        v = parent[v]
                    return AntipodalWitness(
                        "mono-path", tuple(reversed(verts)), (x, target)
                    )
                for dir in range(n):
                    w = v ^ (1 << dir)
                    if w in parent:
                        continue
                    if ((blue >> ((dir << n) | min(v, w))) & 1 == 1) is want_blue:
                        parent[w] = v
                        queue.append(w)
    return None


def find_monochromatic_antipodal_geodesic(c: EdgeColouring, max_n: int = SEARCH_MAX_N):
    """Search for a single-colour geodesic between antipodal vertices.

    From a start x, the set of directions used so far is implied by the
    current vertex (x XOR v), so plain reachability over vertices with
    the step constraints (unused direction, matching colour) decides it;
    reaching the antipode means all n directions were used once.
    """
    n = c.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds the subset-search cap {max_n}")
    blue = c.blue_mask
    mask = (1 << n) - 1
    for x in range(1 << (n - 1)):
        target = x ^ mask
        for want_blue in (False, True):
            parent: dict[int, int | None] = {x: None}
            queue = deque([x])
            found = False
            while queue and not found:
                v = queue.popleft()
                unused = (x ^ v) ^ mask
                rest = unused
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    w = v ^ bit
                    if w in parent:
                        continue
                    dir = bit.bit_length() - 1
                    if ((blue >> ((dir << n) | min(v, w))) & 1 == 1) is want_blue:
                        parent[w] = v
                        if w == target:
                            found = True
                            break
                        queue.append(w)
            if found:
                verts = []
                v = target
                while v is not None:
                    verts.append(v)
                    v = parent[v]
                return AntipodalWitness(
                    "mono-geodesic", tuple(reversed(verts)), (x, target)
                )
    return None


def find_one_change_antipodal_geodesic(c: EdgeColouring, max_n: int = SEARCH_MAX_N):
    """Search for a geodesic between antipodal vertices with at most one
    colour change, by reachability over (vertex, current colour,
    changed-yet) states."""
    n = c.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds the subset-search cap {max_n}")
    blue = c.blue_mask
    mask = (1 << n) - 1
    for x in range(1 << (n - 1)):
        target = x ^ mask
        parent: dict[tuple[int, bool, bool], tuple] = {}
        queue = deque()

        def visit(state, prev):
            parent[state] = prev
            if state[0] == target:
                verts = []
                st = state
                while st is not None:
                    verts.append(st[0])
                    st = parent[st]
                verts.append(x)
                return AntipodalWitness(
                    "one-change-geodesic", tuple(reversed(verts)), (x, target)
                )
            queue.append(state)
            return None

        for dir in range(n):
            w = x ^ (1 << dir)
            col = (blue >> ((dir << n) | min(x, w))) & 1 == 1
            st = (w, col, False)
            if st not in parent:
                hit = visit(st, None)
                if hit:
                    return hit
        while queue:
            v, col, changed = queue.popleft()
            unused = (x ^ v) ^ mask
            rest = unused
            while rest:
                bit = rest & -rest
                rest ^= bit
                w = v ^ bit
                dir = bit.bit_length() - 1
                ecol = (blue >> ((dir << n) | min(v, w))) & 1 == 1
                if ecol is col:
                    st = (w, col, changed)
                elif not changed:
                    st = (w, ecol, True)
                else:
                    continue
                if st not in parent:
                    hit = visit(st, (v, col, changed))
                    if hit:
                        return hit
    return None


def _loop_erase(verts: list[int]) -> list[int]:
    out: list[int] = []
    seen: dict[int, int] = {}
    for v in verts:
        if v in seen:
            for u in out[seen[v] + 1 :]:
                del seen[u]
            del out[seen[v] + 1 :]
        else:
            seen[v] = len(out)
            out.append(v)
    return out


def min_colour_changes_antipodal(c: EdgeColouring) -> tuple[int, AntipodalWitness]:
    """Minimum, over antipodal pairs, of the fewest colour changes on any
    path joining the pair.

    Computed as a 0/1-weight breadth-first search over (vertex, last edge
    colour) states, which optimizes over walks; erasing a loop from a
    walk never increases its change count, so the walk minimum equals the
    path minimum and the returned witness is loop-erased to a simple path
    achieving exactly the optimum.
    """
    n = c.n
    blue = c.blue_mask
    mask = (1 << n) - 1
    best: tuple[int, AntipodalWitness] | None = None
    for x in range(max(1, 1 << (n - 1))):
        target = x ^ mask
        dist: dict[tuple[int, bool], int] = {}
        parent: dict[tuple[int, bool], tuple | None] = {}
        dq = deque()
        for dir in range(n):
            w = x ^ (1 << dir)
            col = (blue >> ((dir << n) | min(x, w))) & 1 == 1
            st = (w, col)
            if st not in dist:
                dist[st] = 0
                parent[st] = None
                dq.appendleft(st)
        while dq:
            st = dq.popleft()
            v, col = st
            d = dist[st]
            for dir in range(n):
                w = v ^ (1 << dir)
                ecol = (blue >> ((dir << n) | min(v, w))) & 1 == 1
                nst = (w, ecol)
                nd = d + (ecol is not col)
                if nst not in dist or nd < dist[nst]:
                    dist[nst] = nd
                    parent[nst] = st
                    if nd == d:
                        dq.appendleft(nst)
                    else:
                        dq.append(nst)
        value = min(
            (dist[st] for st in ((target, False), (target, True)) if st in dist),
            default=None,
        )
        assert value is not None, "Q_n is connected; the antipode is always reachable"
        if best is None or value < best[0]:
            goal = min(
                (st for st in ((target, False), (target, True)) if dist.get(st) == value),
            )
            walk = []
            st = goal
            while st is not None:
                walk.append(st[0])
                st = parent[st]
            walk.append(x)
            walk.reverse()
            simple = _loop_erase(walk)
            cols = [c.colour_between(u, v) for u, v in zip(simple, simple[1:])]
            changes = sum(1 for a, b in zip(cols, cols[1:]) if a is not b)
            assert changes == value, "loop erasure must preserve the optimum"
            witness = AntipodalWitness("path", tuple(simple), (x, target), changes)
            best = (value, witness)
            if value == 0:
                break
    return best


def _iter_bits(m: int) -> Iterator[int]:
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


def _colour_lomasks(c: EdgeColouring, colour: Colour) -> list[int]:
    """Per-direction lo-endpoint masks of one colour class."""
    n = c.n
    cls = c.blue_mask if colour is Colour.BLUE else _valid_edge_mask(n) ^ c.blue_mask
    vmask = (1 << (1 << n)) - 1
    return [(cls >> (dir << n)) & vmask for dir in range(n)]


def _components(n: int, lomasks: list[int]) -> list[int]:
    """Connected components (as vertex bitsets over all 2^n vertices) of
    the subgraph whose direction-d edges have lo endpoints in
    lomasks[d]. Isolated vertices are singleton components."""
    comps = []
    unvisited = (1 << (1 << n)) - 1
    shifts = [1 << d for d in range(n)]
    while unvisited:
        comp = unvisited & -unvisited
        while True:
            nxt = comp
            for d in range(n):
                sh = shifts[d]
                lom = lomasks[d]
                nxt |= (comp & lom) << sh
                nxt |= (comp >> sh) & lom
            if nxt == comp:
                break
            comp = nxt
        comps.append(comp)
        unvisited &= ~comp
    return comps


def monochromatic_half_geodesic(c: EdgeColouring) -> GeodesicPath:
    """A single-colour geodesic of length at least ceil(n/2).

    The majority colour class has at least half of all edges, so over all
    2^n vertices its average degree is at least n/2, and some connected
    component of it reaches that ratio; the direction-sweep table on that
    component then yields a geodesic of at least ceil(n/2) edges.
    """
    n = c.n
    total = edge_count(n)
    majority = Colour.RED if 2 * (total - c.blue_count()) >= total else Colour.BLUE
    lomasks = _colour_lomasks(c, majority)
    best_comp = None
    best_avg = None
    for comp in _components(n, lomasks):
        edges = sum((lomasks[d] & comp).bit_count() for d in range(n))
        avg = Fraction(2 * edges, comp.bit_count())
        if best_avg is None or avg > best_avg:
            best_comp, best_avg = comp, avg
    assert best_avg is not None and 2 * best_avg >= n, "majority component bound"
    verts = tuple(_iter_bits(best_comp))
    edges = []
    for d in range(n):
        for lo in _iter_bits(lomasks[d] & best_comp):
            edges.append(Edge(lo, d))
    sub = CubeSubgraph(n, verts, tuple(sorted(edges)))
    table = increasing_geodesic_table(sub)
    best_v = min(verts)
    for v in verts:
        if table.lengths[v] > table.lengths[best_v]:
            best_v = v
    path = extract_increasing_geodesic(table, best_v)
    assert path.length >= ceil(Fraction(n, 2))
    assert all(c.colour_between(u, v) is majority for u, v in zip(path.vertices, path.vertices[1:]))
    return path


def lift_to_antipodal(c: EdgeColouring) -> EdgeColouring:
    """Extend a colouring of Q_n to an antipodal colouring of Q_{n+1}
    that agrees with it on the bottom subcube (new coordinate 0).

    Bottom edges copy c; each top edge takes the colour opposite to its
    antipodal bottom edge; each antipodal pair of new-direction edges is
    split deterministically: red on the edge whose bottom endpoint has
    even parity, or on the smaller bottom endpoint when the pair's
    parities agree (they always agree for even n).
    """
    n = c.n
    n2 = n + 1
    mask = (1 << n) - 1
    blue = 0
    for e in all_edges(n):
        p = 1 << _pos(e.lo, e.dir, n2)
        top = 1 << _pos(e.lo | (1 << n), e.dir, n2)
        # antipodal partner of that top edge is the bottom edge
        # (complement(lo) ^ bit, dir); colour the pair oppositely.
        partner = Edge((mask ^ e.lo) ^ (1 << e.dir), e.dir)
        if c.colour_of(e) is Colour.BLUE:
            blue |= p
        if c.colour_of(partner) is Colour.RED:
            blue |= top
    for lo in range(1 << n):
        partner = mask ^ lo
        if lo > partner:
            continue
        lp, pp = lo.bit_count() & 1, partner.bit_count() & 1
        if lp != pp:
            blue_lo = lp == 1
        else:
            blue_lo = False  # smaller endpoint red
        if blue_lo:
            blue |= 1 << _pos(lo, n, n2)
        else:
            blue |= 1 << _pos(partner, n, n2)
    lifted = EdgeColouring(n2, blue)
    assert is_antipodal(lifted)
    return lifted


def restrict_to_bottom(c: EdgeColouring) -> EdgeColouring:
    """The colouring induced on the bottom subcube (top coordinate 0)."""
    n = c.n - 1
    if n < 1:
        raise ValueError("nothing to restrict to below n = 2")
    blue = 0
    for e in all_edges(n):
        if c.colour_of(Edge(e.lo, e.dir)) is Colour.BLUE:
            blue |= 1 << _pos(e.lo, e.dir, n)
    return EdgeColouring(n, blue)


def derive_B_from_A(c: EdgeColouring) -> AntipodalWitness:
    """Produce a one-change antipodal geodesic for an arbitrary colouring
    from a monochromatic antipodal geodesic on its antipodal lift.

    Lift c to an antipodal colouring of Q_{n+1}, find a monochromatic
    geodesic P between antipodal vertices there, and close it with its
    antipodal image into a cycle of length 2(n+1). The cycle crosses the
    new direction exactly twice, so it splits into a bottom arc and a top
    arc; the bottom arc is a geodesic between Q_n-antipodal vertices made
    of one piece of P and one piece of the oppositely coloured image, so
    it changes colour at most once under c.
    """
    n = c.n
    lifted = lift_to_antipodal(c)
    found = find_monochromatic_antipodal_geodesic(lifted)
    if found is None:
        raise ValueError(
            "no monochromatic antipodal geodesic on the lifted colouring; "
            "cannot run the construction"
        )
    mask2 = (1 << (n + 1)) - 1
    p = list(found.vertices)
    cycle = p + [v ^ mask2 for v in p[1:]]
    steps = list(zip(cycle, cycle[1:]))
    crossings = [i for i, (u, v) in enumerate(steps) if u ^ v == 1 << n]
    assert len(crossings) == 2, "the cycle crosses the new direction exactly twice"
    i1, i2 = crossings
    arc1 = cycle[i1 + 1 : i2 + 1]
    arc2 = cycle[i2 + 1 :] + cycle[1 : i1 + 1]
    top_bit = 1 << n
    if all(not v & top_bit for v in arc1):
        bottom = arc1
        assert all(v & top_bit for v in arc2)
    else:
        bottom = arc2
        assert all(not v & top_bit for v in bottom)
        assert all(v & top_bit for v in arc1)
    path = GeodesicPath(bottom)
    assert path.length == n and path.start ^ path.end == (1 << n) - 1
    cols = [c.colour_between(u, v) for u, v in zip(bottom, bottom[1:])]
    changes = sum(1 for a, b in zip(cols, cols[1:]) if a is not b)
    assert changes <= 1
    witness = AntipodalWitness(
        "one-change-geodesic", tuple(bottom), (bottom[0], bottom[-1])
    )
    validate_witness(witness, c)
    return witness


def derive_A_from_B(c: EdgeColouring) -> AntipodalWitness:
    """Produce a monochromatic antipodal geodesic for an antipodal
    colouring from a one-change antipodal geodesic.

    Split the one-change geodesic at its colour change; the antipodal
    image of the first piece has the second piece's colour (the colouring
    is antipodal), and appending it to the second piece closes a
    monochromatic geodesic between another antipodal pair.
    """
    n = c.n
    if not is_antipodal(c):
        raise ValueError("construction needs an antipodal colouring")
    found = find_one_change_antipodal_geodesic(c)
    if found is None:
        raise ValueError("no one-change antipodal geodesic; cannot run the construction")
    verts = list(found.vertices)
    cols = [c.colour_between(u, v) for u, v in zip(verts, verts[1:])]
    split = next(
        (i + 1 for i in range(len(cols) - 1) if cols[i] is not cols[i + 1]), None
    )
    if split is None:
        witness = AntipodalWitness("mono-geodesic", tuple(verts), (verts[0], verts[-1]))
        validate_witness(witness, c)
        return witness
    mask = (1 << n) - 1
    tail = verts[split:]
    head_image = [v ^ mask for v in verts[1 : split + 1]]
    combined = tail + head_image
    witness = AntipodalWitness(
        "mono-geodesic", tuple(combined), (combined[0], combined[-1])
    )
    validate_witness(witness, c)
    return witness
