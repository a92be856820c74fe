"""Immutable simple graphs with the metric and structural queries the
painter strategies rely on: all-pairs distances, graph powers, girth,
diameter, 2k-cycle enumeration, case classification and the special
frame used by the main strategy.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    CycleCapError,
    GraphConstructionError,
    NoFrameError,
    PreconditionError,
)

UNREACHABLE = -1

DEFAULT_CYCLE_CAP = 10 ** 6


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored as sorted tuples. Construction validates
    simplicity and symmetry; connectivity is recorded in ``connected``
    and can be required via ``require_connected``.
    """

    __slots__ = ("n", "adj", "connected", "_dist")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 require_connected: bool = False):
        if n < 1:
            raise GraphConstructionError("graph needs at least one vertex")
        neigh = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(f"edge ({u},{v}) out of range")
            if u == v:
                raise GraphConstructionError(f"self-loop at {u}")
            neigh[u].add(v)
            neigh[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in neigh)
        self.connected = self._check_connected()
        if require_connected and not self.connected:
            raise GraphConstructionError("graph is not connected")
        self._dist = None

    def _check_connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def distances(self) -> "DistanceMatrix":
        if self._dist is None:
            self._dist = DistanceMatrix.from_graph(self)
        return self._dist

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adj}) == 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


class DistanceMatrix:
    """All-pairs hop counts, materialized via BFS from every vertex.

    Unreachable pairs carry the sentinel ``UNREACHABLE`` (-1).
    """

    __slots__ = ("n", "dist")

    def __init__(self, n: int, dist: list[list[int]]):
        self.n = n
        self.dist = dist

    @classmethod
    def from_graph(cls, g: Graph) -> "DistanceMatrix":
        rows = []
        for s in range(g.n):
            row = [UNREACHABLE] * g.n
            row[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                du = row[u]
                for v in g.adj[u]:
                    if row[v] == UNREACHABLE:
                        row[v] = du + 1
                        queue.append(v)
            rows.append(row)
        return cls(g.n, rows)

    def __call__(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def eccentricity(self, u: int) -> int:
        return max(self.dist[u])

    def diameter(self) -> int:
        return max(max(row) for row in self.dist)

    def dist_to_set(self, u: int, targets: Iterable[int]) -> int:
        return min(self.dist[u][t] for t in targets)


def bound_D(k: int, delta: int) -> int:
    """Maximum possible degree of the k-th power of a graph with maximum
    degree ``delta``: delta * sum_{i=1..k} (delta-1)^(i-1).

    Computed exactly with arbitrary-precision integers.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if delta < 3:
        raise PreconditionError(f"maximum degree must be >= 3, got {delta}")
    return delta * sum((delta - 1) ** (i - 1) for i in range(1, k + 1))


def kth_power(g: Graph, k: int) -> Graph:
    """Graph on the same vertices with edges between all pairs at
    distance 1..k in ``g``."""
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if not g.connected:
        raise PreconditionError("kth_power requires a connected graph")
    if k == 1:
        return g
    d = g.distances()
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if 1 <= d(u, v) <= k]
    return Graph(g.n, edges)


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest.

    Per-vertex BFS: the first non-tree edge closing two BFS branches
    bounds the shortest cycle through the root.
    """
    best = None
    for s in range(g.n):
        depth = [UNREACHABLE] * g.n
        parent = [-1] * g.n
        depth[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if depth[v] == UNREACHABLE:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cyc = depth[u] + depth[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def shortest_cycle(g: Graph) -> Optional[list[int]]:
    """A witness cycle of length girth(g), as a vertex sequence."""
    gg = girth(g)
    if gg is None:
        return None
    d = g.distances()

    def extend(s: int, path: list[int], on_path: set[int]):
        u = path[-1]
        remaining = gg - len(path)
        if remaining == 0:
            return list(path) if g.has_edge(u, s) else None
        for v in g.adj[u]:
            if v <= s or v in on_path:
                continue
            dv = d(v, s)
            if dv == UNREACHABLE or dv > remaining:
                continue
            path.append(v)
            on_path.add(v)
            hit = extend(s, path, on_path)
            if hit is not None:
                return hit
            path.pop()
            on_path.remove(v)
        return None

    for s in range(g.n):
        hit = extend(s, [s], {s})
        if hit is not None:
            return hit
    raise AssertionError("girth reported but no witness cycle found")


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Canonical form under rotation and reflection: start at the
    minimum vertex, take the lexicographically smaller direction."""
    m = len(cycle)
    i = cycle.index(min(cycle))
    fwd = tuple(cycle[(i + j) % m] for j in range(m))
    bwd = tuple(cycle[(i - j) % m] for j in range(m))
    return min(fwd, bwd)


def enumerate_cycles(g: Graph, length: int,
                     cap: int = DEFAULT_CYCLE_CAP) -> list[list[int]]:
    """All simple cycles of exactly ``length`` vertices, each reported
    once up to rotation/reflection.

    DFS rooted at each vertex s, restricted to vertices > s except the
    root, pruned by remaining depth vs. distance back to the root.
    Reflection duplicates are cut by requiring path[1] < path[-1].
    """
    if length < 3:
        raise PreconditionError(f"cycle length must be >= 3, got {length}")
    d = g.distances()
    found: list[list[int]] = []

    def extend(s: int, path: list[int], on_path: set[int]):
        u = path[-1]
        remaining = length - len(path)
        if remaining == 0:
            if g.has_edge(u, s) and path[1] < path[-1]:
                found.append(list(path))
                if len(found) > cap:
                    raise CycleCapError(
                        f"more than {cap} cycles of length {length}")
            return
        for v in g.adj[u]:
            if v <= s or v in on_path:
                continue
            dv = d(v, s)
            if dv == UNREACHABLE or dv > remaining:
                continue
            path.append(v)
            on_path.add(v)
            extend(s, path, on_path)
            path.pop()
            on_path.remove(v)

    for s in range(g.n):
        extend(s, [s], {s})
    # The path[1] < path[-1] cut already yields one orientation per cycle;
    # canonicalization guards against any residual duplicates.
    seen = set()
    out = []
    for c in found:
        key = _canonical_cycle(c)
        if key not in seen:
            seen.add(key)
            out.append(list(key))
    return out


@dataclass(frozen=True)
class StructuralReport:
    n: int
    max_degree: int
    is_regular: bool
    girth: Optional[int]          # None means acyclic (infinite girth)
    diameter: int
    two_k_cycles: tuple[tuple[int, ...], ...]
    two_k_cycles_disjoint: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "is_regular": self.is_regular,
            "girth": self.girth,
            "diameter": self.diameter,
            "two_k_cycles": [list(c) for c in self.two_k_cycles],
            "two_k_cycles_disjoint": self.two_k_cycles_disjoint,
        }


def structural_report(g: Graph, k: int,
                      cycle_cap: int = DEFAULT_CYCLE_CAP) -> StructuralReport:
    """Girth, diameter, regularity and the exhaustive list of cycles of
    length exactly 2k, with the pairwise vertex-disjointness flag."""
    if k < 2:
        raise PreconditionError(f"k must be >= 2, got {k}")
    if not g.connected:
        raise PreconditionError("structural_report requires a connected graph")
    cycles = enumerate_cycles(g, 2 * k, cap=cycle_cap)
    seen_vertices: set[int] = set()
    disjoint = True
    for c in cycles:
        if seen_vertices.intersection(c):
            disjoint = False
            break
        seen_vertices.update(c)
    return StructuralReport(
        n=g.n,
        max_degree=g.max_degree,
        is_regular=g.is_regular(),
        girth=girth(g),
        diameter=g.distances().diameter(),
        two_k_cycles=tuple(tuple(c) for c in cycles),
        two_k_cycles_disjoint=disjoint,
    )


@dataclass(frozen=True)
class CaseLabel:
    """Outcome of the case analysis routing a graph to a strategy.

    ``kind`` is one of NonRegular, ShortCycle, IntersectingTwoKCycles,
    SmallDiameter, MainCase. Witness fields are populated per kind.
    """
    kind: str
    low_degree_vertex: Optional[int] = None
    short_cycle: Optional[tuple[int, ...]] = None
    intersecting_cycles: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    NON_REGULAR = "NonRegular"
    SHORT_CYCLE = "ShortCycle"
    INTERSECTING = "IntersectingTwoKCycles"
    SMALL_DIAMETER = "SmallDiameter"
    MAIN_CASE = "MainCase"

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.low_degree_vertex is not None:
            out["low_degree_vertex"] = self.low_degree_vertex
        if self.short_cycle is not None:
            out["short_cycle"] = list(self.short_cycle)
        if self.intersecting_cycles is not None:
            out["intersecting_cycles"] = [list(c) for c in self.intersecting_cycles]
        return out


def classify(g: Graph, k: int,
             report: Optional[StructuralReport] = None) -> CaseLabel:
    """First matching label in priority order: NonRegular, ShortCycle,
    IntersectingTwoKCycles, SmallDiameter, else MainCase."""
    if k < 3:
        raise PreconditionError(f"k must be >= 3, got {k}")
    if not g.connected:
        raise PreconditionError("classify requires a connected graph")
    if g.max_degree < 3:
        raise PreconditionError(
            f"maximum degree must be >= 3, got {g.max_degree}")
    delta = g.max_degree
    for v in range(g.n):
        if g.degree(v) < delta:
            return CaseLabel(CaseLabel.NON_REGULAR, low_degree_vertex=v)
    if report is None:
        report = structural_report(g, k)
    if report.girth is not None and report.girth < 2 * k:
        return CaseLabel(CaseLabel.SHORT_CYCLE,
                         short_cycle=tuple(shortest_cycle(g)))
    if not report.two_k_cycles_disjoint:
        pair = _intersecting_pair(report.two_k_cycles)
        return CaseLabel(CaseLabel.INTERSECTING, intersecting_cycles=pair)
    if report.diameter <= k:
        return CaseLabel(CaseLabel.SMALL_DIAMETER)
    return CaseLabel(CaseLabel.MAIN_CASE)


def _intersecting_pair(cycles):
    for i in range(len(cycles)):
        si = set(cycles[i])
        for j in range(i + 1, len(cycles)):
            if si.intersection(cycles[j]):
                return (tuple(cycles[i]), tuple(cycles[j]))
    raise AssertionError("disjointness flag inconsistent with cycle list")


@dataclass(frozen=True)
class SpecialFrame:
    """The distinguished vertices and vertex order driving the main
    painter: x1,y1 at distance k+1 with neighbors x2,y2 also far apart,
    a connecting path P, the late vertices v,w on P, and the global
    coloring order ending with w then v."""
    x1: int
    x2: int
    y1: int
    y2: int
    path: tuple[int, ...]
    v: int
    w: int
    order: tuple[int, ...]

    def frame_vertices(self) -> tuple[int, int, int, int]:
        return (self.x1, self.x2, self.y1, self.y2)


def _lex_least_shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    """Lexicographically least among shortest src->dst paths, by greedy
    descent over distances to dst (neighbor ids ascend already)."""
    d = g.distances()
    path = [src]
    u = src
    while u != dst:
        u = min(v for v in g.adj[u] if d(v, dst) == d(u, dst) - 1)
        path.append(u)
    return path


def find_special_frame(g: Graph, k: int) -> SpecialFrame:
    """Deterministic search for a special frame in a MainCase graph.

    Scans (x1,y1) pairs in lexicographic order, then neighbor pairs
    (x2,y2) in id order, accepting the first pair at mutual distance
    >= k+1. v sits at distance exactly 2 from x1 on the path; w is v's
    path neighbor toward y1 unless that vertex is x2 or y2.
    """
    if k < 3:
        raise PreconditionError(f"k must be >= 3, got {k}")
    label = classify(g, k)
    if label.kind != CaseLabel.MAIN_CASE:
        raise PreconditionError(
            f"find_special_frame requires MainCase, got {label.kind}")
    d = g.distances()
    for x1 in range(g.n):
        for y1 in range(g.n):
            if d(x1, y1) != k + 1:
                continue
            for x2 in g.adj[x1]:
                for y2 in g.adj[y1]:
                    if d(x2, y2) >= k + 1:
                        return _build_frame(g, k, x1, x2, y1, y2)
    raise NoFrameError(
        "no (x1,x2,y1,y2) frame found in a MainCase graph; "
        "this contradicts the case analysis and indicates a bug")


def _build_frame(g: Graph, k: int, x1: int, x2: int, y1: int,
                 y2: int) -> SpecialFrame:
    d = g.distances()
    path = _lex_least_shortest_path(g, x1, y1)
    v = path[2]
    after, before = path[3], path[1]
    if after not in (x2, y2):
        w = after
    elif before not in (x2, y2):
        w = before
    else:
        raise NoFrameError("both path neighbors of v collide with x2/y2")
    head = [x1, x2, y1, y2]
    rest = [u for u in range(g.n) if u not in head and u not in (v, w)]
    rest.sort(key=lambda u: (-min(d(u, v), d(u, w)), u))
    order = tuple(head + rest + [w, v])
    frame = SpecialFrame(x1=x1, x2=x2, y1=y1, y2=y2, path=tuple(path),
                         v=v, w=w, order=order)
    _check_frame(g, k, frame)
    return frame


def _check_frame(g: Graph, k: int, f: SpecialFrame):
    d = g.distances()
    ok = (
        d(f.x1, f.y1) == k + 1
        and g.has_edge(f.x1, f.x2) and g.has_edge(f.y1, f.y2)
        and d(f.x2, f.y2) >= k + 1
        and f.w not in (f.x2, f.y2)
        and all(d(f.v, z) <= k for z in f.frame_vertices())
        and d(f.w, f.x1) <= k and d(f.w, f.y1) <= k
        and len(f.path) == k + 2
        and sorted(f.order) == list(range(g.n))
    )
    if not ok:
        raise NoFrameError(f"constructed frame violates its invariants: {f}")
