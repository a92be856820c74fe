"""Graph ingestion and generation: graph6 read/write, DIMACS .col
reading, the named graphs used throughout the tests, and a pairing-model
random regular generator.

Randomness comes from ``random.Random`` (Mersenne Twister), which is
specified by the Python standard library and produces identical streams
on every platform, so seeded corpora are reproducible byte-for-byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import GiveUpError, ParseError, PreconditionError
from .graph import Graph

# ---------------------------------------------------------------------------
# graph6

_G6_MAX_LONG = 258047


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short or 4-byte long size header)."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 line", offset=0)
    data = line.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not (63 <= b <= 126):
            raise ParseError(f"character {data[i:i+1]!r} outside 63..126",
                             offset=i)
    pos = 0
    if data[0] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("8-byte graph6 size header not supported",
                             offset=0)
        if len(data) < 4:
            raise ParseError("truncated long size header", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"expected {nbytes} body bytes for n={n}, got {len(data) - pos}",
            offset=pos)
    bits = []
    for i in range(pos, len(data)):
        val = data[i] - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    for i in range(nbits, len(bits)):
        if bits[i]:
            raise ParseError("nonzero padding bits",
                             offset=pos + i // 6)
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    if n == 0:
        raise ParseError("graph6 with zero vertices", offset=0)
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as one canonical graph6 line."""
    n = g.n
    if n > _G6_MAX_LONG:
        raise PreconditionError(f"n={n} exceeds graph6 long-form limit")
    if n <= 62:
        header = [n + 63]
    else:
        header = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63),
                  63 + (n & 63)]
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(header + body).decode("ascii")


def read_graph6_file(path: str) -> list[Graph]:
    """Newline-separated multi-graph file."""
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs


# ---------------------------------------------------------------------------
# DIMACS .col (read-only)

def parse_dimacs(text: str) -> Graph:
    """DIMACS .col: 'p edge N M' header then 'e u v' lines, 1-based."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 3 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError(f"bad problem line {raw!r} (line {lineno})")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"edge before problem line (line {lineno})")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge ({u},{v}) out of range (line {lineno})")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {raw!r} (line {lineno})")
    if n is None:
        raise ParseError("missing problem line")
    return Graph(n, edges)


def read_dimacs_file(path: str) -> Graph:
    with open(path) as fh:
        return parse_dimacs(fh.read())


def load_graph_file(path: str) -> Graph:
    """Dispatch on extension: .col is DIMACS, anything else graph6
    (first line of a multi-graph file)."""
    if path.endswith(".col"):
        return read_dimacs_file(path)
    graphs = read_graph6_file(path)
    if not graphs:
        raise ParseError(f"no graphs in {path}")
    return graphs[0]


# ---------------------------------------------------------------------------
# named graphs

# Cubic cage adjacency embedded as static data; the unit tests assert the
# (girth, diameter) signatures so a typo cannot survive.
_PETERSEN_EDGES = [
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8),
    (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
]
_HEAWOOD_EDGES = [
    (0, 1), (0, 5), (0, 13), (1, 2), (1, 10), (2, 3), (2, 7), (3, 4),
    (3, 12), (4, 5), (4, 9), (5, 6), (6, 7), (6, 11), (7, 8), (8, 9),
    (8, 13), (9, 10), (10, 11), (11, 12), (12, 13),
]
_MCGEE_EDGES = [
    (0, 1), (0, 12), (0, 23), (1, 2), (1, 8), (2, 3), (2, 19), (3, 4),
    (3, 15), (4, 5), (4, 11), (5, 6), (5, 22), (6, 7), (6, 18), (7, 8),
    (7, 14), (8, 9), (9, 10), (9, 21), (10, 11), (10, 17), (11, 12),
    (12, 13), (13, 14), (13, 20), (14, 15), (15, 16), (16, 17), (16, 23),
    (17, 18), (18, 19), (19, 20), (20, 21), (21, 22), (22, 23),
]

FAMILIES = ("petersen", "heawood", "mcgee", "complete", "cycle", "path",
            "prism", "random_regular", "regular_tree")


@dataclass(frozen=True)
class GraphFamilySpec:
    family: str
    n: Optional[int] = None
    degree: Optional[int] = None
    depth: Optional[int] = None
    seed: Optional[int] = None


def petersen() -> Graph:
    return Graph(10, _PETERSEN_EDGES)


def heawood() -> Graph:
    return Graph(14, _HEAWOOD_EDGES)


def mcgee() -> Graph:
    return Graph(24, _MCGEE_EDGES)


def complete(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def prism(n: int = 3) -> Graph:
    """Circular ladder: two n-cycles joined by rungs (2n vertices)."""
    if n < 3:
        raise PreconditionError("prism needs n >= 3")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def regular_tree(degree: int, depth: int) -> Graph:
    """Tree whose internal vertices all have the given degree: the root
    has ``degree`` children, other internal vertices degree-1."""
    if degree < 2 or depth < 1:
        raise PreconditionError("regular_tree needs degree >= 2, depth >= 1")
    edges = []
    frontier = [0]
    next_id = 1
    for level in range(depth):
        fanout = degree if level == 0 else degree - 1
        new_frontier = []
        for u in frontier:
            for _ in range(fanout):
                edges.append((u, next_id))
                new_frontier.append(next_id)
                next_id += 1
        frontier = new_frontier
    return Graph(next_id, edges)


def random_regular(n: int, degree: int, seed: int,
                   max_attempts: int = 10 ** 4) -> Graph:
    """Pairing-model sample of a simple connected degree-regular graph.

    Shuffles n*degree stubs and pairs them consecutively; rejects draws
    with loops, parallel edges, or a disconnected result.
    """
    if degree < 1 or n < degree + 1:
        raise PreconditionError(f"need n >= degree+1, got n={n} degree={degree}")
    if (n * degree) % 2 != 0:
        raise PreconditionError(f"n*degree must be even, got {n}*{degree}")
    rng = random.Random(seed)
    stubs_template = [v for v in range(n) for _ in range(degree)]
    for _ in range(max_attempts):
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, edges)
        if g.connected:
            return g
    raise GiveUpError(
        f"no simple connected {degree}-regular graph on {n} vertices "
        f"after {max_attempts} pairing attempts")


def named_graph(spec: GraphFamilySpec) -> Graph:
    fam = spec.family
    if fam == "petersen":
        return petersen()
    if fam == "heawood":
        return heawood()
    if fam == "mcgee":
        return mcgee()
    if fam == "complete":
        _need(spec, "n")
        return complete(spec.n)
    if fam == "cycle":
        _need(spec, "n")
        return cycle(spec.n)
    if fam == "path":
        _need(spec, "n")
        return path(spec.n)
    if fam == "prism":
        return prism(spec.n if spec.n is not None else 3)
    if fam == "regular_tree":
        _need(spec, "degree", "depth")
        return regular_tree(spec.degree, spec.depth)
    if fam == "random_regular":
        _need(spec, "n", "degree", "seed")
        return random_regular(spec.n, spec.degree, spec.seed)
    raise PreconditionError(f"unknown family {fam!r} (known: {FAMILIES})")


def _need(spec: GraphFamilySpec, *fields_: str):
    for f in fields_:
        if getattr(spec, f) is None:
            raise PreconditionError(
                f"family {spec.family!r} requires parameter {f!r}")
