"""Painter strategies: the main strategy built around the special
frame and its priority rules, the distance-order greedy scan that
powers the fallback cases, the clique strategy, and a dispatcher that
routes a graph through the full case analysis.
"""

from __future__ import annotations

from typing import Optional

from .errors import (
    MooreBoundViolationError,
    PreconditionError,
    StrategyInvariantViolation,
)
from .graph import (
    CaseLabel,
    Graph,
    SpecialFrame,
    bound_D,
    classify,
    find_special_frame,
    kth_power,
    structural_report,
)
from .game import GameState


class GreedyScanPainter:
    """Scans a fixed vertex order each round and colors every revealed
    vertex whose game-graph neighbors are all uncolored this round.
    Colors from earlier rounds never conflict: each round is one fresh
    color."""

    name = "greedy"

    def __init__(self, order):
        self.order = tuple(order)
        if sorted(self.order) != list(range(len(self.order))):
            raise PreconditionError("order must be a permutation of 0..n-1")

    def reset(self):
        pass

    def choose_colors(self, state: GameState, game_graph: Graph,
                      revealed: set[int]) -> set[int]:
        colored = set()
        for u in self.order:
            if u in revealed and u in state.alive:
                if not any(x in colored for x in game_graph.adj[u]):
                    colored.add(u)
        return colored


class CliquePainter:
    """For clique game graphs: colors exactly one revealed vertex, the
    one with fewest remaining tokens (ties by id)."""

    name = "clique"

    def reset(self):
        pass

    def choose_colors(self, state: GameState, game_graph: Graph,
                      revealed: set[int]) -> set[int]:
        pick = min(revealed, key=lambda v: (state.tokens[v], v))
        return {pick}


def greedy_scan_painter(order) -> GreedyScanPainter:
    return GreedyScanPainter(order)


def clique_painter() -> CliquePainter:
    return CliquePainter()


class TheoremPainter:
    """The main-case strategy. Plays on the k-th power of a regular
    graph with girth >= 2k, disjoint 2k-cycles and diameter >= k+1,
    with uniform budgets M-1 where M is the degree bound.

    Per round, four frame vertices x1,x2,y1,y2 are handled by priority
    rules that steer their colors away from the lists of the two late
    vertices v and w; everything else is colored by the greedy scan in
    the frame order, which ends with w then v.
    """

    name = "theorem"

    def __init__(self, g: Graph, k: int,
                 frame: Optional[SpecialFrame] = None,
                 check_slack: bool = False):
        label = classify(g, k)
        if label.kind != CaseLabel.MAIN_CASE:
            raise PreconditionError(
                f"theorem painter requires MainCase, got {label.kind}")
        self.base = g
        self.k = k
        self.frame = frame if frame is not None else find_special_frame(g, k)
        self.M = bound_D(k, g.max_degree)
        self.power = kth_power(g, k)
        self.check_slack = check_slack
        self.reset()

    def reset(self):
        self.revealed_count = [0] * self.base.n
        self.no_v = 0
        self.no_w = 0
        self.constraint_count = [0] * self.base.n
        self.slack_violations = []

    # -- helpers ----------------------------------------------------------

    def _conflicts(self, z: int, colored: set[int]) -> bool:
        return any(x in colored for x in self.power.adj[z])

    def _live_in(self, pair, state, revealed, colored):
        return [z for z in pair
                if z in state.alive and z in revealed and z not in colored]

    # -- the strategy -----------------------------------------------------

    def choose_colors(self, state: GameState, game_graph: Graph,
                      revealed: set[int]) -> set[int]:
        f = self.frame
        M = self.M
        colored: set[int] = set()
        v_in_s = f.v in revealed
        w_in_s = f.w in revealed
        x1y1 = (f.x1, f.y1)
        x2y2 = (f.x2, f.y2)

        # (i) both ends revealed: color both (they are non-adjacent in G^k).
        live1 = self._live_in(x1y1, state, revealed, colored)
        if len(live1) == 2:
            colored.update(live1)
        else:
            # (ii)/(iii) steer x1/y1 onto a color missing from L(v)/L(w).
            if live1 and self.no_v == 0 and not v_in_s:
                colored.add(live1[0])
            live1 = self._live_in(x1y1, state, revealed, colored)
            if live1 and self.no_w == 0 and not w_in_s:
                colored.add(live1[0])
            # (iv) last-chance coloring of x1/y1, counting this reveal.
            for z in self._live_in(x1y1, state, revealed, colored):
                if self.revealed_count[z] + 1 >= M - 2:
                    colored.add(z)

        # (v) both of x2,y2 revealed and free of same-round conflicts.
        live2 = self._live_in(x2y2, state, revealed, colored)
        if (len(live2) == 2
                and not self._conflicts(f.x2, colored)
                and not self._conflicts(f.y2, colored)):
            colored.update(live2)
        else:
            # (vi) color x2/y2 on a color missing from L(v).
            if not v_in_s:
                for z in self._live_in(x2y2, state, revealed, colored):
                    if not self._conflicts(z, colored):
                        colored.add(z)
            # (vii) last-chance coloring of x2/y2.
            for z in self._live_in(x2y2, state, revealed, colored):
                if (self.revealed_count[z] + 1 >= M - 4
                        and not self._conflicts(z, colored)):
                    colored.add(z)

        # Greedy scan over everything but the frame four; w then v last.
        frame_four = set(f.frame_vertices())
        for u in f.order:
            if u in frame_four or u not in state.alive or u in colored:
                continue
            if u not in revealed:
                continue
            if self._conflicts(u, colored):
                continue
            colored.add(u)
        if self.check_slack:
            self._record_slack(state, revealed, colored)

        self._update_counters(state, revealed, colored)
        self._check_tokens(state, revealed, colored)
        return colored

    # -- bookkeeping ------------------------------------------------------

    def _update_counters(self, state, revealed, colored):
        f = self.frame
        for z in revealed:
            if z not in colored:
                self.revealed_count[z] += 1
        hits = sum(1 for z in (f.x1, f.y1) if z in colored)
        if hits:
            self.no_v += hits - (1 if f.v in revealed else 0)
            self.no_w += hits - (1 if f.w in revealed else 0)
        if not (0 <= self.no_v <= 2 and 0 <= self.no_w <= 2):
            raise StrategyInvariantViolation(
                f"NO counters left range: NO_v={self.no_v} NO_w={self.no_w} "
                f"round {state.round}")

    def _check_tokens(self, state, revealed, colored):
        for z in revealed - colored:
            if state.tokens[z] == 1:
                raise StrategyInvariantViolation(
                    f"vertex {z} exhausts its budget uncolored in round "
                    f"{state.round}")

    def _record_slack(self, state, revealed, colored):
        # Executable constraint-slack bound: a non-frame vertex u that
        # stays uncolored accumulates at most deg(u) - r(u) constraints,
        # where r(u) counts its game-graph neighbors later in the order.
        # A constraint is a round whose color was in L(u) and landed on
        # a neighbor; later neighbors each either never constrain u or
        # share their color with the earlier neighbor that blocked u.
        pos = {u: i for i, u in enumerate(self.frame.order)}
        frame_four = set(self.frame.frame_vertices())
        for u in revealed - colored:
            if u in frame_four:
                continue
            if any(x in colored for x in self.power.adj[u]):
                self.constraint_count[u] += 1
                r_u = sum(1 for x in self.power.adj[u] if pos[x] > pos[u])
                if self.constraint_count[u] > self.power.degree(u) - r_u:
                    self.slack_violations.append((state.round, u))


def main_theorem_painter(g: Graph, k: int, **kwargs) -> TheoremPainter:
    return TheoremPainter(g, k, **kwargs)


def dispatch_painter(g: Graph, k: int):
    """Route a graph through the case analysis.

    Returns (painter, label, order) where ``order`` is the coloring
    order the painter scans (identity for the clique case).
    """
    if k < 3:
        raise PreconditionError(f"k must be >= 3, got {k}")
    if g.max_degree < 3:
        raise PreconditionError(
            f"maximum degree must be >= 3, got {g.max_degree}")
    if not g.connected:
        raise PreconditionError("dispatch requires a connected graph")
    label = classify(g, k)
    d = g.distances()

    def order_by_distance(targets, tail):
        rest = [u for u in range(g.n) if u not in tail]
        rest.sort(key=lambda u: (-min(d(u, t) for t in targets), u))
        return tuple(rest + list(tail))

    if label.kind == CaseLabel.NON_REGULAR:
        v = label.low_degree_vertex
        order = order_by_distance([v], [v])
        return greedy_scan_painter(order), label, order
    if label.kind == CaseLabel.SHORT_CYCLE:
        cyc = label.short_cycle
        v = min(cyc)
        i = cyc.index(v)
        w = min(cyc[(i + 1) % len(cyc)], cyc[(i - 1) % len(cyc)])
        order = order_by_distance([v, w], [v, w])
        return greedy_scan_painter(order), label, order
    if label.kind == CaseLabel.INTERSECTING:
        c1, c2 = label.intersecting_cycles
        v = min(set(c1) & set(c2))
        i = c1.index(v)
        w = min(c1[(i + 1) % len(c1)], c1[(i - 1) % len(c1)])
        order = order_by_distance([v, w], [w, v])
        return greedy_scan_painter(order), label, order
    if label.kind == CaseLabel.SMALL_DIAMETER:
        m = bound_D(k, g.max_degree)
        if g.n > m - 1:
            raise MooreBoundViolationError(
                f"diameter <= {k} graph with {g.n} > {m - 1} vertices")
        order = tuple(range(g.n))
        return clique_painter(), label, order
    painter = main_theorem_painter(g, k)
    return painter, label, painter.frame.order
