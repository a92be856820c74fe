"""Built-in check suite behind the `selftest` CLI command.

Runs a condensed version of the acceptance checks; --full raises the
game counts to the levels used by the pytest acceptance module.
"""

from __future__ import annotations

import sys

from . import gen_io
from .game import TokenBudgets, play_game, random_lister, pressure_lister, \
    validate_transcript
from .graph import bound_D, kth_power
from .oracle import PAINTER, LISTER, solve_paintability
from .painters import dispatch_painter


def _play_all(g, k, lister_name, games, seed0):
    game_graph = kth_power(g, k)
    budget = bound_D(k, g.max_degree) - 1
    budgets = TokenBudgets.uniform(g.n, budget)
    painter, _, _ = dispatch_painter(g, k)
    losses = 0
    for i in range(games):
        if lister_name == "random":
            lister = random_lister(seed0 + i)
        else:
            lister = pressure_lister()
        t = play_game(game_graph, budgets, lister, painter)
        if validate_transcript(game_graph, budgets, t) is not None:
            losses += 1
        elif t.winner != "painter":
            losses += 1
    return losses


def run_selftest(full: bool = False) -> int:
    checks = []

    def check(name, fn):
        try:
            ok = fn()
        except Exception as exc:  # report, keep going
            ok = False
            print(f"FAIL {name}: {exc}", file=sys.stderr)
        checks.append((name, ok))
        print(f"{'PASS' if ok else 'FAIL'} {name}")

    check("bound formula",
          lambda: all(bound_D(2, d) == d * d for d in (3, 4, 5))
          and bound_D(3, 3) == 21)

    def oracle_truths():
        uni = TokenBudgets.uniform
        cy = gen_io.cycle
        co = gen_io.complete
        return (
            solve_paintability(cy(5), uni(5, 2)) == LISTER
            and solve_paintability(cy(5), uni(5, 3)) == PAINTER
            and solve_paintability(cy(4), uni(4, 2)) == PAINTER
            and solve_paintability(cy(6), uni(6, 2)) == PAINTER
            and solve_paintability(gen_io.path(3), uni(3, 2)) == PAINTER
            and all(solve_paintability(co(n), uni(n, n)) == PAINTER
                    and solve_paintability(co(n), uni(n, n - 1)) == LISTER
                    for n in (2, 3, 4))
        )

    check("oracle ground truth", oracle_truths)

    def moore_sharpness():
        k10 = kth_power(gen_io.petersen(), 2)
        return (k10 == gen_io.complete(10)
                and solve_paintability(k10, TokenBudgets.uniform(10, 9)) == LISTER
                and solve_paintability(k10, TokenBudgets.uniform(10, 10)) == PAINTER)

    check("Moore sharpness (Petersen squared)", moore_sharpness)

    def degree_bounds():
        for seed in range(20):
            g = gen_io.random_regular(14, 3, seed)
            if any(kth_power(g, 3).degree(v) > 21 for v in range(g.n)):
                return False
        mc3 = kth_power(gen_io.mcgee(), 3)
        return all(mc3.degree(v) == 21 for v in range(24))

    check("cubic power degree bound and McGee tightness", degree_bounds)

    def round_trips():
        import random as _r
        rng = _r.Random(0)
        for _ in range(200):
            n = rng.randint(1, 20)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.3]
            from .graph import Graph
            g = Graph(n, edges)
            if gen_io.parse_graph6(gen_io.write_graph6(g)) != g:
                return False
        return True

    check("graph6 round trip", round_trips)

    main_games = 1000 if full else 50
    route_games = 200 if full else 30
    check("main strategy on McGee cubed",
          lambda: _play_all(gen_io.mcgee(), 3, "random", main_games, 1) == 0
          and _play_all(gen_io.mcgee(), 3, "pressure", 1, 1) == 0)

    def fallback_routes():
        pet = gen_io.petersen()
        dented = pet.edges()[1:]
        from .graph import Graph
        pet_minus = Graph(10, dented)
        for g in (pet_minus, pet, gen_io.heawood()):
            if _play_all(g, 3, "random", route_games, 7) != 0:
                return False
        return True

    check("fallback routes never lose", fallback_routes)

    failed = [name for name, ok in checks if not ok]
    if failed:
        print(f"{len(failed)} of {len(checks)} checks failed", file=sys.stderr)
        return 1
    print(f"all {len(checks)} checks passed")
    return 0
