#!/usr/bin/env python3
"""Benchmark the matching kernels: compiled extension vs pure Python.

Two workloads:
  * dense random graphs at several sizes (the worst case for the matcher);
  * the pairing workload, i.e. the candidate graphs a mid-tournament round
    actually produces.

Usage: python benchmarks/bench_matching.py [--quick]
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from swissfair.matching import _blossom as py_kernel
from swissfair.pairing import PairingConfig, _candidate_edges
from swissfair.simulate import FieldSpec, OutcomeModel, generate_field

try:
    from swissfair.matching import _blossom_cy as cy_kernel
except ImportError:
    cy_kernel = None


def dense_graph(n, rng):
    pairs = list(itertools.combinations(range(n), 2))
    us = [p[0] for p in pairs]
    vs = [p[1] for p in pairs]
    ws = [rng.randint(10**8, 10**9) for _ in pairs]
    return us, vs, ws


def pairing_graphs(n, rounds, seed):
    """Candidate graphs of every round of one simulated tournament."""
    field = generate_field(FieldSpec(size=n), seed=seed)
    config = PairingConfig()
    graphs = []

    # Re-run the simulation round by round to capture each round's graph.
    from swissfair.pairing import PlayerState, pair_round
    from swissfair.ratings import BLACK, WHITE
    from swissfair.simulate import derive_seed, sample_game

    players = {pid: PlayerState(player_id=pid, rating=r) for pid, r in field}
    game_rng = random.Random(derive_seed(seed, "games"))
    model = OutcomeModel(delta=25)
    for round_no in range(1, rounds + 1):
        states = list(players.values())
        iu, ju, weights, _ = _candidate_edges(states, config, round_no, rounds)
        boost = (len(states) // 2) * int(weights.max()) + 1
        graphs.append(
            (len(states), iu.tolist(), ju.tolist(), (weights + boost).tolist())
        )
        pairing = pair_round(states, config, round_no, rounds,
                             rng_seed=derive_seed(seed, "pair", round_no))
        for white_id, black_id in pairing.boards:
            white, black = players[white_id], players[black_id]
            score = sample_game(white.rating, black.rating, model, game_rng)
            white.score += score
            black.score += 1.0 - score
            white.opponents.add(black_id)
            black.opponents.add(white_id)
            white.colour_history.append(WHITE)
            black.colour_history.append(BLACK)
    return graphs


def time_solver(kernel, graphs, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for n, us, vs, ws in graphs:
            kernel.solve(n, us, vs, ws)
        best = min(best, time.perf_counter() - t0)
    return best / len(graphs)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="fewer repeats")
    args = parser.parse_args()
    repeats = 2 if args.quick else 5
    rng = random.Random(2024)

    rows = []
    for n in (32, 64, 100, 150):
        graphs = [dense_graph(n, rng)]
        graphs = [(n, *g) for g in graphs]
        t_py = time_solver(py_kernel, graphs, repeats)
        t_cy = time_solver(cy_kernel, graphs, repeats) if cy_kernel else None
        rows.append((f"dense n={n}", t_py, t_cy))

    graphs = pairing_graphs(64, 9, seed=5)
    t_py = time_solver(py_kernel, graphs, repeats)
    t_cy = time_solver(cy_kernel, graphs, repeats) if cy_kernel else None
    rows.append(("pairing 64p x 9r", t_py, t_cy))

    print(f"{'workload':<18} {'python':>12} {'cython':>12} {'speedup':>9}")
    print("-" * 54)
    for name, t_py, t_cy in rows:
        if t_cy is None:
            print(f"{name:<18} {t_py * 1e3:>9.2f} ms {'n/a':>12} {'':>9}")
        else:
            print(
                f"{name:<18} {t_py * 1e3:>9.2f} ms {t_cy * 1e3:>9.2f} ms "
                f"{t_py / t_cy:>8.1f}x"
            )
    if cy_kernel is None:
        print("\ncompiled kernel unavailable; install with the extension built")


if __name__ == "__main__":
    main()
