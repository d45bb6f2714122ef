"""Invariant sweep over seeded random games, with timing.

For every generated game: the validator must come back clean, the chain
must be primitive with witness exponent 2, power and direct stationary
solves must agree, IPMs must average exactly 50, and the starter-gap /
pairwise-gap bounds must hold for random starter subsets.  Prints the worst
deviation seen for each quantity.

Usage: python scripts/random_sweep.py [--games-per-sport N] [--seed S]
"""

import argparse
import math
import random
import sys
import time

from playrank import (
    Sport, check_primitive, check_proposition_bounds, compute_ipm,
    build_digraph, generate_random_game, stationary_direct, stationary_power,
    to_transition, validate_game,
)


def sweep(games_per_sport: int, min_players: int, max_players: int,
          max_events: int, subsets: int, seed: int) -> int:
    rng = random.Random(seed)
    failures = 0
    worst = {
        "residual": 0.0, "solver_gap": 0.0, "sum_dev": 0.0,
        "mean_dev": 0.0, "min_excess": -math.inf,
        "starter_margin": math.inf, "pairwise_margin": math.inf,
    }
    t0 = time.perf_counter()
    for sport in Sport:
        for _ in range(games_per_sport):
            n = rng.randint(min_players, max_players)
            m = rng.randint(0, max_events)
            log = generate_random_game(sport, n, m, seed=rng.randrange(2**31))
            if validate_game(log):
                failures += 1
                continue
            t = to_transition(build_digraph(log))
            if check_primitive(t) != (True, 2):
                failures += 1
                continue
            vp = stationary_power(t)
            vd = stationary_direct(t)
            worst["residual"] = max(worst["residual"], vp.residual, vd.residual)
            worst["solver_gap"] = max(worst["solver_gap"],
                                      float(abs(vp.values - vd.values).max()))
            report = compute_ipm(vp, log.teams)
            ipms = [p.ipm for p in report.players]
            worst["sum_dev"] = max(worst["sum_dev"], abs(sum(ipms) - 50.0 * n))
            worst["mean_dev"] = max(worst["mean_dev"], abs(sum(ipms) / n - 50.0))
            worst["min_excess"] = max(worst["min_excess"], min(ipms) - 50.0)
            ids = [p.player for p in report.players]
            for _ in range(subsets):
                check = check_proposition_bounds(
                    report, starters=rng.sample(ids, rng.randint(1, n - 1)))
                if not (check.starter_gap.holds and check.pairwise_gap.holds):
                    failures += 1
                worst["starter_margin"] = min(worst["starter_margin"],
                                              check.starter_gap.margin)
                worst["pairwise_margin"] = min(worst["pairwise_margin"],
                                               check.pairwise_gap.margin)
    elapsed = time.perf_counter() - t0

    total = games_per_sport * len(Sport)
    print(f"{total} games ({games_per_sport} per sport) in {elapsed:.1f}s, "
          f"{failures} failures")
    print(f"  worst stationary residual   {worst['residual']:.3e}")
    print(f"  worst power/direct gap      {worst['solver_gap']:.3e}")
    print(f"  worst |sum(IPM) - 50n|      {worst['sum_dev']:.3e}")
    print(f"  worst |mean(IPM) - 50|      {worst['mean_dev']:.3e}")
    print(f"  worst min(IPM) - 50         {worst['min_excess']:.3e}")
    print(f"  tightest starter-gap margin {worst['starter_margin']:.3e}")
    print(f"  tightest pairwise margin    {worst['pairwise_margin']:.3e}")
    return 1 if failures else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--games-per-sport", type=int, default=1000)
    ap.add_argument("--min-players", type=int, default=6)
    ap.add_argument("--max-players", type=int, default=30)
    ap.add_argument("--max-events", type=int, default=500)
    ap.add_argument("--subsets", type=int, default=10,
                    help="random starter subsets checked per game")
    ap.add_argument("--seed", type=int, default=987654321)
    args = ap.parse_args()
    return sweep(args.games_per_sport, args.min_players, args.max_players,
                 args.max_events, args.subsets, args.seed)


if __name__ == "__main__":
    sys.exit(main())
