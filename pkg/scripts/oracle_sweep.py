"""Compare subset enumeration with fixpoint saturation on random sub-bases.

Prints a histogram of topology sizes and the time spent by each method.

    python scripts/oracle_sweep.py --trials 1000 --seed 3 --members 5
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from nstopo import NSFamily, NSSet, Universe, closure_fixpoint, is_neutrosophic_topology, topology_from_subbase


@dataclass
class SweepConfig:
    trials: int = 500
    seed: int = 0
    max_universe: int = 4
    members: int = 4
    # degrees are multiples of 1/resolution
    resolution: int = 10


def random_subbasis(rng, cfg):
    u = Universe(tuple(f"x{i}" for i in range(rng.randint(1, cfg.max_universe))), "U")
    step = Fraction(1, cfg.resolution)

    def degree():
        return rng.randint(0, cfg.resolution) * step

    sets = []
    for k in range(rng.randint(0, cfg.members)):
        triples = tuple((degree(), degree(), degree()) for _ in u)
        sets.append(NSSet.from_mapping(u, dict(zip(u, triples)), f"S{k}"))
    return NSFamily(sets, u)


def sweep(cfg):
    rng = random.Random(cfg.seed)
    sizes = Counter()
    t_enum = t_fix = 0.0
    mismatches = 0
    for _ in range(cfg.trials):
        S = random_subbasis(rng, cfg)
        t0 = time.perf_counter()
        T = topology_from_subbase(S)
        t1 = time.perf_counter()
        F = closure_fixpoint(S)
        t2 = time.perf_counter()
        t_enum += t1 - t0
        t_fix += t2 - t1
        sizes[len(T)] += 1
        mismatches += not (T == F and is_neutrosophic_topology(T))
    return sizes, mismatches, t_enum, t_fix


def main():
    defaults = SweepConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field in ("trials", "seed", "max_universe", "members", "resolution"):
        p.add_argument("--" + field.replace("_", "-"), type=int, default=getattr(defaults, field))
    cfg = SweepConfig(**vars(p.parse_args()))

    sizes, mismatches, t_enum, t_fix = sweep(cfg)
    print(f"{cfg.trials} trials, seed {cfg.seed}, up to {cfg.members} sub-basis members")
    print(f"mismatches: {mismatches}")
    print(f"enumeration {t_enum:.2f}s, fixpoint {t_fix:.2f}s")
    print("|T|  count")
    for size in sorted(sizes):
        print(f"{size:3d}  {sizes[size]}")


if __name__ == "__main__":
    main()
