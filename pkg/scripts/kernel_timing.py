"""Wall-clock timing of the generic kernel for each shipped semiring.

    python scripts/kernel_timing.py --sizes 8 16 32 64 --repeats 3
"""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, field
from typing import List

from semipath.paths import PATH_SETS, initial_path_matrix
from semipath.semiring import BOOLEAN, COUNTING, LETTER_SETS, MAX_PLUS, MIN_PLUS, closure_in_place, copy_matrix
from semipath.shortest import distance_matrix


@dataclass
class TimingConfig:
    sizes: List[int] = field(default_factory=lambda: [8, 16, 32, 64])
    repeats: int = 3
    density: float = 0.2
    seed: int = 0
    # enumeration output is factorial; keep it small
    path_sets_max_n: int = 9


def _inputs(name: str, n: int, cfg: TimingConfig, rng: random.Random):
    if name in ("boolean", "path-sets"):
        A = [[1 if i != j and rng.random() < cfg.density else 0 for j in range(n)] for i in range(n)]
        return initial_path_matrix(A) if name == "path-sets" else A
    if name in ("counting", "max-plus"):
        dag = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < cfg.density]
        if name == "counting":
            A = [[0] * n for _ in range(n)]
            for i, j in dag:
                A[i][j] = 1
            return A
        return distance_matrix(n, [(i, j, rng.randint(1, 10)) for i, j in dag])
    if name == "min-plus":
        arcs = [(i, j, rng.randint(1, 10)) for i in range(n) for j in range(n) if i != j and rng.random() < cfg.density]
        return distance_matrix(n, arcs)
    return [[rng.randrange(256) if rng.random() < cfg.density else 0 for _ in range(n)] for _ in range(n)]


SEMIRINGS = {
    "boolean": BOOLEAN,
    "min-plus": MIN_PLUS,
    "max-plus": MAX_PLUS,
    "counting": COUNTING,
    "letter-sets": LETTER_SETS,
    "path-sets": PATH_SETS,
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=TimingConfig().sizes)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--density", type=float, default=0.2)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    cfg = TimingConfig(args.sizes, args.repeats, args.density, args.seed)
    rng = random.Random(cfg.seed)

    print(f"{'semiring':<12} {'n':>5} {'best s':>10}")
    for name, S in SEMIRINGS.items():
        for n in cfg.sizes:
            if name == "path-sets" and n > cfg.path_sets_max_n:
                continue
            W0 = _inputs(name, n, cfg, rng)
            best = float("inf")
            for _ in range(cfg.repeats):
                W = copy_matrix(W0)
                t0 = time.perf_counter()
                closure_in_place(W, S)
                best = min(best, time.perf_counter() - t0)
            print(f"{name:<12} {n:>5} {best:>10.4f}")


if __name__ == "__main__":
    main()
