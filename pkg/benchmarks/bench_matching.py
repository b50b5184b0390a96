"""Time the compiled matching kernel against the pure-Python twin.

Both kernels run on identical random graphs; sizes are checked to agree
before any timing is reported.
"""

import argparse
import random
import statistics
import time

from edgepow.kernels import BACKEND
from edgepow.kernels import _pure

try:
    from edgepow.kernels import _blossom
except ImportError:
    _blossom = None


def random_graph(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]


def time_kernel(kernel, cases, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for n, edges in cases:
            kernel.max_matching(n, edges)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 60, 120, 240])
    parser.add_argument("--density", type=float, default=0.15)
    parser.add_argument("--cases", type=int, default=30, help="graphs per size")
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats, best kept")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"selected backend at import: {BACKEND}")
    if _blossom is None:
        print("compiled kernel unavailable, timing the pure kernel only")
    rng = random.Random(args.seed)

    for n in args.sizes:
        cases = [(n, random_graph(n, args.density, rng)) for _ in range(args.cases)]
        if _blossom is not None:
            for cn, edges in cases:
                size_c, _ = _blossom.max_matching(cn, edges)
                size_p, _ = _pure.max_matching(cn, edges)
                assert size_c == size_p, (cn, edges)
        t_pure = time_kernel(_pure, cases, args.repeats)
        line = f"n={n:4d}  edges~{statistics.mean(len(e) for _, e in cases):7.1f}  "
        line += f"pure {t_pure * 1000:8.2f} ms"
        if _blossom is not None:
            t_comp = time_kernel(_blossom, cases, args.repeats)
            line += f"  compiled {t_comp * 1000:8.2f} ms  speedup {t_pure / t_comp:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
