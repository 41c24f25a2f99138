"""Time the compiled and pure-Python kernels side by side.

    python benchmarks/bench_kernels.py            # n = 3..5
    python benchmarks/bench_kernels.py --n 6      # add n = 6 (python backend is slow here)
    python benchmarks/bench_kernels.py --json out.json

Each kernel is run ``--repeat`` times per backend and the best wall time is
reported, together with the speedup of the compiled backend.
"""

from __future__ import annotations

import argparse
import json
import random
import time

from stabminors._kernels import available_backends, get_backend
from stabminors.groupaction import act_on_lagrangian, random_element
from stabminors.lagrangian import Lagrangian, symmetric_from_code


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def sample_columns(n: int, count: int, seed: int = 7) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        S = symmetric_from_code(rng.getrandbits(n * (n + 1) // 2), n)
        L = act_on_lagrangian(random_element(n, rng), Lagrangian.from_chart(0, S))
        out.append(L.columns)
    return out


def cases(n: int):
    cols = sample_columns(n, 2000)

    def minors(k):
        return lambda: [k.minor_bits(c, n) for c in cols]

    def charts(k):
        return lambda: k.chart_points(n)

    def bfs(k):
        return lambda: k.orbit_bfs(1, n)

    def part(k):
        seeds = get_backend("python").chart_points(n)
        return lambda: k.partition(n, seeds)

    return [("minor_bits x2000", minors), ("chart_points", charts), ("orbit_bfs(e_empty)", bfs), ("partition", part)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="*", default=[3, 4, 5])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write results to this file")
    args = ap.parse_args(argv)

    backends = available_backends()
    rows = []
    print(f"backends: {', '.join(backends)}")
    print(f"{'n':>2}  {'kernel':<20}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for n in args.n:
        for name, make in cases(n):
            times = {b: best_time(make(get_backend(b)), args.repeat) for b in backends}
            speed = times["python"] / times["cython"] if "cython" in times and times["cython"] > 0 else float("nan")
            rows.append({"n": n, "kernel": name, **{f"{b}_s": t for b, t in times.items()}, "speedup": speed})
            print(f"{n:>2}  {name:<20}" + "".join(f"{times[b]:>11.4f}s" for b in backends) + f"   {speed:7.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
