"""Compare the compiled and pure-Python permutation-group kernels.

Run from the repository root after building the extension:

    python3 benchmarks/bench_kernels.py --repeat 3
"""
from __future__ import annotations

import argparse
import statistics
import time

from cubicbir import e6
from cubicbir.kernels import compiled_backend, python_backend


def _time(fn, repeat: int) -> list[float]:
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    gens = e6.reflection_permutations()
    backends = [("python", python_backend)]
    if compiled_backend is not None:
        backends.append(("cython", compiled_backend))
    else:
        print("compiled extension not built; timing the fallback only")

    results = {}
    for name, mod in backends:
        order = len(mod.group_closure(gens, 27))
        closure = _time(lambda: mod.group_closure(gens, 27), args.repeat)
        orbits = _time(lambda: mod.orbit_partition(gens, 27), args.repeat)
        results[name] = statistics.median(closure)
        print(
            f"{name:7s} closure order={order} median={statistics.median(closure):.3f}s "
            f"orbits median={statistics.median(orbits) * 1e6:.1f}us"
        )
    if len(results) == 2:
        print(f"speedup {results['python'] / results['cython']:.1f}x")


if __name__ == "__main__":
    main()
