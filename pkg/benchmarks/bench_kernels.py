"""Compare the compiled and pure-Python polynomial kernels.

Runs the raw kernels on random integer polynomials, then a small end-to-end
workload (one two-leg sweep) under each backend in a subprocess, since the
backend is fixed at import time.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from topvertex import _pykernels

try:
    from topvertex import _ckernels
except ImportError:
    _ckernels = None

WORKLOAD = (
    "from topvertex.harness import SweepConfig, run_sweep;"
    "run_sweep(SweepConfig(legs=2, max_total_size=6, framings=((1, -1),)))"
)


def _poly(rng: random.Random, deg: int, bits: int) -> list[int]:
    p = [rng.randint(-(1 << bits), 1 << bits) for _ in range(deg + 1)]
    p[-1] = p[-1] or 1
    return p


def bench_raw(repeat: int) -> None:
    rng = random.Random(1)
    cases = [(8, 8), (40, 16), (120, 64)]
    print(f"{'degree':>6} {'bits':>5} {'backend':>8} {'mul us':>9} {'divexact us':>12}")
    for deg, bits in cases:
        a, b = _poly(rng, deg, bits), _poly(rng, deg, bits)
        for name, mod in (("python", _pykernels), ("cython", _ckernels)):
            if mod is None:
                continue
            prod = mod.mul(a, b)
            assert mod.divexact(prod, b) == a
            tm = min(timeit.repeat(lambda: mod.mul(a, b), number=200, repeat=repeat)) / 200
            td = min(timeit.repeat(lambda: mod.divexact(prod, b), number=200, repeat=repeat)) / 200
            print(f"{deg:>6} {bits:>5} {name:>8} {tm * 1e6:>9.1f} {td * 1e6:>12.1f}")


def bench_workload(repeat: int) -> None:
    for name, flag in (("cython", "0"), ("python", "1")):
        env = dict(os.environ, TOPVERTEX_PURE_PYTHON=flag)
        best = None
        for _ in range(repeat):
            out = subprocess.run(
                [sys.executable, "-c", f"import time; t=time.perf_counter(); {WORKLOAD}; print(time.perf_counter()-t)"],
                env=env,
                capture_output=True,
                text=True,
                check=True,
            )
            t = float(out.stdout.strip().splitlines()[-1])
            best = t if best is None else min(best, t)
        print(f"two-leg sweep, size <= 6, {name:>6}: {best:.2f} s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback is measured")
    bench_raw(args.repeat)
    bench_workload(args.repeat)


if __name__ == "__main__":
    main()
