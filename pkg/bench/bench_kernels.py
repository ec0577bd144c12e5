"""Compare the compiled and pure-Python polynomial kernels.

Kernel timings call both backends directly; the end-to-end timing runs the
same Gram workload in two subprocesses, one forced onto the pure backend.

    python3 bench/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from quiverqg import _pypoly

try:
    from quiverqg import _cpoly
except ImportError:
    _cpoly = None

WORKLOAD = """
import time
from quiverqg.poly import BACKEND
from quiverqg.quiver import preset
from quiverqg.pairing import Pairing
t = time.perf_counter()
P = Pairing(preset("three-loop"), 5)
for l in range(1, 6):
    P.gram((l,))
print(BACKEND, time.perf_counter() - t)
"""


def _poly(rng, deg, size):
    return tuple(rng.randint(-size, size) for _ in range(deg)) + (rng.randint(1, size),)


def kernel_cases(rng):
    a = [_poly(rng, 12, 50) for _ in range(40)]
    b = [_poly(rng, 9, 50) for _ in range(40)]
    la = [_poly(rng, 60, 10 ** 12) for _ in range(10)]
    fr = [(x, y) for x, y in zip(a, b)]
    return {
        "pmul": lambda m: [m.pmul(x, y) for x, y in zip(a, b)],
        "pmul-long": lambda m: [m.pmul(x, y) for x, y in zip(la, la[1:])],
        "pgcd": lambda m: [m.pgcd(m.pmul(x, y), m.pmul(x, b[0])) for x, y in zip(a[:10], b[:10])],
        "rf_add": lambda m: [m.rf_add(*p, *q) for p, q in zip(fr, fr[1:])],
        "rf_mul": lambda m: [m.rf_mul(*p, *q) for p, q in zip(fr, fr[1:])],
    }


def run_workload(pure):
    env = dict(os.environ)
    if pure:
        env["QUIVERQG_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True,
                         capture_output=True, text=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rng = random.Random(0)
    cases = kernel_cases(rng)
    print(f"{'kernel':10s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(_pypoly), number=1, repeat=args.repeat)) * 1e3
        if _cpoly is None:
            print(f"{name:10s} {tp:12.2f} {'n/a':>12s}")
            continue
        tc = min(timeit.repeat(lambda: fn(_cpoly), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:10s} {tp:12.2f} {tc:12.2f} {tp / tc:8.2f}")
    b1, t1 = run_workload(pure=True)
    b2, t2 = run_workload(pure=False)
    print(f"\nGram tables, three-loop vertex, heights 1..5")
    print(f"  {b1:8s} {t1:8.2f} s")
    print(f"  {b2:8s} {t2:8.2f} s   speedup {t1 / t2:.2f}")


if __name__ == "__main__":
    main()
