"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Part one times each hot kernel on a fixed batch of inputs.  Part two runs a
whole workload (crystal builds plus the braid orders of the nine n=3 shapes)
in a subprocess per backend, selected with SHIFTED_CRYSTAL_PURE.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from shifted_crystal import _pykernels as py

try:
    from shifted_crystal import _kernels as cy
except ImportError:
    cy = None

WORKLOAD = """
import time
from shifted_crystal import kernels
from shifted_crystal.cactus import braid_order
from shifted_crystal.graph import build
from shifted_crystal.shapes import ShiftedShape
t0 = time.perf_counter()
for nu in [(3,2,1),(4,2,1),(4,3,1),(5,2,1),(5,3,1),(5,4,1),(6,2,1),(6,3,1),(6,4,1)]:
    braid_order(nu, 3)
build(ShiftedShape((4,2,1)), 4)
build(ShiftedShape((5,3,1),(2,)), 4)
print(kernels.BACKEND, time.perf_counter() - t0)
"""


def batch(seed=0, size=2000):
    rnd = random.Random(seed)
    subs = [py.canonical(tuple(rnd.randint(1, 4) for _ in range(rnd.randint(4, 14)))) for _ in range(size)]
    words = [py.canonical(tuple(rnd.randint(1, 8) for _ in range(rnd.randint(4, 14)))) for _ in range(size)]
    return subs, words


def micro(repeat):
    subs, words = batch()
    rows = []
    cases = [
        ("lower_unprimed", subs),
        ("raise_unprimed", subs),
        ("lower_primed", subs),
        ("raise_primed", subs),
        ("walk_end", subs),
        ("canonical", words),
        ("standard_labels", words),
    ]
    for name, data in cases:
        t_py = min(timeit.repeat(lambda: [getattr(py, name)(x) for x in data], number=1, repeat=repeat))
        t_cy = None
        if cy is not None:
            t_cy = min(timeit.repeat(lambda: [getattr(cy, name)(x) for x in data], number=1, repeat=repeat))
        rows.append((name, t_py, t_cy))
    return rows


def end_to_end():
    out = {}
    for pure in (False, True):
        env = dict(os.environ)
        if pure:
            env["SHIFTED_CRYSTAL_PURE"] = "1"
        else:
            env.pop("SHIFTED_CRYSTAL_PURE", None)
        res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':<16} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, t_py, t_cy in micro(args.repeat):
        if t_cy is None:
            print(f"{name:<16} {t_py * 1e3:10.2f} {'n/a':>10} {'':>8}")
        else:
            print(f"{name:<16} {t_py * 1e3:10.2f} {t_cy * 1e3:10.2f} {t_py / t_cy:7.1f}x")
    print()
    for backend, secs in end_to_end().items():
        print(f"workload ({backend}): {secs:.3f}s")


if __name__ == "__main__":
    main()
