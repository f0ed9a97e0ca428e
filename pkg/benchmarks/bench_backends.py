"""Compare the numba kernels with the pure-numpy path.

Times the three passes of one right-hand-side evaluation (and the limiter
for p = 1) on the vortex meshes, checks the two backends agree, and prints a
table.  The numpy path is slow on fine meshes; ``--meshes`` limits the run.

    python benchmarks/bench_backends.py --meshes A,B,C --p 1,2,3
"""
import argparse
import time

import numpy as np

from dg2d import meshgen
from dg2d._accel import HAS_NUMBA
from dg2d.basis import build_tables
from dg2d.mesh import build_connectivity
from dg2d.problems import vortex_problem
from dg2d.solver import SpatialOperator, limit, project_initial


def best_of(fn, reps, rounds=3):
    fn()
    best = np.inf
    for _ in range(rounds):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn()
        best = min(best, (time.perf_counter() - t0) / reps)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--meshes", default="A,B,C")
    ap.add_argument("--p", default="1,2,3")
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args(argv)
    if not HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    initial, bc, _ = vortex_problem()
    print(f"{'mesh':>4} {'N':>6} {'p':>2} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8} "
          f"{'abs diff':>9} {'limit np':>9} {'limit nb':>9}")
    for level in args.meshes.split(","):
        m = build_connectivity(meshgen.annulus_mesh(level))
        for p in (int(x) for x in args.p.split(",")):
            t = build_tables(p)
            C = project_initial(initial, m, t)
            ops = {b: SpatialOperator(m, t, bc=bc, backend=b) for b in ("numpy", "numba")}
            res = {b: op(C, 0.0) for b, op in ops.items()}
            # absolute: the projected vortex is nearly steady, so the RHS itself is small
            diff = np.abs(res["numpy"] - res["numba"]).max()
            wall = {b: best_of(lambda op=op: op(C, 0.0), args.reps) for b, op in ops.items()}
            lim = {}
            if p == 1:
                for b in ("numpy", "numba"):
                    lim[b] = best_of(lambda b=b: limit(C, m, t, backend=b), args.reps)
            fmt = (lambda v: f"{1e3 * v:9.2f}") if lim else (lambda v: f"{'-':>9}")
            print(f"{level:>4} {m.n_elements:6d} {p:2d} {1e3 * wall['numpy']:10.2f} "
                  f"{1e3 * wall['numba']:10.2f} {wall['numpy'] / wall['numba']:8.1f} "
                  f"{diff:9.1e} {fmt(lim.get('numpy'))} {fmt(lim.get('numba'))}", flush=True)


if __name__ == "__main__":
    main()
