"""Supersonic vortex convergence study on the annulus meshes A-D.

Each (mesh, p) pair is run to a steady state and the L2 density error is
stored in ``results/convergence.json``.  The file is updated after every run,
so an interrupted study resumes where it stopped.  Entries are keyed by the
run parameters; pass ``--force`` to recompute them anyway.

    python benchmarks/convergence_study.py --p 1,2,3,4 --meshes A,B,C,D --cfl 0.9
"""
import argparse
import json
import math
import platform
import time
from pathlib import Path

import dg2d
from dg2d.config import RunConfig
from dg2d.driver import run

RESULTS = Path(__file__).resolve().parent / "results" / "convergence.json"


def key(level, p, cfl, tol, rk):
    return f"{level}/p{p}/cfl{cfl:g}/tol{tol:g}/rk{rk}"


def load(path=RESULTS):
    if path.exists():
        return json.loads(path.read_text())
    return {"runs": {}}


def run_case(level, p, cfl, tol, rk=4):
    cfg = RunConfig(problem="supersonic_vortex", mesh=f"vortex:{level}", p=p, rk_order=rk,
                    cfl=cfl, steady_tol=tol, output="none").validate()
    report, _ = run(cfg, write_output=False)
    return {"mesh": level, "p": p, "cfl": cfl, "steady_tol": tol, "rk_order": rk,
            "elements": report.n_elements, "steps": report.steps, "t_final": report.t_final,
            "l2_density_error": report.l2_density_error, "final_residual": report.final_residual,
            "wall_time": report.wall_time, "version": dg2d.__version__,
            "host": platform.node(), "finished": time.strftime("%Y-%m-%dT%H:%M:%S")}


def rates(data, meshes, p, cfl, tol, rk=4):
    errs = [data["runs"].get(key(m, p, cfl, tol, rk), {}).get("l2_density_error")
            for m in meshes]
    return [math.log2(a / b) if a and b else None for a, b in zip(errs, errs[1:])]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--meshes", default="A,B,C,D")
    ap.add_argument("--p", default="1,2,3,4")
    ap.add_argument("--cfl", type=float, default=0.9)
    ap.add_argument("--tol", type=float, default=1e-14)
    ap.add_argument("--force", action="store_true")
    ap.add_argument("--out", type=Path, default=RESULTS)
    args = ap.parse_args(argv)
    meshes = args.meshes.split(",")
    data = load(args.out)
    for p in (int(x) for x in args.p.split(",")):
        for level in meshes:
            k = key(level, p, args.cfl, args.tol, 4)
            if k in data["runs"] and not args.force:
                continue
            data["runs"][k] = run_case(level, p, args.cfl, args.tol)
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(json.dumps(data, indent=1, sort_keys=True))
            r = data["runs"][k]
            print(f"{level} p={p} elements={r['elements']} steps={r['steps']} "
                  f"err={r['l2_density_error']:.6e} wall={r['wall_time']:.1f}s", flush=True)
        print(f"p={p} rates:", rates(data, meshes, p, args.cfl, args.tol), flush=True)


if __name__ == "__main__":
    main()
