"""Compare the compiled and pure-Python flag-orbit kernels.

    python benchmarks/bench_kernel.py --radius 5 --repeat 3
"""

import argparse
import time

from skeletal import kernel
from skeletal.catalog import CATALOG_IDS, generator_system
from skeletal.wythoff import ORBIT_CAP, ORBIT_SLACK, _seed, base_face


def time_kernel(fn, gs, bound, repeat):
    seed, zigzag = _seed(base_face(gs))
    rows = [g.as_row() for g in gs.generators]
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        verts, _, _ = fn(rows, gs.base_vertex, gs.twin, seed, zigzag, bound, ORBIT_CAP)
        best = min(best, time.perf_counter() - t)
    return best, len(verts)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--ids", nargs="*", default=[c for c in CATALOG_IDS if c != "skel-434"])
    args = p.parse_args(argv)

    backends = sorted(kernel.BACKENDS)
    print(f"radius {args.radius}, best of {args.repeat}; backends: {', '.join(backends)}")
    print(f"{'id':16s} {'flags':>9s} " + " ".join(f"{b + ' s':>10s}" for b in backends) + "  speedup")
    totals = dict.fromkeys(backends, 0.0)
    for cid in args.ids:
        gs = generator_system(cid)
        times = {}
        for b in backends:
            times[b], n = time_kernel(kernel.BACKENDS[b], gs, args.radius + ORBIT_SLACK, args.repeat)
            totals[b] += times[b]
        speed = f"{times['python'] / times['cython']:7.1f}x" if "cython" in times else "      -"
        print(f"{cid:16s} {n:9d} " + " ".join(f"{times[b]:10.4f}" for b in backends) + "  " + speed)
    if "cython" in totals:
        print(f"{'total':16s} {'':9s} " + " ".join(f"{totals[b]:10.4f}" for b in backends)
              + f"  {totals['python'] / totals['cython']:7.1f}x")


if __name__ == "__main__":
    main()
