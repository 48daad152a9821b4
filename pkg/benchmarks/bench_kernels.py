"""Time the numba kernels against the pure-numpy fallback on the same inputs.

    python3 benchmarks/bench_kernels.py [--n-topologies 6] [--n-maps 7] [--repeat 3]

Both backends are imported directly, so the ``ALEX_NUMBA`` flag does not matter here.
Each numba kernel is called once before timing so compilation is excluded.
"""
import argparse
import time

import numpy as np

from alexspace import kernels_nb, kernels_np


def best_of(repeat, fn, *args):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(nt, nm):
    total_t = int(kernels_nb.preorder_count(nt, 0, 1 << nt))
    rows = kernels_nb.preorder_rows(nt, 0, 1 << nt)
    maps = kernels_nb.maps_from_index(nm, 0, nm ** nm)
    yield f"preorder_rows n={nt} ({total_t} rows)", "preorder_rows", (nt, 0, 1 << nt)
    yield f"uniformizable_flags n={nt}", "uniformizable_flags", (rows,)
    yield f"row_keys n={nt}", "row_keys", (rows,)
    yield f"maps_from_index n={nm} ({nm ** nm} maps)", "maps_from_index", (nm, 0, nm ** nm)
    yield f"map_topology_rows n={nm}", "map_topology_rows", (maps,)
    yield f"all_periodic_flags n={nm}", "all_periodic_flags", (maps,)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-topologies", type=int, default=6)
    ap.add_argument("--n-maps", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    print(f"{'kernel':44s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for label, name, call_args in cases(args.n_topologies, args.n_maps):
        fast, slow = getattr(kernels_nb, name), getattr(kernels_np, name)
        fast(*call_args)
        t_nb, a = best_of(args.repeat, fast, *call_args)
        t_np, b = best_of(args.repeat, slow, *call_args)
        if not np.array_equal(np.asarray(a), np.asarray(b)):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{label:44s} {t_nb:10.4f} {t_np:10.4f} {t_np / max(t_nb, 1e-9):7.1f}x")


if __name__ == "__main__":
    main()
