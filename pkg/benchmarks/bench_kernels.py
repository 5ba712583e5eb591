"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--images 5000] [--users 20 40 80] [--repeat 3]
"""

import argparse
import json
import timeit

import numpy as np

from fbnll import _pykernels
from fbnll.kernels import AVERAGE, compiled_available


def _backends():
    out = {"python": _pykernels}
    if compiled_available():
        from fbnll import _ckernels

        out["cython"] = _ckernels
    return out


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench_hog(backends, n_images, repeat):
    gray = np.random.default_rng(0).random((n_images, 32, 32)) * 255.0
    rows = []
    for name, mod in backends.items():
        t = _best(lambda: mod.hog_batch(gray, 8, 2, 1, 9, 1e-6), repeat)
        rows.append({"kernel": "hog", "size": n_images, "backend": name, "seconds": t})
    return rows


def bench_hac(backends, users, repeat):
    rows = []
    rng = np.random.default_rng(1)
    for k in users:
        r = rng.random((k, k))
        dist = 1.0 - 0.5 * (r + r.T)
        np.fill_diagonal(dist, 0.0)
        for name, mod in backends.items():
            t = _best(lambda: mod.agglomerate(dist.copy(), 2, AVERAGE), repeat)
            rows.append({"kernel": "hac", "size": k, "backend": name, "seconds": t})
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--images", type=int, default=5000)
    ap.add_argument("--users", type=int, nargs="+", default=[20, 40, 80])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print raw rows as JSON")
    args = ap.parse_args()

    backends = _backends()
    rows = bench_hog(backends, args.images, args.repeat) + bench_hac(backends, args.users, args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<6} {'size':>6} {'backend':<8} {'seconds':>10} {'speedup':>8}")
    for row in rows:
        ref = next(r["seconds"] for r in rows
                   if r["kernel"] == row["kernel"] and r["size"] == row["size"] and r["backend"] == "python")
        print(f"{row['kernel']:<6} {row['size']:>6} {row['backend']:<8} {row['seconds']:>10.4f} "
              f"{ref / row['seconds']:>7.1f}x")
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
