"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Each kernel is timed on
inputs taken from the package's own workloads and the two backends are
checked to agree before any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import time

from parketaylor import _kernels_py as py
from parketaylor.ptcore import build_matrix, z_ring
from parketaylor.toric import kernel_basis, kernel_binomials, quadratic_family

try:
    from parketaylor import _kernels as cy
except ImportError:  # extension not built
    cy = None

P = 4611686018427387847


def _time(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def bench_rank(n):
    dense = build_matrix(n).to_dense()
    return "rank_mod_p A_%d" % n, (lambda m: m.rank_mod_p(dense, P))


def bench_lattice(n):
    # the conjecture check: stream the quadratic families, then test the kernel
    fam = [b.sparse_vector() for b in quadratic_family(n)]
    kern = [{i: x for i, x in enumerate(v) if x} for v in kernel_basis(n).vectors]

    def run(m):
        rows = {}
        for v in fam:
            if not m.lattice_reduce(rows, v):
                m.lattice_insert(rows, dict(v))
        return sum(1 for v in kern if m.lattice_reduce(rows, v))

    return "lattice stream n=%d" % n, run


def bench_normal_form(nmon=2000):
    # kernel binomials of n = 6, each oriented by degrevlex so rewriting stops
    R = z_ring(6)
    leads, trails, masks = [], [], []
    for b in kernel_binomials(6):
        a, c = sorted(b.polynomial(6).terms, key=R.key, reverse=True)
        leads.append(a)
        trails.append(c)
        masks.append(sum(1 << i for i, e in enumerate(a) if e))
    rng = random.Random(1)
    mons = [tuple(rng.randrange(2) for _ in range(R.nvars)) for _ in range(nmon)]

    def run(m):
        return [m.binomial_normal_form(x, leads, trails, masks) for x in mons]

    return "binomial normal form n=6", run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--large", action="store_true", help="add the n=8 lattice stream (about a minute per backend)")
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
    cases = [bench_rank(6), bench_rank(7), bench_lattice(7), bench_normal_form()]
    if args.large:
        cases.insert(3, bench_lattice(8))
    print(f"{'kernel':32s} {'python [s]':>12s} {'compiled [s]':>13s} {'speedup':>8s}")
    for name, fn in cases:
        tp, rp = _time(fn, py, repeat=args.repeat)
        if cy is None:
            print(f"{name:32s} {tp:12.4f} {'-':>13s} {'-':>8s}")
            continue
        tc, rc = _time(fn, cy, repeat=args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:32s} {tp:12.4f} {tc:13.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
