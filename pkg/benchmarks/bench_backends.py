"""Compare the compiled and pure-Python polynomial kernels.

    python benchmarks/bench_backends.py [--repeat 5] [--size 40]

Kernel timings use random dense-ish polynomials; the end-to-end timing runs
the Pieri sweep on Fl_4 with every cache cleared between runs.
"""
import argparse
import gc
import random
import statistics
import time

from eqschubert import _backend
from eqschubert.polyring import EquivPoly, poly_ring


def random_poly(ring, rng, nterms, degree):
    terms = {}
    for _ in range(nterms):
        exps = [0] * ring.nvars
        for _ in range(degree):
            exps[rng.randrange(ring.nvars)] += 1
        terms[tuple(exps)] = rng.randint(-9, 9) or 1
    return EquivPoly.from_terms(ring, terms)


def clock(fn, repeat):
    times = []
    for _ in range(repeat):
        gc.collect()
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def clear_caches():
    from eqschubert import giambelli, kostant, pieri

    for mod in (kostant, pieri, giambelli):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def pieri_sweep():
    from eqschubert.pieri import eq_quantum_pieri
    from eqschubert.verify import flag_shapes

    clear_caches()
    for space in flag_shapes(4, min_n=4):
        for idx, i in enumerate(space.steps, 1):
            for p in range(1, i + 1):
                for u in space.elements():
                    eq_quantum_pieri(space, idx, p, u)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=40, help="terms per random factor")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    backends = _backend.available()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend is timed")
    rng = random.Random(args.seed)
    ring = poly_ring(6)
    a = random_poly(ring, rng, args.size, 4)
    b = random_poly(ring, rng, args.size, 3)
    prod = a * b

    rows = []
    for name in backends:
        _backend.set_backend(name)
        assert a * b == prod and prod.divexact(b) == a
        rows.append((name,
                     clock(lambda: [a * b for _ in range(20)], args.repeat) / 20,
                     clock(lambda: [prod.divexact(b) for _ in range(20)], args.repeat) / 20,
                     clock(pieri_sweep, max(1, args.repeat // 2))))
    _backend.set_backend(backends[-1])

    print(f"{'backend':<8} {'mul ms':>10} {'divexact ms':>12} {'Fl_4 sweep s':>13}")
    for name, tm, td, ts in rows:
        print(f"{name:<8} {tm * 1e3:>10.3f} {td * 1e3:>12.3f} {ts:>13.2f}")
    if len(rows) == 2:
        py, cy = rows
        print(f"speedup  {py[1] / cy[1]:>10.1f}x {py[2] / cy[2]:>11.1f}x {py[3] / cy[3]:>12.2f}x")


if __name__ == "__main__":
    main()
