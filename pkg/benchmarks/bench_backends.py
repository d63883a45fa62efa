"""Compare the compiled kernel backend against the pure-Python fallback.

Run:  python3 benchmarks/bench_backends.py
"""

import math
import time

import numpy as np

from polyherglotz.backend import get_backend


def bench(label, fn, n_iter):
    # warm up, then time
    fn()
    t0 = time.perf_counter()
    for _ in range(n_iter):
        fn()
    dt = (time.perf_counter() - t0) / n_iter
    print(f"  {label:<34s} {dt * 1e6:10.2f} us/call")
    return dt


def main():
    rng = np.random.default_rng(42)
    zs3 = tuple(complex(rng.uniform(-3, 3), rng.uniform(0.1, 3)) for _ in range(3))
    ts3 = tuple(rng.uniform(-3, 3) for _ in range(3))
    z1 = 0.7 + 0.02j  # near-real, the hot case inside Stieltjes inversion

    backends = []
    try:
        backends.append(("compiled", get_backend("compiled")))
    except ImportError:
        print("compiled backend not available")
    backends.append(("python", get_backend("python")))

    results = {}
    for name, b in backends:
        print(f"{name}:")
        results[name, "kernel"] = bench(
            "kernel_k n=3", lambda: b.kernel_k(zs3, ts3), 20000
        )
        results[name, "symsum"] = bench(
            "symmetry_sum n=3", lambda: b.symmetry_sum(zs3, ts3), 5000
        )
        results[name, "altsum"] = bench(
            "alternating_sum n=3", lambda: b.alternating_sum(zs3, ts3), 5000
        )
        results[name, "aline"] = bench(
            "a_line_integral (Im z = 0.02)",
            lambda: b.a_line_integral(z1, 0, 1.0, 0.0, 1e-10, 1e-9, 2000),
            200,
        )

    if len(backends) == 2:
        print("speedup (python / compiled):")
        for key in ("kernel", "symsum", "altsum", "aline"):
            s = results["python", key] / results["compiled", key]
            print(f"  {key:<12s} {s:6.1f}x")


if __name__ == "__main__":
    main()
