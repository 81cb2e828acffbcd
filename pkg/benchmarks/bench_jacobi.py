"""Benchmark the integer Jacobi kernel: numba vs the pure-numpy fallback.

Builds the assembled sl_9 example (80-dimensional, the largest algebra
in scope), clears denominators, and times a full C(80,3) triple scan
under each backend in a fresh subprocess (the backend is chosen once
per process via THETA_GRADED_BACKEND).

Run:  python benchmarks/bench_jacobi.py
"""

import json
import os
import subprocess
import sys
import textwrap

WORKER = textwrap.dedent(
    """
    import itertools, json, time
    import numpy as np
    from thetagraded.extract import example_sl_2n1, extract_coordinates
    from thetagraded.graded import assemble
    from thetagraded.kernels import backend, jacobi_scan

    ex = extract_coordinates(example_sl_2n1(4))
    alg = assemble(ex.data)
    c, denom = alg.integer_constants()
    triples = np.array(list(itertools.combinations(range(alg.dim), 3)), dtype=np.int64)

    jacobi_scan(c, triples[:16])  # warm up (jit compile)
    best = None
    for _ in range(3):
        t0 = time.perf_counter()
        flags = jacobi_scan(c, triples)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    print(json.dumps({
        "backend": backend(),
        "dim": alg.dim,
        "denominator": denom,
        "triples": int(triples.shape[0]),
        "violations": int(flags.sum()),
        "best_seconds": best,
    }))
    """
)


def run(backend_name):
    env = dict(os.environ, THETA_GRADED_BACKEND=backend_name)
    out = subprocess.run(
        [sys.executable, "-c", WORKER], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    results = [run(b) for b in ("numba", "numpy")]
    for r in results:
        print(
            f"{r['backend']:>6}: {r['triples']} triples on dim {r['dim']} "
            f"(denominator {r['denominator']}) in {r['best_seconds']:.3f}s, "
            f"violations={r['violations']}"
        )
    if results[0]["violations"] != results[1]["violations"]:
        raise SystemExit("backends disagree")
    speedup = results[1]["best_seconds"] / results[0]["best_seconds"]
    print(f"numba speedup over numpy fallback: {speedup:.1f}x")


if __name__ == "__main__":
    main()
