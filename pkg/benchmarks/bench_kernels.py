"""Compare the compiled kernels against the pure-Python fallback.

Each mode runs in its own interpreter because the choice is fixed at import
time.  The JIT run is timed after a warm-up call so compilation (or loading
from numba's on-disk cache) is not counted.

    python3 benchmarks/bench_kernels.py [--n-max 7] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(n_max):
    import numpy as np

    from clawperf import _kernels as K
    from clawperf.enumeration import EnumerationQuery, collect
    from clawperf.graph import Graph
    from clawperf.named import CLAW

    rng = np.random.default_rng(7)
    randoms = []
    for _ in range(200):
        n = 11
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        randoms.append(Graph(n, rows))
    q = EnumerationQuery(n_max=n_max, forbidden=(CLAW,), require_connected=True)
    init = np.zeros(11, dtype=np.int64)

    def enum():
        return len(collect(q))

    def canon():
        return sum(int(K.canon(G.array, G.n, init)[0][0]) & 1 for G in randoms)

    def perfect():
        return sum(int(K.perfect_code(G.array, G.n)) for G in randoms)

    def alpha():
        return sum(int(K.independence(G.array, G.n)[0]) for G in randoms)

    return {"enumerate": enum, "canon": canon, "perfect_code": perfect, "alpha": alpha}


def worker(n_max, repeat):
    from clawperf import JIT_ENABLED

    out = {"jit": JIT_ENABLED, "times": {}, "results": {}}
    for name, fn in workloads(n_max).items():
        out["results"][name] = fn()  # warm-up, and the value both modes must agree on
        best = float("inf")
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
        out["times"][name] = best
    print(json.dumps(out))


def run_mode(no_jit, n_max, repeat):
    env = dict(os.environ)
    env["CLAWPERF_NO_JIT"] = "1" if no_jit else "0"
    cmd = [sys.executable, __file__, "--worker", "--n-max", str(n_max), "--repeat", str(repeat)]
    res = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    a = ap.parse_args()
    if a.worker:
        worker(a.n_max, a.repeat)
        return
    jit = run_mode(False, a.n_max, a.repeat)
    pure = run_mode(True, a.n_max, a.repeat)
    if jit["results"] != pure["results"]:
        sys.exit(f"modes disagree: {jit['results']} vs {pure['results']}")
    print(f"{'workload':<14}{'jit (s)':>12}{'pure (s)':>12}{'speedup':>10}")
    for name in jit["times"]:
        tj, tp = jit["times"][name], pure["times"][name]
        print(f"{name:<14}{tj:>12.4f}{tp:>12.4f}{tp / tj:>9.1f}x")


if __name__ == "__main__":
    main()
