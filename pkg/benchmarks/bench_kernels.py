"""Compare the pure-Python and Cython kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both modules directly on the same operator data. The
end-to-end rows run the 35-dimensional closure in a child process with the
backend forced through WSDALG_PURE_PYTHON.
"""

import argparse
import os
import subprocess
import sys
import timeit

from wsdalg._kernels import _pure, available_backends
from wsdalg.canon_ops import generators

CLOSURE_SNIPPET = (
    "import time; t=time.perf_counter();"
    "from wsdalg.verify import generated_algebra;"
    "L=generated_algebra(); assert L.dim == 35;"
    "print(time.perf_counter()-t)"
)


def _operands():
    gens = generators()
    flats = [g.flat for g in gens]
    # a few products so matmul sees denser inputs too
    dense = [_pure.matmul(a, b, 64) for a in flats[:4] for b in flats[6:10]]
    return flats, [d for d in dense if d]


def bench_backend(mod, flats, dense, repeat):
    def mm():
        for a in flats:
            for b in flats:
                mod.matmul(a, b, 64)

    def mm_dense():
        for a in dense:
            for b in dense:
                mod.matmul(a, b, 64)

    def elim():
        rows = []
        for v in flats + dense:
            r = mod.reduce(dict(v), rows)
            p = mod.pivot(r)
            if p is not None:
                rows.append((p, r))
                rows.sort(key=lambda t: t[0])

    out = {}
    for name, fn in (("matmul 12x12 generators", mm), ("matmul products", mm_dense), ("echelon insert", elim)):
        out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
    return out


def closure_time(pure):
    env = dict(os.environ)
    if pure:
        env["WSDALG_PURE_PYTHON"] = "1"
    else:
        env.pop("WSDALG_PURE_PYTHON", None)
    res = subprocess.run([sys.executable, "-c", CLOSURE_SNIPPET], env=env,
                         capture_output=True, text=True, check=True)
    return float(res.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    flats, dense = _operands()
    backends = available_backends()
    results = {m.BACKEND: bench_backend(m, flats, dense, args.repeat) for m in backends}
    names = list(next(iter(results.values())))
    print(f"{'kernel':<28}" + "".join(f"{b:>12}" for b in results) + ("     speedup" if len(results) > 1 else ""))
    for n in names:
        row = [results[b][n] for b in results]
        line = f"{n:<28}" + "".join(f"{t * 1e3:>10.2f}ms" for t in row)
        if len(row) > 1:
            line += f"{row[0] / row[-1]:>11.1f}x"
        print(line)

    pure = closure_time(True)
    line = f"{'closure (end to end)':<28}{pure * 1e3:>10.2f}ms"
    if len(backends) > 1:
        fast = closure_time(False)
        line += f"{fast * 1e3:>10.2f}ms{pure / fast:>11.1f}x"
    print(line)
    if len(backends) == 1:
        print("compiled backend not built; only the pure-Python column is shown")


if __name__ == "__main__":
    main()
