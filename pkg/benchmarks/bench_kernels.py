"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Inputs are boundary matrices of the cell complexes (unchecked builds, so
types whose boundary does not square to zero still give realistic sparsity)
plus random dense matrices.
"""
import argparse
import random
import statistics
import time

from cellhom import kernels
from cellhom.chain import build_complex
from cellhom.snf import IntMatrix, rank_mod2, smith_normal_form


def workloads():
    out = []
    for name, space in [("G2", "compact"), ("A3", "compact"), ("A4", "flag"), ("A4", "compact")]:
        cx = build_complex(name, space, check=False)
        mats = [cx.delta(d) for d in range(1, cx.top_dim + 1)]
        out.append((f"{name} {space} boundaries", mats))
    rng = random.Random(0)
    for n in (40, 80):
        ent = {(i, j): rng.randint(-3, 3) for i in range(n) for j in range(n)}
        out.append((f"random dense {n}x{n}", [IntMatrix(n, n, {k: v for k, v in ent.items() if v})]))
    return out


def bench(fn, mats, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            fn(m)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"default backend: {kernels.BACKEND}")
    print(f"{'workload':32} {'kernel':8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for label, mats in workloads():
        for kname, fn in [("snf", smith_normal_form), ("rank2", rank_mod2)]:
            ref = [fn(m, "python") for m in mats]
            row = {}
            for b in backends:
                assert [fn(m, b) for m in mats] == ref, (label, b)
                row[b] = bench(lambda m: fn(m, b), mats, args.repeat)
            sp = f"{row['python'] / row['cython']:8.1f}x" if "cython" in row else "       -"
            cells = " ".join(f"{row[b] * 1e3:8.1f}ms" for b in backends)
            print(f"{label:32} {kname:8} {cells} {sp}")


if __name__ == "__main__":
    main()
