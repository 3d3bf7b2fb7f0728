"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit
from array import array

from gammarough import kernels


def workloads(seed=0):
    rng = random.Random(seed)
    n, m = 8, 2
    # random tables are rarely associative, so associativity_failures scans them fully
    table = array("q", [rng.randrange(n) for _ in range(m * n * n)])
    full = (1 << n) - 1
    n1 = 6
    src = array("q", [rng.randrange(n1) for _ in range(m * n1 * n1)])
    images = [array("Q", [rng.randint(1, full) for _ in range(n1)]) for _ in range(200)]
    subsets = [(rng.randint(0, full), rng.randint(0, full)) for _ in range(2000)]

    def setup(mod):
        return mod.product_table(table, n, m)

    return {
        "product_table": lambda mod, pm: mod.product_table(table, n, m),
        "set_product x2000": lambda mod, pm: [mod.set_product(pm, n, a, b) for a, b in subsets],
        "associativity_failures": lambda mod, pm: mod.associativity_failures(table, n, m),
        "antihom_scan x200": lambda mod, pm: [mod.antihom_scan(src, n1, table, n, m, im) for im in images],
        "all_approximations x200": lambda mod, pm: [mod.all_approximations(im, n1, n) for im in images],
        "prime_witness x2000": lambda mod, pm: [mod.prime_witness(table, n, m, a) for a, _ in subsets],
    }, setup


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    backends = kernels.available_backends()
    jobs, setup = workloads(args.seed)
    names = list(backends)
    print(f"{'workload':26}" + "".join(f"{b:>12}" for b in names) + ("    speedup" if len(names) == 2 else ""))
    for label, job in jobs.items():
        best = {}
        for b, mod in backends.items():
            pm = setup(mod)
            best[b] = min(timeit.repeat(lambda: job(mod, pm), number=1, repeat=args.repeat))
        row = f"{label:26}" + "".join(f"{best[b] * 1e3:>10.2f}ms" for b in names)
        if len(names) == 2:
            row += f"  {best['python'] / best['cython']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
