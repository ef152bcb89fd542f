"""Compare the compiled and pure-Python kernels (and the Fraction reference
path of the integrator) on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import time
from functools import reduce

from franel import _kernels
from franel.arith import poly_denominator
from franel.bernoulli import bernoulli_polynomial
from franel.integrals import IntegralSpec, franel_integral


def cell_case(index, tup):
    base = bernoulli_polynomial(index)
    d = poly_denominator(base)
    coeffs = [int(c * d) for c in base.coeffs]
    L = math.lcm(*tup)
    ts = sorted({j * (L // a) for a in tup for j in range(a + 1)})
    deg = index * len(tup)
    D = reduce(math.lcm, range(1, deg + 2), 1)
    return coeffs, list(tup), ts, L, [D // (j + 1) for j in range(deg + 1)]


def lattice_case(exponent, tup, U):
    W = reduce(math.lcm, range(1, U + 1), 1) ** exponent
    wpos = [W // u**exponent for u in range(1, U + 1)]
    return list(tup), wpos, [-w for w in wpos], U


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _kernels.backends()
    print(f"default backend: {_kernels.BACKEND}; available: {', '.join(sorted(backends))}")

    workloads = [
        ("cell_sum I_1(7,9,10,11,12,13)", "cell_sum", cell_case(1, (7, 9, 10, 11, 12, 13))),
        ("cell_sum I_5(7,8,9,10)", "cell_sum", cell_case(5, (7, 8, 9, 10))),
        ("cell_sum I_3(11,13,17,19)", "cell_sum", cell_case(3, (11, 13, 17, 19))),
        ("lattice e=1 (1,1,1,1) U=300", "lattice_numerator", lattice_case(1, (1, 1, 1, 1), 300)),
        ("lattice e=3 (1,2,3,4) U=150", "lattice_numerator", lattice_case(3, (1, 2, 3, 4), 150)),
    ]
    print(f"{'workload':34} " + " ".join(f"{name:>10}" for name in sorted(backends)) + "   speedup")
    for label, fname, case in workloads:
        timings, results = {}, set()
        for name, mod in sorted(backends.items()):
            timings[name], res = best_of(lambda: getattr(mod, fname)(*case), args.repeat)
            results.add(res)
        assert len(results) == 1, f"backends disagree on {label}"
        speed = timings["python"] / timings["cython"] if "cython" in timings else float("nan")
        cols = " ".join(f"{timings[n] * 1000:>8.1f}ms" for n in sorted(backends))
        print(f"{label:34} {cols}   {speed:6.1f}x")

    spec = IntegralSpec(3, (5, 6, 7, 8))
    ref, val = best_of(lambda: franel_integral(spec, "rational"), 1)
    fast, val2 = best_of(lambda: franel_integral(spec), args.repeat)
    assert val == val2
    print(f"franel_integral I_3(5,6,7,8): rational path {ref * 1000:.1f}ms, kernel path {fast * 1000:.1f}ms")


if __name__ == "__main__":
    main()
