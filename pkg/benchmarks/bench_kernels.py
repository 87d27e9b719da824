"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import itertools
import timeit

import numpy as np

from gabidulin.code import GabidulinCode
from gabidulin.decoder import list_decode
from gabidulin.field import FieldCtx
from gabidulin.kernels import available_backends
from gabidulin.oracle import oracle_closest


def kernel_cases(F, rng):
    k, T = F._k, F._T
    polys = [tuple(int(c) for c in rng.integers(0, F.size, size=6)) for _ in range(64)]
    elems = [int(x) for x in rng.integers(0, F.size, size=256)]
    vecs = [[int(x) for x in rng.integers(0, F.size, size=F.m)] for _ in range(64)]
    divisor = polys[0][:3] + (1,)

    def compose():
        for f, g in zip(polys, polys[1:]):
            k.poly_compose(T, f, g)

    def divide():
        for f in polys:
            k.poly_left_divmod(T, f, divisor)
            k.poly_right_divmod(T, f, divisor)

    def evaluate():
        for f in polys[:8]:
            for x in elems:
                k.poly_eval(T, f, x)

    def rank():
        for v in vecs:
            k.rank_elems(T, v)

    return {"compose": compose, "divide": divide, "eval": evaluate, "rank": rank}


def decoder_cases(backend, rng):
    small = GabidulinCode(FieldCtx(2, 3, backend=backend), 3, 2)
    mid = GabidulinCode(FieldCtx(2, 4, backend=backend), 4, 2)
    F = mid.ctx
    words = [mid.add(mid.encode(mid.random_message(rng)), mid.random_error(2, rng)) for _ in range(20)]

    def exhaustive():
        for codes in itertools.product(range(small.ctx.size), repeat=3):
            list_decode(small, [small.ctx.from_code(c) for c in codes])

    def decode():
        for r in words:
            list_decode(mid, r)

    def oracle():
        for r in words:
            oracle_closest(mid, r)

    assert F.backend == backend
    return {"decode 512 words F_8": exhaustive, "decode 20 rank-2 F_16": decode, "oracle 20 rank-2 F_16": oracle}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    backends = available_backends()
    results = {}
    for b in backends:
        rng = np.random.default_rng(0)
        cases = kernel_cases(FieldCtx(2, 8, backend=b), rng)
        cases.update(decoder_cases(b, rng))
        for name, fn in cases.items():
            results.setdefault(name, {})[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    header = f"{'case':<24}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for name, row in results.items():
        line = f"{name:<24}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in backends)
        if "python" in row and len(row) > 1:
            fast = min(v for b, v in row.items() if b != "python")
            line += f"{row['python'] / fast:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
