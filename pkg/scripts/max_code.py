"""Exact largest single-0-deletion code for small n, against the upper estimate.

Each weight class is an independent set-packing ILP; n = 10 takes about a
minute with HiGHS.
"""
import argparse
import time

from asymdl.bounds import upper_bound_size
from asymdl.channel import error_ball
from asymdl.oracle import max_code_size


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--t", type=int, default=1)
    ap.add_argument("--s", type=int, default=0)
    args = ap.parse_args(argv)
    print(f"{'n':>3} {'max':>6} {'estimate':>10} {'seconds':>8}")
    for n in range(4, args.max_n + 1):
        start = time.perf_counter()
        best = max_code_size(n, lambda c: error_ball(c, args.t, args.s))
        est = float(upper_bound_size(n, args.t, args.s))
        print(f"{n:>3} {best:>6} {est:>10.1f} {time.perf_counter() - start:>8.1f}", flush=True)


if __name__ == "__main__":
    main()
