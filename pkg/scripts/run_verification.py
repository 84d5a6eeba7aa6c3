"""Exhaustive decoder checks for every code family at a chosen length.

    python scripts/run_verification.py --n 10
    python scripts/run_verification.py --n 12 --family lee --t 1 --s 1
"""
import argparse
import json
import sys

from asymdl.errors import GridTooLarge
from asymdl.oracle import exhaustive_decode_check

DEFAULT_RUNS = [
    ("single", {}),
    ("shift", {"s_plus": 1, "s_minus": 0}),
    ("shift", {"s_plus": 1, "s_minus": 1}),
    ("lee", {"t": 1, "s": 1}),
    ("list", {"t": 2, "s_plus": 1, "s_minus": 0}),
    ("list", {"t": 1, "s_plus": 1, "s_minus": 1}),
    ("block", {"t_b": 1, "ell": 2, "s": 0}),
    ("block", {"t_b": 1, "ell": 1, "s": 1}),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--family")
    ap.add_argument("--t", type=int)
    ap.add_argument("--s", type=int)
    ap.add_argument("--s-plus", type=int)
    ap.add_argument("--s-minus", type=int)
    ap.add_argument("--t-b", type=int)
    ap.add_argument("--ell", type=int)
    ap.add_argument("--p", type=int)
    args = ap.parse_args(argv)

    if args.family:
        params = {k: v for k, v in vars(args).items()
                  if k not in ("n", "family") and v is not None}
        runs = [(args.family, params)]
    else:
        runs = DEFAULT_RUNS

    ok = True
    for family, params in runs:
        try:
            rep = exhaustive_decode_check(family, n=args.n, **params)
        except GridTooLarge as exc:
            print(json.dumps({"family": family, **params, "skipped": str(exc)}))
            continue
        ok &= rep.verified
        print(rep.to_json(), flush=True)
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
