"""Command-line entry point.

Exit status: 0 success, 1 decode failure, 2 usage error, 3 verification
failure. Options may also come from a JSON file given with ``--config``;
flags given on the command line win.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import block_codes, bounds, lee_codes, list_codes, oracle, shift_codes, single_codes
from .channel import apply_pattern, sample_pattern
from .errors import DecodeError
from .galois import smallest_prime_above
from .seqcore import check_bits

FAMILIES = ("single", "shift", "lee", "list", "block", "systematic")

DEFAULTS = {
    "family": None, "n": None, "t": 1, "s": 1, "s_plus": 1, "s_minus": 0,
    "t_b": 1, "ell": 1, "k": None, "a": None, "b": None, "p": None,
    "seed": None, "mode": "asym", "input": None, "out": None, "preset": None,
}


@dataclass
class RunConfig:
    family: str | None = None
    n: int | None = None
    t: int = 1
    s: int = 1
    s_plus: int = 1
    s_minus: int = 0
    t_b: int = 1
    ell: int = 1
    k: int | None = None
    a: list = field(default_factory=list)
    b: int | None = None
    p: int | None = None
    seed: int | None = None
    mode: str = "asym"
    input: str | None = None
    out: str | None = None
    preset: str | None = None


class UsageError(Exception):
    pass


def _residues(text) -> list:
    if text is None:
        return []
    if isinstance(text, list):
        return [int(v) for v in text]
    return [int(v) for v in str(text).split(",") if v.strip()]


def build_config(args: argparse.Namespace) -> RunConfig:
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config) as fh:
            data = json.load(fh)
        unknown = set(data) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        merged.update(data)
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    merged["a"] = _residues(merged["a"])
    return RunConfig(**merged)


def _read_word(cfg: RunConfig) -> str:
    text = cfg.input if cfg.input is not None else sys.stdin.readline()
    try:
        return check_bits(text.strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _need(cfg: RunConfig, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _spec(cfg: RunConfig):
    fam = cfg.family
    if fam == "single":
        _need(cfg, "n")
        if not cfg.a:
            return single_codes.best_residue(cfg.n)
        p = cfg.p or smallest_prime_above(4 * cfg.n)
        return single_codes.SingleCodeSpec(cfg.n, p, cfg.a[0])
    if fam == "shift":
        _need(cfg, "n")
        if not cfg.a:
            return shift_codes.best_pair(cfg.n, cfg.s_plus, cfg.s_minus)
        return shift_codes.ShiftCodeSpec(cfg.n, cfg.s_plus, cfg.s_minus, cfg.a[0], cfg.b or 0)
    if fam == "lee":
        _need(cfg, "n")
        r = cfg.t + 2 * cfg.s
        if not cfg.a:
            return lee_codes.best_residue(cfg.n, r, cfg.p)[0]
        return lee_codes.LeeCodeSpec(cfg.n, r, cfg.p or lee_codes.default_prime(cfg.n, r), tuple(cfg.a))
    if fam == "list":
        _need(cfg, "n")
        p = cfg.p or smallest_prime_above(cfg.n)
        kappa = max(cfg.t, cfg.s_plus + cfg.s_minus + 1)
        a = tuple(cfg.a) if cfg.a else (0,) * kappa
        return list_codes.ListCodeSpec(cfg.n, cfg.t, cfg.s_plus, cfg.s_minus, p, a)
    if fam == "block":
        _need(cfg, "n")
        return block_codes.BlockCodeSpec(cfg.n, cfg.t_b, cfg.ell, cfg.s)
    if fam == "systematic":
        _need(cfg, "k")
        return block_codes.layout_for(cfg.k, cfg.t_b, cfg.ell, cfg.s)
    raise UsageError(f"--family must be one of {', '.join(FAMILIES)}")


def cmd_gen(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    if cfg.family == "systematic":
        raise UsageError("gen does not enumerate the systematic code; use encode")
    words = spec.codebook()
    text = "".join(w + "\n" for w in words)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        print(json.dumps({"spec": repr(spec), "size": len(words), "out": cfg.out}))
    else:
        sys.stdout.write(text)
    return 0


def cmd_encode(cfg: RunConfig) -> int:
    if cfg.k is None and cfg.input is not None:
        cfg.k = len(cfg.input.strip())
    cfg.family = "systematic"
    layout = _spec(cfg)
    c = _read_word(cfg)
    print(block_codes.encode_systematic(c, layout))
    return 0


def cmd_corrupt(cfg: RunConfig) -> int:
    _need(cfg, "seed")
    x = _read_word(cfg)
    budgets = {
        "asym": (cfg.t, cfg.s_plus, cfg.s_minus),
        "total": (cfg.t, cfg.s),
        "block": (cfg.t_b, cfg.ell, cfg.s),
        "single": (cfg.s_plus, cfg.s_minus),
    }
    if cfg.mode not in budgets:
        raise UsageError(f"unknown mode {cfg.mode!r}")
    e = sample_pattern(x, budgets[cfg.mode], cfg.seed, cfg.mode)
    print(apply_pattern(x, e))
    print(e.to_json())
    return 0


def cmd_decode(cfg: RunConfig) -> int:
    if cfg.preset is not None:
        if cfg.preset != "paper-example" or cfg.family not in (None, "block"):
            raise UsageError("the only preset is 'paper-example' for --family block")
        trace = block_codes.worked_example()
        print(json.dumps(trace))
        print(trace["x"])
        return 0
    if cfg.family == "systematic" and cfg.k is None:
        raise UsageError("--k is required")
    spec = _spec(cfg)
    y = _read_word(cfg)
    try:
        if cfg.family == "single":
            print(single_codes.decode(y, spec))
        elif cfg.family == "shift":
            print(shift_codes.decode(y, spec))
        elif cfg.family == "lee":
            print(lee_codes.decode(y, spec, cfg.t, cfg.s))
        elif cfg.family == "list":
            found = list_codes.decode_list(y, spec)
            if not found:
                raise DecodeError("empty list")
            for w in found:
                print(w)
        elif cfg.family == "block":
            print(block_codes.decode_nonsys(y, spec))
        else:
            print(block_codes.decode_systematic(y, spec))
    except DecodeError as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    _need(cfg, "n")
    fam = cfg.family
    params = {"single": {}, "shift": {"s_plus": cfg.s_plus, "s_minus": cfg.s_minus},
              "lee": {"t": cfg.t, "s": cfg.s},
              "list": {"t": cfg.t, "s_plus": cfg.s_plus, "s_minus": cfg.s_minus, "p": cfg.p},
              "block": {"t_b": cfg.t_b, "ell": cfg.ell, "s": cfg.s}}
    if fam not in params:
        raise UsageError(f"verify supports {', '.join(params)}")
    rep = oracle.exhaustive_decode_check(fam, n=cfg.n, **params[fam])
    print(rep.to_json())
    return 0 if rep.verified else 3


def cmd_bounds(cfg: RunConfig) -> int:
    _need(cfg, "n")
    tb = cfg.t_b if cfg.family == "block" else None
    rep = bounds.report(cfg.n, cfg.t, cfg.s, t_b=tb, ell=cfg.ell if tb else None, p=cfg.p)
    print(rep.to_json())
    return 0


COMMANDS = {"gen": cmd_gen, "encode": cmd_encode, "corrupt": cmd_corrupt,
            "decode": cmd_decode, "verify": cmd_verify, "bounds": cmd_bounds}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with option values")
    common.add_argument("--family", choices=FAMILIES)
    for name in ("n", "t", "s", "s-plus", "s-minus", "t-b", "ell", "k", "b", "p", "seed"):
        common.add_argument(f"--{name}", type=int, default=None)
    common.add_argument("--a", help="residue or comma-separated residue vector")
    common.add_argument("--mode", choices=("asym", "total", "block", "single"))
    common.add_argument("--input", help="bit string (default: first line of stdin)")
    common.add_argument("--out")
    common.add_argument("--preset")

    parser = argparse.ArgumentParser(prog="asymdl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="write a codebook")
    sub.add_parser("encode", parents=[common], help="systematic block-code encoder")
    sub.add_parser("corrupt", parents=[common], help="apply a seeded random error pattern")
    sub.add_parser("decode", parents=[common], help="decode a received word")
    sub.add_parser("verify", parents=[common], help="exhaustive decoder check")
    sub.add_parser("bounds", parents=[common], help="print size and redundancy bounds")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DecodeError as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
