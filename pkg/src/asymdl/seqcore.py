"""Sequence transforms and metrics.

Binary strings are plain ``str`` objects over ``'0'``/``'1'``. The run-gap
vector ``phi(x)`` lists the 0-run lengths around the 1s of ``x``:
``x = 0^u1 1 0^u2 1 ... 1 0^u(w+1)``. Appending a 1 and dropping the (then
empty) trailing gap gives the same vector, so ``phi(x + '1')[:-1] == phi(x)``
and one function covers both conventions.
"""
from __future__ import annotations

from typing import Sequence

BitString = str
PhiVector = tuple


def check_bits(x: str) -> str:
    if not set(x) <= {"0", "1"}:
        raise ValueError(f"not a binary string: {x!r}")
    return x


def weight(x: str) -> int:
    return x.count("1")


def n_runs(x: str) -> int:
    if not x:
        return 0
    return 1 + sum(1 for a, b in zip(x, x[1:]) if a != b)


def phi(x: str) -> tuple[int, ...]:
    """Run-gap vector of ``x``; length ``wt(x) + 1``."""
    return tuple(len(run) for run in x.split("1"))


def phi_inverse(u: Sequence[int]) -> str:
    if any(v < 0 for v in u):
        raise ValueError(f"negative gap in {tuple(u)}")
    return "1".join("0" * v for v in u)


def phi_closed(x: str) -> tuple[int, ...]:
    """``phi(x1)`` in the length-``wt(x1)`` form; identical to ``phi(x)``."""
    return phi(x)


def psi(x: str) -> str:
    out = []
    acc = 0
    for c in x:
        acc ^= c == "1"
        out.append("1" if acc else "0")
    return "".join(out)


def psi_inverse(y: str) -> str:
    prev = "0"
    out = []
    for c in y:
        out.append("0" if c == prev else "1")
        prev = c
    return "".join(out)


def vt_syndrome(x: str) -> int:
    return sum(i for i, c in enumerate(x, 1) if c == "1")


def _symbols(x) -> list[int]:
    if isinstance(x, str):
        return [int(c) for c in x]
    return [int(c) for c in x]


def lee_weight(x, q: int) -> int:
    total = 0
    for v in _symbols(x):
        if not 0 <= v < q:
            raise ValueError(f"symbol {v} outside alphabet of size {q}")
        total += min(v, q - v)
    return total


def lee_distance(x, y, q: int) -> int:
    xs, ys = _symbols(x), _symbols(y)
    if len(xs) != len(ys):
        raise ValueError("Lee distance needs equal lengths")
    return lee_weight([(a - b) % q for a, b in zip(xs, ys)], q)


def format_phi(u: Sequence[int]) -> str:
    return ",".join(str(v) for v in u)


def parse_phi(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(v) for v in text.split(","))
