"""Codes for one deletion plus bounded right and left shifts of 0.

Membership: ``VT(x) = a (mod n+s+1)``, ``wt(x) = b (mod 2)`` and ``psi(x)``
lies in a binary BCH code of designed distance ``2s+1`` shortened to length
``n``. A transposition in ``x`` is a single substitution in ``psi(x)``, so
after reinserting the deleted bit near its true place the remaining damage
is at most ``s`` substitutions.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .bch import BchSpec
from .errors import NoSolution
from .seqcore import phi, phi_inverse, psi, psi_inverse, vt_syndrome, weight


@lru_cache(maxsize=None)
def _bch(n: int, s: int) -> BchSpec:
    return BchSpec(2, n, 2 * s + 1)


@dataclass(frozen=True)
class ShiftCodeSpec:
    n: int
    s_plus: int
    s_minus: int = 0
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if not 0 <= self.a < self.modulus or self.b not in (0, 1):
            raise ValueError(f"residues out of range: a={self.a}, b={self.b}")

    @property
    def s(self) -> int:
        return self.s_plus + self.s_minus

    @property
    def modulus(self) -> int:
        return self.n + self.s + 1

    @property
    def bch(self) -> BchSpec:
        return _bch(self.n, self.s)

    def contains(self, x: str) -> bool:
        return (
            len(x) == self.n
            and vt_syndrome(x) % self.modulus == self.a
            and weight(x) % 2 == self.b
            and self.bch.is_codeword([int(c) for c in psi(x)])
        )

    def codebook(self) -> list[str]:
        return sorted(x for x in inner_words(self.n, self.s) if self.contains(x))

    def decode(self, y: str) -> str:
        return decode(y, self)


def membership(x: str, spec: ShiftCodeSpec) -> bool:
    return spec.contains(x)


@lru_cache(maxsize=None)
def inner_words(n: int, s: int) -> tuple[str, ...]:
    """All ``x`` with ``psi(x)`` in the BCH code."""
    code = _bch(n, s)
    out = []
    for msg in product((0, 1), repeat=code.k):
        c = code.encode_systematic(msg)
        out.append(psi_inverse("".join(map(str, c))))
    return tuple(sorted(out))


def class_counts(n: int, s: int) -> Counter:
    M = n + s + 1
    return Counter((vt_syndrome(x) % M, weight(x) % 2) for x in inner_words(n, s))


def best_pair(n: int, s_plus: int, s_minus: int = 0) -> ShiftCodeSpec:
    """Largest ``(a, b)`` class, ties broken toward the smallest pair."""
    counts = class_counts(n, s_plus + s_minus)
    (a, b), _ = max(counts.items(), key=lambda kv: (kv[1], -kv[0][0], -kv[0][1]))
    return ShiftCodeSpec(n, s_plus, s_minus, a, b)


def redundancy_report(n: int, s_plus: int, s_minus: int = 0) -> dict:
    spec = best_pair(n, s_plus, s_minus)
    size = class_counts(n, spec.s)[(spec.a, spec.b)]
    M = spec.modulus
    r = spec.bch.redundancy
    return {
        "n": n,
        "s": spec.s,
        "a": spec.a,
        "b": spec.b,
        "size": size,
        "redundancy": n - math.log2(size),
        "target": (1 + spec.s) * math.log2(M) + 1,
        "pigeonhole": math.log2(M) + 1 + r,
        "bch_parity": r,
        "shortening_slack": r - spec.s * math.log2(M),
    }


def vt_decode_deletion(y: str, a: int, modulus: int, n: int | None = None) -> str:
    """Classic VT reinsertion for one deletion (modulus at least ``n+1``)."""
    n = len(y) + 1 if n is None else n
    if len(y) == n:
        if vt_syndrome(y) % modulus != a % modulus:
            raise NoSolution("syndrome mismatch without a deletion")
        return y
    if len(y) != n - 1 or modulus < n + 1:
        raise NoSolution("outside the single-deletion model")
    w = weight(y)
    delta = (a - vt_syndrome(y)) % modulus
    if delta <= w:
        return _insert_zero(y, delta)
    if delta - w - 1 > len(y) - w:
        raise NoSolution("no consistent insertion")
    return _insert_one(y, delta - w - 1)


def _insert_zero(y: str, ones_right: int) -> str:
    u = list(phi(y))
    u[len(u) - 1 - ones_right] += 1
    return phi_inverse(u)


def _insert_one(y: str, zeros_left: int) -> str:
    seen = 0
    for i, c in enumerate(y):
        if seen == zeros_left:
            return y[:i] + "1" + y[i:]
        seen += c == "0"
    return y + "1"


def lift_delta(y: str, spec: ShiftCodeSpec) -> int:
    """``VT(x) - VT(y)`` recovered from its residue; lies in ``[-s_minus, n+s_plus]``."""
    d = (spec.a - vt_syndrome(y)) % spec.modulus
    return d - spec.modulus if d > spec.n + spec.s_plus else d


def reinsert(y: str, spec: ShiftCodeSpec) -> str:
    """Put the deleted bit back within ``s`` transpositions of its place."""
    w = weight(y)
    delta = lift_delta(y, spec)
    skew = spec.s_plus - spec.s_minus
    if (spec.b - w) % 2 == 0:
        m = min(max(delta - skew, 0), w)
        return _insert_zero(y, m)
    zeros = len(y) - w
    m = min(max(delta - w - 1 - skew, 0), zeros)
    return _insert_one(y, m)


def decode(y: str, spec: ShiftCodeSpec) -> str:
    if len(y) == spec.n - 1:
        xh = reinsert(y, spec)
    elif len(y) == spec.n:
        xh = y
    else:
        raise NoSolution(f"length {len(y)} is outside the channel model")
    fixed = spec.bch.decode([int(c) for c in psi(xh)])
    x = psi_inverse("".join(map(str, fixed)))
    if not spec.contains(x):
        raise NoSolution("corrected word is not in the code")
    return x
