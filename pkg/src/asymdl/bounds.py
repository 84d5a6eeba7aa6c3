"""Size and redundancy bounds plus the counting identities behind them."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .block_codes import size_lower_bound


def upper_bound_size(n: int, t: int, s: int) -> Fraction:
    """Sphere-packing estimate ``2^n s! t! 2^(s+2t) / n^(s+t)`` (asymptotic)."""
    return Fraction(2 ** n * math.factorial(s) * math.factorial(t) * 2 ** (s + 2 * t), n ** (s + t))


def lower_bound_redundancy(n: int, t: int, s: int) -> float:
    return (t + s) * math.log2(n) if t + s else 0.0


def phi_cardinality(n: int) -> int:
    """Number of run-gap vectors over all weights; equals ``2^n``."""
    return sum(math.comb(n, w - 1) for w in range(1, n + 2))


def typical_block_fraction(i: int) -> Fraction:
    return Fraction(1, 2 ** (i + 2))


def _all_words(n: int) -> np.ndarray:
    idx = np.arange(2 ** n, dtype=np.uint32)
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint32)
    return ((idx[:, None] >> shifts) & 1).astype(bool)


def block_count_total(n: int, i: int) -> int:
    """Total number of ``1``s preceded by a maximal 0-run of length ``i``,
    summed over all ``2^n`` strings."""
    if n > 24:
        raise ValueError("exhaustive count limited to n <= 24")
    bits = _all_words(n)
    total = 0
    for j in range(i, n):
        hit = bits[:, j].copy()
        for k in range(j - i, j):
            hit &= ~bits[:, k]
        if j - i - 1 >= 0:
            hit &= bits[:, j - i - 1]
        total += int(hit.sum())
    return total


def empirical_block_fraction(n: int, i: int) -> Fraction:
    """Average number of ``0^i 1`` blocks per string, divided by ``n``."""
    return Fraction(block_count_total(n, i), n * 2 ** n)


def expected_block_fraction(n: int, i: int) -> Fraction:
    """Closed form of ``empirical_block_fraction`` for ``n > i``."""
    return Fraction(n - i + 1, n) * typical_block_fraction(i)


def block_code_size_lower_bound(n: int, t_b: int, ell: int, s: int, p: int | None = None) -> Fraction:
    return size_lower_bound(n, t_b, ell, s, p)


@dataclass
class BoundReport:
    n: int
    t: int
    s: int
    upper_size: float
    lower_redundancy_bits: float
    typicality: dict = field(default_factory=dict)
    t_b: int | None = None
    ell: int | None = None
    p: int | None = None
    block_size_lower: float | None = None
    asymptotic: bool = True
    note: str = "upper_size is an asymptotic estimate and is informational only"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def report(n: int, t: int, s: int, t_b: int | None = None, ell: int | None = None,
           p: int | None = None, max_i: int = 3) -> BoundReport:
    rep = BoundReport(
        n=n, t=t, s=s,
        upper_size=float(upper_bound_size(n, t, s)),
        lower_redundancy_bits=lower_bound_redundancy(n, t, s),
        typicality={i: float(typical_block_fraction(i)) for i in range(max_i + 1)},
    )
    if t_b is not None and ell is not None:
        bound = size_lower_bound(n, t_b, ell, s, p)
        rep.t_b, rep.ell = t_b, ell
        from .bch import block_prime
        rep.p = p or block_prime(t_b, ell, s)
        rep.block_size_lower = float(bound)
    return rep
