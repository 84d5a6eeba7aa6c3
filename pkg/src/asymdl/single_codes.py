"""Codes correcting one 0-deletion or one adjacent transposition.

The code is ``{x : sum_i i^2 phi(x)_i = a (mod p)}`` with a prime ``p > 4n``.
A 0-deletion from gap ``i`` lowers the syndrome by ``i^2``. A transposition
that moves a 0 from gap ``i+1`` into gap ``i`` (a left shift, ``10 -> 01``)
lowers it by ``2i+1``; the opposite move raises it by ``2i+1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import NoSolution
from .galois import is_prime, smallest_prime_above
from .seqcore import phi, phi_inverse


def syndrome_value(x: str, p: int) -> int:
    return sum(i * i * u for i, u in enumerate(phi(x), 1)) % p


@dataclass(frozen=True)
class SingleCodeSpec:
    n: int
    p: int
    a: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p <= 4 * self.n:
            raise ValueError(f"need a prime p > 4n, got p={self.p}, n={self.n}")
        if not 0 <= self.a < self.p:
            raise ValueError("residue out of range")
        # the two shift-residue windows must not overlap
        assert 2 * self.n - 1 < self.p - 2 * self.n + 1

    @classmethod
    def default(cls, n: int, a: int = 0) -> "SingleCodeSpec":
        return cls(n, smallest_prime_above(4 * n), a)

    def syndrome(self, x: str) -> int:
        return syndrome_value(x, self.p)

    def contains(self, x: str) -> bool:
        return len(x) == self.n and self.syndrome(x) == self.a

    def codebook(self) -> list[str]:
        return [x for x in all_strings(self.n) if self.syndrome(x) == self.a]

    def decode(self, y: str) -> str:
        return decode(y, self)


def membership(x: str, spec: SingleCodeSpec) -> bool:
    return spec.contains(x)


@lru_cache(maxsize=64)
def all_strings(n: int) -> tuple[str, ...]:
    return tuple("".join(b) for b in product("01", repeat=n))


@lru_cache(maxsize=64)
def residue_counts(n: int, p: int) -> tuple[int, ...]:
    counts = [0] * p
    for x in all_strings(n):
        counts[syndrome_value(x, p)] += 1
    return tuple(counts)


def best_residue(n: int) -> SingleCodeSpec:
    """Residue with the largest code, ties broken toward the smallest."""
    p = smallest_prime_above(4 * n)
    counts = residue_counts(n, p)
    a = max(range(p), key=lambda r: (counts[r], -r))
    return SingleCodeSpec(n, p, a)


def decode(y: str, spec: SingleCodeSpec) -> str:
    n, p = spec.n, spec.p
    u = list(phi(y))
    w = len(u) - 1
    delta = (spec.a - syndrome_value(y, p)) % p
    if len(y) == n - 1:
        hits = [i for i in range(1, w + 2) if i * i % p == delta]
        if len(hits) != 1:
            raise NoSolution(f"no unique gap for syndrome gap {delta}")
        u[hits[0] - 1] += 1
        return phi_inverse(u)
    if len(y) != n:
        raise NoSolution(f"length {len(y)} is outside the channel model")
    if delta == 0:
        return y
    if 1 <= delta <= 2 * n - 1 and delta % 2 == 1:
        # undo a left shift at gap i: one 0 goes back from gap i to i+1
        i = (delta - 1) // 2
        src, dst = i, i + 1
    elif p - 2 * n + 1 <= delta <= p - 1 and (p - delta) % 2 == 1:
        i = (p - delta - 1) // 2
        src, dst = i + 1, i
    else:
        raise NoSolution(f"syndrome gap {delta} matches no single error")
    if not (1 <= i <= w) or u[src - 1] == 0:
        raise NoSolution(f"gap index {i} outside the word")
    u[src - 1] -= 1
    u[dst - 1] += 1
    return phi_inverse(u)
