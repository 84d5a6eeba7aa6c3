"""Power-sum codes on the gap vector for t 0-deletions and s transpositions.

A 0-deletion changes one gap by 1 and a transposition changes two adjacent
gaps by +1/-1, so ``phi(y)`` is within Lee (here: L1) distance ``t + 2s`` of
``phi(x)``. The code fixes the first ``r = t + 2s`` power sums
``sum_i i^m phi(x)_i mod p``; two gap vectors of equal weight and equal
power sums differ by an integer vector whose positive and negative parts
share their first ``r`` moments, which over the integers forces an L1 norm
of at least ``2(r + 1)``. The modular version of that fact is checked
empirically, not assumed.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import AmbiguousDecoding, NoSolution
from .galois import is_prime, smallest_prime_above
from .seqcore import lee_distance, phi, phi_inverse
from .single_codes import all_strings


def default_prime(n: int, r: int) -> int:
    return smallest_prime_above(max(n, 2 * (r + 1)))


def power_sums(u: Iterable[int], r: int, p: int) -> tuple[int, ...]:
    u = list(u)
    return tuple(sum(pow(i, m, p) * v for i, v in enumerate(u, 1)) % p for m in range(1, r + 1))


def syndromes(x: str, r: int, p: int) -> tuple[int, ...]:
    return power_sums(phi(x), r, p)


@dataclass(frozen=True)
class LeeCodeSpec:
    n: int
    r: int
    p: int
    a: tuple

    def __post_init__(self):
        if not is_prime(self.p) or self.p <= 2 * (self.r + 1) or self.p <= self.n:
            raise ValueError(f"need a prime p > max(n, 2(r+1)), got {self.p}")
        if len(self.a) != self.r:
            raise ValueError("residue vector must have r entries")

    @classmethod
    def for_word(cls, x: str, r: int, p: int | None = None) -> "LeeCodeSpec":
        p = p or default_prime(len(x), r)
        return cls(len(x), r, p, syndromes(x, r, p))

    def contains(self, x: str) -> bool:
        return len(x) == self.n and syndromes(x, self.r, self.p) == tuple(self.a)

    def codebook(self) -> list[str]:
        return [x for x in all_strings(self.n) if self.contains(x)]


def membership(x: str, spec: LeeCodeSpec) -> bool:
    return spec.contains(x)


def _vectors(L: int, radius: int, total: int):
    """Integer vectors of length ``L``, L1 norm <= radius, entry sum ``total``."""
    # split the norm into a positive part P and negative part N with P - N = total
    for pos_mass in range(max(total, 0), radius + 1):
        neg_mass = pos_mass - total
        if neg_mass < 0 or pos_mass + neg_mass > radius:
            continue
        for pos in _compositions(L, pos_mass):
            for neg in _compositions(L, neg_mass):
                if any(pos[i] and neg[i] for i in range(L)):
                    continue
                yield tuple(pos[i] - neg[i] for i in range(L))


def _compositions(L: int, mass: int):
    """Nonnegative vectors of length ``L`` with the given sum."""
    if mass == 0:
        yield (0,) * L
        return
    # stars and bars
    for bars in combinations(range(mass + L - 1), L - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(mass + L - 1 - prev - 1)
        yield tuple(out)


@lru_cache(maxsize=256)
def correction_table(L: int, radius: int, total: int, r: int, p: int) -> dict:
    """Map power-sum residues of ``e`` to every candidate correction ``e``."""
    table = defaultdict(list)
    for e in _vectors(L, radius, total):
        table[power_sums(e, r, p)].append(e)
    return dict(table)


def decode(y: str, spec: LeeCodeSpec, t: int, s: int) -> str:
    if t + 2 * s > spec.r:
        raise ValueError("error budget exceeds the code's radius")
    deficit = spec.n - len(y)
    if not 0 <= deficit <= t:
        raise NoSolution(f"length {len(y)} is outside the channel model")
    u = phi(y)
    radius = t + 2 * s
    delta = tuple((a - b) % spec.p for a, b in zip(spec.a, power_sums(u, spec.r, spec.p)))
    table = correction_table(len(u), radius, deficit, spec.r, spec.p)
    found = set()
    for e in table.get(delta, ()):
        v = [a + b for a, b in zip(u, e)]
        if min(v) >= 0:
            found.add(phi_inverse(v))
    if not found:
        raise NoSolution("no codeword within the error radius")
    if len(found) > 1:
        raise AmbiguousDecoding(f"{len(found)} codewords explain {y!r}")
    return found.pop()


def min_pairwise_distance(n: int, r: int, p: int | None = None) -> dict:
    """Smallest Lee and L1 distance between ``phi`` of equal-weight codewords.

    Scans every residue class of length-``n`` strings at once.
    """
    p = p or default_prime(n, r)
    groups = defaultdict(list)
    for x in all_strings(n):
        u = phi(x)
        groups[(len(u), power_sums(u, r, p))].append(u)
    best_lee = best_l1 = None
    witness = None
    for members in groups.values():
        for u, v in combinations(members, 2):
            d = lee_distance(u, v, p)
            l1 = sum(abs(a - b) for a, b in zip(u, v))
            if best_lee is None or d < best_lee:
                best_lee, witness = d, (phi_inverse(u), phi_inverse(v))
            if best_l1 is None or l1 < best_l1:
                best_l1 = l1
    return {"n": n, "r": r, "p": p, "min_lee": best_lee, "min_l1": best_l1,
            "required": 2 * (r + 1), "witness": witness}


def best_residue(n: int, r: int, p: int | None = None) -> tuple[LeeCodeSpec, int]:
    p = p or default_prime(n, r)
    counts = defaultdict(int)
    for x in all_strings(n):
        counts[syndromes(x, r, p)] += 1
    a, size = max(counts.items(), key=lambda kv: (kv[1], tuple(-v for v in kv[0])))
    return LeeCodeSpec(n, r, p, a), size
