"""Channel events: 0-deletions, adjacent transpositions, block deletions.

A right shift of 0 turns ``01`` into ``10`` and a left shift turns ``10``
into ``01``. In the run-gap domain a right shift at gap ``j`` moves one 0 from
gap ``j`` to gap ``j+1`` and a left shift moves one from ``j+1`` to ``j``.

Deletions and shifts are both unit moves on the gap vector with a
nonnegativity constraint, and any interleaving of them can be reordered to
"all shifts first, then all deletions" without leaving the nonnegative
orthant. The balls below use that normal form; the test suite checks them
against a string-level search over every interleaving.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InapplicablePattern
from .seqcore import phi, phi_inverse

RIGHT = "right_shift_of_0"
LEFT = "left_shift_of_0"


def shift_kind(x: str, pos: int) -> str:
    """Kind of the transposition of ``x[pos], x[pos+1]`` (1-based left index)."""
    if not 1 <= pos < len(x):
        raise InapplicablePattern(f"shift position {pos} out of range for length {len(x)}")
    pair = x[pos - 1:pos + 1]
    if pair == "01":
        return RIGHT
    if pair == "10":
        return LEFT
    raise InapplicablePattern(f"bits at {pos},{pos + 1} are equal")


def transpose(x: str, pos: int) -> str:
    shift_kind(x, pos)
    return x[:pos - 1] + x[pos] + x[pos - 1] + x[pos + 1:]


def delete_zero(x: str, gap: int) -> str:
    """Delete one 0 from gap ``gap`` (1-based) of ``phi(x)``."""
    u = list(phi(x))
    if not 1 <= gap <= len(u) or u[gap - 1] == 0:
        raise InapplicablePattern(f"gap {gap} has no 0 to delete in {x!r}")
    u[gap - 1] -= 1
    return phi_inverse(u)


@dataclass(frozen=True)
class ErrorPattern:
    """Shifts are replayed first, in order; then 0-deletions by gap index.

    ``deleted_position`` (1-based, applied after the shifts) removes an
    arbitrary bit and is only used by the single-deletion shift channel.
    """

    deletions: tuple[int, ...] = ()
    shifts: tuple[tuple[str, int], ...] = ()
    deleted_position: int | None = None

    def is_empty(self) -> bool:
        return not self.deletions and not self.shifts and self.deleted_position is None

    def counts(self) -> dict:
        return {
            "deletions": len(self.deletions) + (self.deleted_position is not None),
            "right": sum(k == RIGHT for k, _ in self.shifts),
            "left": sum(k == LEFT for k, _ in self.shifts),
        }

    def to_json(self) -> str:
        obj = {
            "deletions": list(self.deletions),
            "shifts": [{"kind": k, "pos": p} for k, p in self.shifts],
        }
        if self.deleted_position is not None:
            obj["deleted_position"] = self.deleted_position
        return json.dumps(obj, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ErrorPattern":
        obj = json.loads(text)
        return cls(
            deletions=tuple(obj.get("deletions", ())),
            shifts=tuple((s["kind"], int(s["pos"])) for s in obj.get("shifts", ())),
            deleted_position=obj.get("deleted_position"),
        )


def apply_pattern(x: str, e: ErrorPattern) -> str:
    y = x
    for kind, pos in e.shifts:
        if shift_kind(y, pos) != kind:
            raise InapplicablePattern(f"shift at {pos} is not a {kind}")
        y = transpose(y, pos)
    if e.deleted_position is not None:
        if not 1 <= e.deleted_position <= len(y):
            raise InapplicablePattern("deleted position out of range")
        y = y[:e.deleted_position - 1] + y[e.deleted_position:]
    if e.deletions:
        u = list(phi(y))
        for g in e.deletions:
            if not 1 <= g <= len(u) or u[g - 1] == 0:
                raise InapplicablePattern(f"gap {g} exhausted")
            u[g - 1] -= 1
        y = phi_inverse(u)
    return y


# -- gap-domain enumeration

def _shift_reach(u: tuple, max_right: int, max_left: int, max_total: int) -> set:
    """Gap vectors reachable with bounded right/left/total shift counts."""
    start = (u, 0, 0)
    seen = {start}
    frontier = [start]
    L = len(u)
    while frontier:
        nxt = []
        for v, r, l in frontier:
            if r + l >= max_total:
                continue
            for j in range(L - 1):
                if r < max_right and v[j] > 0:
                    w = list(v)
                    w[j] -= 1
                    w[j + 1] += 1
                    st = (tuple(w), r + 1, l)
                    if st not in seen:
                        seen.add(st)
                        nxt.append(st)
                if l < max_left and v[j + 1] > 0:
                    w = list(v)
                    w[j + 1] -= 1
                    w[j] += 1
                    st = (tuple(w), r, l + 1)
                    if st not in seen:
                        seen.add(st)
                        nxt.append(st)
        frontier = nxt
    return {v for v, _, _ in seen}


def _deletion_reach(u: tuple, t: int) -> set:
    out = set()

    def rec(i: int, left: int, acc: list):
        if i == len(u):
            out.add(tuple(acc))
            return
        for d in range(min(left, u[i]) + 1):
            acc.append(u[i] - d)
            rec(i + 1, left - d, acc)
            acc.pop()

    rec(0, t, [])
    return out


def _block_reach(u: tuple, t_b: int, ell: int) -> set:
    """Remove at most ``t_b`` blocks of at most ``ell`` zeros each."""
    out = set()

    def rec(i: int, blocks: int, acc: list):
        if i == len(u):
            out.add(tuple(acc))
            return
        for d in range(min(u[i], blocks * ell) + 1):
            need = -(-d // ell)
            if need > blocks:
                break
            acc.append(u[i] - d)
            rec(i + 1, blocks - need, acc)
            acc.pop()

    rec(0, t_b, [])
    return out


@lru_cache(maxsize=200_000)
def _ball(x: str, t: int, max_right: int, max_left: int, max_total: int, block: int = 0) -> frozenset:
    shifted = _shift_reach(phi(x), max_right, max_left, max_total)
    out = set()
    for v in shifted:
        reach = _block_reach(v, t, block) if block else _deletion_reach(v, t)
        for w in reach:
            out.add(phi_inverse(w))
    return frozenset(out)


def error_ball(x: str, t: int, s: int) -> frozenset:
    """At most ``t`` 0-deletions and at most ``s`` adjacent transpositions."""
    return _ball(x, t, s, s, s)


def asym_ball(x: str, t: int, s_plus: int, s_minus: int) -> frozenset:
    """At most ``t`` 0-deletions, ``s_plus`` right shifts and ``s_minus`` left shifts."""
    return _ball(x, t, s_plus, s_minus, s_plus + s_minus)


def block_deletion_ball(x: str, t_b: int, ell: int, s: int) -> frozenset:
    if ell <= 0 or t_b == 0:
        return _ball(x, 0, s, s, s)
    return _ball(x, t_b, s, s, s, ell)


@lru_cache(maxsize=200_000)
def single_deletion_shift_ball(x: str, s_plus: int, s_minus: int) -> frozenset:
    """At most one deletion of any bit plus bounded shifts, any interleaving."""
    start = (x, 0, 0, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for y, d, r, l in frontier:
            moves = []
            if d == 0:
                moves += [(y[:i] + y[i + 1:], 1, r, l) for i in range(len(y))]
            for i in range(len(y) - 1):
                pair = y[i:i + 2]
                if pair == "01" and r < s_plus:
                    moves.append((y[:i] + "10" + y[i + 2:], d, r + 1, l))
                elif pair == "10" and l < s_minus:
                    moves.append((y[:i] + "01" + y[i + 2:], d, r, l + 1))
            for st in moves:
                if st not in seen:
                    seen.add(st)
                    nxt.append(st)
        frontier = nxt
    return frozenset(y for y, _, _, _ in seen)


# -- magnitude balls

@dataclass(frozen=True)
class MagnitudeBallSpec:
    n: int
    t: int
    k_plus: int
    k_minus: int

    def __post_init__(self):
        if self.t > self.n or self.k_plus < 0 or self.k_minus < 0:
            raise ValueError(f"invalid magnitude ball {self}")


def phi_displacement(x: str, y: str) -> tuple[int, ...]:
    ux, uy = phi(x), phi(y)
    if len(ux) != len(uy):
        raise ValueError("strings have different weights")
    return tuple(b - a for a, b in zip(ux, uy))


def in_magnitude_ball(v: Sequence[int], spec: MagnitudeBallSpec) -> bool:
    if len(v) != spec.n:
        raise ValueError("vector length does not match the ball")
    return (
        sum(1 for a in v if a) <= spec.t
        and all(-spec.k_minus <= a <= spec.k_plus for a in v)
        and sum(v) <= 0
    )


# -- sampling

def _random_shifts(rng: random.Random, x: str, n_right: int, n_left: int, n_any: int = 0):
    """Apply up to the given numbers of shifts at random; returns (y, shifts)."""
    y = x
    shifts = []
    todo = [RIGHT] * n_right + [LEFT] * n_left + [None] * n_any
    rng.shuffle(todo)
    for want in todo:
        options = []
        for i in range(1, len(y)):
            pair = y[i - 1:i + 1]
            kind = RIGHT if pair == "01" else LEFT if pair == "10" else None
            if kind and (want is None or kind == want):
                options.append((kind, i))
        if not options:
            continue
        kind, pos = rng.choice(options)
        shifts.append((kind, pos))
        y = transpose(y, pos)
    return y, tuple(shifts)


def sample_pattern(x: str, budget: Iterable[int], seed: int, mode: str = "asym") -> ErrorPattern:
    """Draw a random in-budget pattern.

    ``mode`` selects the budget meaning: ``"asym"`` is ``(t, s_plus,
    s_minus)``, ``"total"`` is ``(t, s)``, ``"block"`` is ``(t_b, ell, s)``
    and ``"single"`` is ``(s_plus, s_minus)`` with one deletion of any bit.
    Counts are drawn uniformly up to the budget, so smaller patterns occur.
    """
    rng = random.Random(seed)
    b = tuple(budget)
    if mode == "asym":
        t, sp, sm = b
        y, shifts = _random_shifts(rng, x, rng.randint(0, sp), rng.randint(0, sm))
        return ErrorPattern(_random_deletions(rng, y, rng.randint(0, t)), shifts)
    if mode == "total":
        t, s = b
        y, shifts = _random_shifts(rng, x, 0, 0, rng.randint(0, s))
        return ErrorPattern(_random_deletions(rng, y, rng.randint(0, t)), shifts)
    if mode == "block":
        t_b, ell, s = b
        y, shifts = _random_shifts(rng, x, 0, 0, rng.randint(0, s))
        u = list(phi(y))
        dels = []
        for _ in range(rng.randint(0, t_b)):
            live = [i for i, g in enumerate(u) if g > 0]
            if not live or ell <= 0:
                break
            i = rng.choice(live)
            size = rng.randint(1, min(ell, u[i]))
            u[i] -= size
            dels += [i + 1] * size
        return ErrorPattern(tuple(sorted(dels)), shifts)
    if mode == "single":
        sp, sm = b
        y, shifts = _random_shifts(rng, x, rng.randint(0, sp), rng.randint(0, sm))
        pos = rng.randint(1, len(y)) if y and rng.random() < 0.8 else None
        return ErrorPattern((), shifts, pos)
    raise ValueError(f"unknown sampling mode {mode!r}")


def _random_deletions(rng: random.Random, y: str, count: int) -> tuple[int, ...]:
    u = list(phi(y))
    dels = []
    for _ in range(count):
        live = [i for i, g in enumerate(u) if g > 0]
        if not live:
            break
        i = rng.choice(live)
        u[i] -= 1
        dels.append(i + 1)
    return tuple(sorted(dels))
