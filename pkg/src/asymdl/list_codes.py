"""List-decodable power-sum codes for t 0-deletions and mixed shifts of 0.

Sign convention. With ``u = phi(x)`` and ``v = phi(y)``, the syndrome gap
``a''_m = sum_i i^m (u_i - v_i)`` splits as::

    a''_m = sum_D d^m + sum_{i<m} C(m, i) (sum_J j^i - sum_K k^i)

where ``D`` holds the gaps that lost a 0, ``J`` the lower gap index of each
left shift (``10 -> 01``, a 0 moves from gap j+1 to gap j) and ``K`` the
lower gap index of each right shift (``01 -> 10``). ``|J| <= s_minus`` and
``|K| <= s_plus``.

Writing ``P_i = sum_J j^i - sum_K k^i`` and ``e_m = a''_m - sum_D d^m``, the
shift part is recovered from ``P_1..P_s`` through the mixed Newton
recursion and a rational split ``sigma_J / sigma_K``; the deletion part is
recovered from plain power sums through Newton's identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb
from typing import Sequence

from .channel import asym_ball
from .errors import NoSolution
from .galois import Polynomial, field, find_roots_with_multiplicity, is_prime, pade_split, smallest_prime_above
from .seqcore import phi, phi_inverse
from .single_codes import all_strings

MAX_LOOP = 10 ** 7


@dataclass(frozen=True)
class ListCodeSpec:
    n: int
    t: int
    s_plus: int
    s_minus: int
    p: int
    a: tuple

    def __post_init__(self):
        if not is_prime(self.p) or self.p <= self.n:
            raise ValueError(f"need a prime p > n, got {self.p}")
        if self.p <= self.kappa:
            raise ValueError("p must exceed the number of syndromes")
        if len(self.a) != self.kappa:
            raise ValueError(f"residue vector must have {self.kappa} entries")
        if self.p ** min(self.t, self.s + 1) > MAX_LOOP:
            raise ValueError("parameters too large for exhaustive solving")

    @property
    def s(self) -> int:
        return self.s_plus + self.s_minus

    @property
    def kappa(self) -> int:
        return max(self.t, self.s + 1)

    @classmethod
    def for_word(cls, x: str, t: int, s_plus: int, s_minus: int, p: int | None = None) -> "ListCodeSpec":
        p = p or smallest_prime_above(len(x))
        kappa = max(t, s_plus + s_minus + 1)
        return cls(len(x), t, s_plus, s_minus, p, syndrome_vector(x, kappa, p))

    def syndromes(self, x: str) -> tuple[int, ...]:
        return syndrome_vector(x, self.kappa, self.p)

    def contains(self, x: str) -> bool:
        return len(x) == self.n and self.syndromes(x) == tuple(self.a)

    def codebook(self) -> list[str]:
        return [x for x in all_strings(self.n) if self.contains(x)]


def syndrome_vector(x: str, kappa: int, p: int) -> tuple[int, ...]:
    u = phi(x)
    return tuple(sum(pow(i, m, p) * v for i, v in enumerate(u, 1)) % p for m in range(1, kappa + 1))


def syndromes(x: str, spec: ListCodeSpec) -> tuple[int, ...]:
    return spec.syndromes(x)


# -- algebraic solvers

def _elementary_from_power_sums(ps: Sequence[int], p: int) -> list[int]:
    """Newton's identities: ``k e_k = sum_{i=1}^k (-1)^(i-1) e_(k-i) p_i``."""
    e = [1]
    for k in range(1, len(ps) + 1):
        acc = 0
        for i in range(1, k + 1):
            term = e[k - i] * ps[i - 1]
            acc += term if i % 2 else -term
        e.append(acc * pow(k, p - 2, p) % p)
    return e


@lru_cache(maxsize=500_000)
def _deletion_solve(a_star: tuple, t_actual: int, p: int, hi: int) -> tuple | None:
    if t_actual == 0:
        return ()
    if t_actual == 1:
        d = a_star[0] % p
        return (d,) if 1 <= d <= hi else None
    e = _elementary_from_power_sums(a_star[:t_actual], p)
    # prod (x - d) = sum_k (-1)^k e_k x^(t-k)
    coeffs = [(e[t_actual - i] if (t_actual - i) % 2 == 0 else -e[t_actual - i]) % p
              for i in range(t_actual + 1)]
    F = field(p)
    roots = find_roots_with_multiplicity(Polynomial(F, coeffs), range(1, hi + 1))
    return tuple(roots) if len(roots) == t_actual else None


def solve_deletion_power_sums(a_star: Sequence[int], t_actual: int, p: int, hi: int | None = None) -> tuple[int, ...]:
    """Multiset ``d_1 <= ... <= d_t`` in ``[1, hi]`` with the given power sums."""
    if len(a_star) < t_actual:
        raise ValueError("not enough power sums")
    hi = p - 1 if hi is None else hi
    out = _deletion_solve(tuple(int(v) % p for v in a_star[:t_actual]), t_actual, p, hi)
    if out is None:
        raise NoSolution("power sums have no root multiset in range")
    return out


def transform_e(e: Sequence[int], p: int) -> tuple[int, ...]:
    """``e'_1 = e_1``, ``m e'_m = e_m - sum_{i<m} C(m, i-1) e'_i``."""
    out: list[int] = []
    for m in range(1, len(e) + 1):
        acc = e[m - 1] - sum(comb(m, i - 1) * out[i - 1] for i in range(1, m))
        out.append(acc * pow(m, p - 2, p) % p)
    return tuple(out)


def forward_e(P: Sequence[int], p: int) -> tuple[int, ...]:
    """Inverse of ``transform_e``: ``e_m = sum_{i<m} C(m, i) P_i``."""
    return tuple(sum(comb(m, i) * P[i] for i in range(m)) % p for m in range(1, len(P) + 1))


def mixed_newton(b: Sequence[int], p: int) -> list[int]:
    """Coefficients of ``prod(1 - j x) / prod(1 - k x)`` up to ``x^s``."""
    sig = [1]
    for u in range(1, len(b) + 1):
        acc = sum(sig[m] * b[u - m - 1] for m in range(u))
        sig.append(-acc * pow(u, p - 2, p) % p)
    return sig


@lru_cache(maxsize=500_000)
def _mixed_solve(b: tuple, k_plus: int, k_minus: int, p: int, hi: int) -> tuple | None:
    s = len(b)
    if k_plus + k_minus > s:
        raise ValueError("split exceeds the number of power sums")
    if s == 0:
        return ((), ())
    F = field(p)
    series = Polynomial(F, mixed_newton(b, p))
    try:
        num, den = pade_split(series, k_plus, k_minus, order=s + 1)
    except NoSolution:
        return None
    pos = find_roots_with_multiplicity(num.reciprocal(), range(1, hi + 1)) if num.degree > 0 else []
    neg = find_roots_with_multiplicity(den.reciprocal(), range(1, hi + 1)) if den.degree > 0 else []
    if len(pos) != num.degree or len(neg) != den.degree:
        return None
    return tuple(pos), tuple(neg)


def solve_mixed_power_sums(b: Sequence[int], k_plus: int, k_minus: int, p: int,
                           hi: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Positions with ``sum_pos j^m - sum_neg k^m = b_m`` for ``m = 1..len(b)``.

    At most ``k_plus`` positive and ``k_minus`` negative terms; roots are
    searched in ``[1, hi]``. Repeated positions are allowed.
    """
    hi = p - 1 if hi is None else hi
    out = _mixed_solve(tuple(int(v) % p for v in b), k_plus, k_minus, p, hi)
    if out is None:
        raise NoSolution("no position sets match these power sums")
    return out


def shift_power_sums(J: Sequence[int], K: Sequence[int], upto: int, p: int) -> tuple[int, ...]:
    """``P_0..P_upto`` for left-shift set ``J`` and right-shift set ``K``."""
    return tuple((sum(pow(j, i, p) for j in J) - sum(pow(k, i, p) for k in K)) % p
                 for i in range(upto + 1))


def _shift_solutions(e: tuple, s_plus: int, s_minus: int, p: int, hi: int) -> set:
    """All ``(J, K)`` consistent with the guessed ``e_1..e_(s+1)``."""
    P = transform_e(e, p)
    found = set()
    for n_left in range(s_minus + 1):
        for n_right in range(s_plus + 1):
            sol = _mixed_solve(P[1:], n_left, n_right, p, hi)
            if sol is None:
                continue
            J, K = sol
            if len(J) <= s_minus and len(K) <= s_plus and (len(J) - len(K)) % p == P[0]:
                found.add(sol)
    return found


@lru_cache(maxsize=4096)
def shift_table(L: int, s_plus: int, s_minus: int, kappa: int, p: int) -> tuple:
    """Loop over every guess ``e`` in ``Z_p^(s+1)`` once per gap length.

    ``e_1`` equals ``|J| - |K|`` so only ``s_plus + s_minus + 1`` residues
    can occur for it. Returns ``(e_1..e_kappa, J, K)`` for each solution.
    """
    s = s_plus + s_minus
    hi = max(L - 1, 0)
    rows = {}
    firsts = sorted({(d) % p for d in range(-s_plus, s_minus + 1)})
    for e1 in firsts:
        for rest in product(range(p), repeat=s):
            for J, K in _shift_solutions((e1,) + rest, s_plus, s_minus, p, hi):
                if (J, K) not in rows:
                    P = shift_power_sums(J, K, kappa - 1, p)
                    rows[(J, K)] = forward_e(P, p)
    return tuple((e, J, K) for (J, K), e in sorted(rows.items()))


def _rebuild(v: Sequence[int], D, J, K) -> tuple | None:
    u = list(v)
    for d in D:
        u[d - 1] += 1
    for j in J:
        u[j - 1] -= 1
        u[j] += 1
    for k in K:
        u[k - 1] += 1
        u[k] -= 1
    return tuple(u) if min(u) >= 0 else None


def _accept(u, y: str, spec: ListCodeSpec, out: set):
    if u is None:
        return
    x = phi_inverse(u)
    if x not in out and spec.contains(x) and y in asym_ball(x, spec.t, spec.s_plus, spec.s_minus):
        out.add(x)


def _syndrome_gap(y: str, spec: ListCodeSpec) -> tuple[int, ...]:
    return tuple((a - b) % spec.p for a, b in zip(spec.a, spec.syndromes(y)))


def _deletion_sets(L: int, t_actual: int):
    return combinations_with_replacement(range(1, L + 1), t_actual)


def decode_list(y: str, spec: ListCodeSpec) -> list[str]:
    """Every codeword whose error ball contains ``y``, sorted."""
    t_actual = spec.n - len(y)
    if not 0 <= t_actual <= spec.t:
        return []
    v = phi(y)
    L = len(v)
    p = spec.p
    a2 = _syndrome_gap(y, spec)
    out: set = set()
    if spec.t >= spec.s + 1:
        for e, J, K in shift_table(L, spec.s_plus, spec.s_minus, spec.kappa, p):
            a_star = tuple((a2[m] - e[m]) % p for m in range(spec.t))
            D = _deletion_solve(a_star[:t_actual], t_actual, p, L)
            if D is not None:
                _accept(_rebuild(v, D, J, K), y, spec, out)
    else:
        for D in _deletion_sets(L, t_actual):
            _shifts_for_deletions(v, D, a2, y, spec, out)
    return sorted(out)


def _shifts_for_deletions(v, D, a2, y, spec: ListCodeSpec, out: set):
    p = spec.p
    e = tuple((a2[m - 1] - sum(pow(d, m, p) for d in D)) % p for m in range(1, spec.s + 2))
    if not -spec.s_plus <= _centered(e[0], p) <= spec.s_minus:
        return
    for J, K in _shift_solutions(e, spec.s_plus, spec.s_minus, p, len(v) - 1):
        _accept(_rebuild(v, D, J, K), y, spec, out)


def _centered(r: int, p: int) -> int:
    return r - p if r > p // 2 else r


def decode_list_t1(y: str, spec: ListCodeSpec) -> list[str]:
    """Single-deletion fast path: only a window of deletion gaps is tried.

    ``a''_1 = d + |J| - |K|`` pins ``d`` to ``[a''_1 - s_minus, a''_1 + s_plus]``.
    """
    if spec.t != 1:
        raise ValueError("fast path needs t = 1")
    t_actual = spec.n - len(y)
    if t_actual not in (0, 1):
        return []
    v = phi(y)
    a2 = _syndrome_gap(y, spec)
    out: set = set()
    if t_actual == 0:
        _shifts_for_deletions(v, (), a2, y, spec, out)
        return sorted(out)
    for off in range(-spec.s_minus, spec.s_plus + 1):
        d = (a2[0] + off) % spec.p
        if 1 <= d <= len(v):
            _shifts_for_deletions(v, (d,), a2, y, spec, out)
    return sorted(out)
