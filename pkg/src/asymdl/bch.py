"""Narrow-sense BCH codes over GF(p), shortened to any length n <= p^m - 1.

Word position ``j`` (0-based) carries the coefficient of ``x^(n-1-j)``, so a
systematic codeword reads ``(message, parity)`` and shortening simply drops
high-degree positions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .errors import BCHDecodeFailure
from .galois import GF, Polynomial, field, smallest_prime_at_least


def min_extension_degree(p: int, n: int) -> int:
    m = 1
    while p ** m - 1 < n:
        m += 1
    return m


def cyclotomic_coset(i: int, p: int, modulus: int) -> tuple[int, ...]:
    out, e = [], i % modulus
    while e not in out:
        out.append(e)
        e = e * p % modulus
    return tuple(out)


@lru_cache(maxsize=None)
def generator_polynomial(p: int, m: int, d: int) -> tuple[int, ...]:
    """Coefficients (low order first, in GF(p)) of the narrow-sense generator."""
    F = field(p, m)
    g = Polynomial(F, [1])
    done: set[int] = set()
    for i in range(1, d):
        coset = cyclotomic_coset(i, p, F.q - 1)
        if coset[0] in done or any(c in done for c in coset):
            continue
        done.update(coset)
        g = g * Polynomial.from_roots(F, [F.alpha_pow(c) for c in coset])
    if any(c >= p for c in g.coeffs):
        raise AssertionError("generator has coefficients outside GF(p)")  # pragma: no cover
    return g.coeffs


@dataclass(frozen=True)
class BchSpec:
    """Narrow-sense BCH code: roots alpha^1..alpha^(d-1), length ``n``."""

    p: int
    n: int
    d: int
    m: int = 0
    generator: tuple = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("design distance must be >= 1")
        m = self.m or min_extension_degree(self.p, self.n)
        object.__setattr__(self, "m", m)
        if self.n > self.p ** m - 1:
            raise ValueError(f"length {self.n} exceeds {self.p}^{m} - 1")
        g = generator_polynomial(self.p, m, self.d) if self.d > 1 else (1,)
        if len(g) - 1 > self.n:
            raise ValueError("generator degree exceeds the code length")
        object.__setattr__(self, "generator", g)

    @property
    def ext_field(self) -> GF:
        return field(self.p, self.m)

    @property
    def prime_field(self) -> GF:
        return field(self.p, 1)

    @property
    def redundancy(self) -> int:
        return len(self.generator) - 1

    @property
    def k(self) -> int:
        return self.n - self.redundancy

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    def _poly(self, word: Sequence[int]) -> Polynomial:
        return Polynomial(self.prime_field, [c % self.p for c in reversed(word)])

    def encode_systematic(self, msg: Sequence[int]) -> tuple[int, ...]:
        if len(msg) != self.k:
            raise ValueError(f"message length {len(msg)} != k = {self.k}")
        r = self.redundancy
        F = self.prime_field
        shifted = self._poly(msg).shift(r)
        rem = shifted % Polynomial(F, self.generator)
        parity = [F.neg(rem[i]) for i in range(r - 1, -1, -1)]
        return tuple(int(c) % self.p for c in msg) + tuple(parity)

    def parity(self, msg: Sequence[int]) -> tuple[int, ...]:
        return self.encode_systematic(msg)[self.k:]

    def is_codeword(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            return False
        return (self._poly(word) % Polynomial(self.prime_field, self.generator)).is_zero()

    def syndromes(self, word: Sequence[int]) -> list[int]:
        F = self.ext_field
        poly = Polynomial(F, [c % self.p for c in reversed(word)])
        return [poly(F.alpha_pow(j)) for j in range(1, self.d)]

    def decode(self, word: Sequence[int]) -> tuple[int, ...]:
        """Bounded-distance decoding; raises ``BCHDecodeFailure`` beyond it."""
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != n = {self.n}")
        word = tuple(int(c) % self.p for c in word)
        if self.d <= 2:
            if self.is_codeword(word):
                return word
            raise BCHDecodeFailure("no correction capability")
        S = self.syndromes(word)
        if not any(S):
            return word
        F = self.ext_field
        lam = berlekamp_massey(F, S)
        if lam.degree > self.t:
            raise BCHDecodeFailure("locator degree exceeds correction radius")
        syn = Polynomial(F, S)
        omega = (syn * lam).truncate(self.d - 1)
        dlam = lam.derivative()
        out = list(word)
        found = 0
        for deg in range(self.n):
            xinv = F.alpha_pow(-deg)
            if lam(xinv) != 0:
                continue
            found += 1
            den = dlam(xinv)
            if den == 0:
                raise BCHDecodeFailure("repeated locator root")
            val = F.neg(F.div(omega(xinv), den))
            if not F.in_prime_subfield(val) or val == 0:
                raise BCHDecodeFailure("error value outside the symbol alphabet")
            j = self.n - 1 - deg
            out[j] = (out[j] - val) % self.p
        if found != lam.degree:
            raise BCHDecodeFailure("locator roots do not match its degree")
        if not self.is_codeword(out):
            raise BCHDecodeFailure("correction did not land on a codeword")
        return tuple(out)


def berlekamp_massey(F: GF, S: Sequence[int]) -> Polynomial:
    """Shortest LFSR connection polynomial for the sequence ``S``."""
    C, B = [1], [1]
    L, shift, b = 0, 1, 1
    for i in range(len(S)):
        delta = S[i]
        for j in range(1, L + 1):
            if j < len(C):
                delta = F.add(delta, F.mul(C[j], S[i - j]))
        if delta == 0:
            shift += 1
            continue
        coef = F.div(delta, b)
        T = C[:]
        need = len(B) + shift
        if len(C) < need:
            C = C + [0] * (need - len(C))
        for j, v in enumerate(B):
            C[j + shift] = F.sub(C[j + shift], F.mul(coef, v))
        if 2 * L <= i:
            L = i + 1 - L
            B, b, shift = T, delta, 1
        else:
            shift += 1
    return Polynomial(F, C)


def aly_condition(d: int, p: int, m: int) -> bool:
    """Range of designed distances where the closed-form parity count applies."""
    return 2 <= d <= p ** (math.ceil(m / 2) - 1)


def formula_parity(d: int, p: int, m: int) -> int:
    return math.ceil((d - 1) * (p - 1) / p) * m


def block_prime(t_b: int, ell: int, s: int = 0, strict: bool = False) -> int:
    """Field size for the block-deletion codes.

    A gap of the run-gap vector moves by at most ``max(2, s)`` upward and
    ``t_b*ell + max(2, s)`` downward, so ``p`` must exceed the width of that
    window for the unwrap to be unambiguous. ``strict`` keeps the smaller
    ``p >= t_b*ell + 4`` rule instead.
    """
    if strict:
        return smallest_prime_at_least(t_b * ell + 4)
    return smallest_prime_at_least(t_b * ell + 2 * max(2, s) + 1)


def parity_length(t_b: int, ell: int, s: int, m: int, p: int | None = None) -> int:
    """``ceil(2(t_b+2s)(1-1/p)) * m`` parity symbols."""
    if p is None:
        p = block_prime(t_b, ell, s)
    return formula_parity(2 * (t_b + 2 * s) + 1, p, m)


def parity_report(p: int, m: int, d: int) -> dict:
    """Closed-form parity count against the constructed generator degree."""
    actual = len(generator_polynomial(p, m, d)) - 1 if d > 1 else 0
    return {
        "p": p,
        "m": m,
        "d": d,
        "formula": formula_parity(d, p, m),
        "generator_degree": actual,
        "formula_applies": aly_condition(d, p, m),
        "used": actual,
    }
