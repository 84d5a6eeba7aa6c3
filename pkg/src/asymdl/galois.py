"""Finite fields GF(p), GF(p^m) and polynomials over them.

Field elements are plain ints. In GF(p^m) an element is the integer whose
base-p digits (least significant first) are the coefficients of its
polynomial representative modulo the field's defining polynomial.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import NoSolution


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_at_least(b: int) -> int:
    n = max(b, 2)
    while not is_prime(n):
        n += 1
    return n


def smallest_prime_above(b: int) -> int:
    return smallest_prime_at_least(b + 1)


def _poly_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a / b over GF(p), coefficient lists low-order first."""
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    a = a[:db] if db > 0 else []
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) by trial division."""
    f = list(coeffs)
    m = len(f) - 1
    if m <= 1:
        return m == 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod_p(f, list(low) + [1], p):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Candidates ``x^m + r(x)`` are ordered by the integer whose base-p digits
    are the coefficients of ``r`` (constant term least significant).
    """
    if m == 1:
        return (0, 1)
    for r in range(p ** m):
        low = [(r // p ** i) % p for i in range(m)]
        if low[0] == 0:
            continue
        if is_irreducible(low + [1], p):
            return tuple(low + [1])
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """GF(p^m) with log/antilog tables; ``m == 1`` gives the prime field."""

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = smallest_irreducible(p, m)
        self._digits = [self._to_digits(a) for a in range(self.q)] if m > 1 else None
        self.generator = self._find_primitive()
        self._exp = [0] * (2 * (self.q - 1))
        self._log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            self._exp[i] = x
            self._log[x] = i
            x = self._slow_mul(x, self.generator)
        for i in range(self.q - 1, 2 * (self.q - 1)):
            self._exp[i] = self._exp[i - (self.q - 1)]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    # -- representation helpers
    def _to_digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.m)]

    def _from_digits(self, d: Iterable[int]) -> int:
        out = 0
        for i, v in enumerate(d):
            out += (v % self.p) * self.p ** i
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        da, db = self._to_digits(a), self._to_digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod_p(prod, list(self.modulus), self.p)
        return self._from_digits(rem)

    def _find_primitive(self) -> int:
        order = self.q - 1
        factors = {f for f in range(2, order + 1) if order % f == 0 and is_prime(f)}
        for g in range(1, self.q):
            if g == 1 and order > 1:
                continue
            ok = True
            for f in factors:
                if self._slow_pow(g, order // f) == 1:
                    ok = False
                    break
            if ok:
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    # -- field operations
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits[a], self._digits[b]
        p = self.p
        out, scale = 0, 1
        for x, y in zip(da, db):
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        for x in self._digits[a]:
            out += (-x % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def alpha_pow(self, e: int) -> int:
        """Power of the primitive element."""
        return self._exp[e % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def scalar(self, c: int) -> int:
        """Embed an integer into the prime subfield."""
        return c % self.p

    def in_prime_subfield(self, a: int) -> bool:
        return a < self.p

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> GF:
    return GF(p, m)


class Polynomial:
    """Polynomial over a ``GF``; coefficients low-order first, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, F: GF, roots: Iterable[int]) -> "Polynomial":
        out = cls(F, [1])
        for r in roots:
            out = out * cls(F, [F.neg(r), 1])
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {list(self.coeffs)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Polynomial(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Polynomial(self.field, [0] * k + list(self.coeffs))

    def truncate(self, k: int) -> "Polynomial":
        """Reduce modulo x^k."""
        return Polynomial(self.field, self.coeffs[:k])

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = F.mul(rem[i], inv_lead)
            if c:
                quot[i - db] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b))
        return Polynomial(F, quot), Polynomial(F, rem[:db])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(F.scalar(i), c) for i, c in enumerate(self.coeffs) if i])

    def reciprocal(self) -> "Polynomial":
        """``x^deg * f(1/x)``."""
        return Polynomial(self.field, reversed(self.coeffs))

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))


def find_roots_with_multiplicity(f: Polynomial, domain: Iterable[int]) -> list[int]:
    """Roots of ``f`` in ``domain``, each repeated by its multiplicity."""
    if f.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    F = f.field
    roots = []
    for r in domain:
        g = f
        while g.degree >= 1 and g(r) == 0:
            g = g // Polynomial(F, [F.neg(r), 1])
            roots.append(r)
    return roots


def pade_split(
    series: Polynomial, deg_num: int, deg_den: int, order: int | None = None
) -> tuple[Polynomial, Polynomial]:
    """Split a power series into ``num / den`` modulo ``x^order``.

    Returns ``(num, den)`` with both constant terms equal to 1,
    ``deg num <= deg_num``, ``deg den <= deg_den`` and
    ``num == series * den (mod x^order)``. ``order`` defaults to
    ``deg_num + deg_den + 1``. Uses the extended Euclidean algorithm on
    ``(x^order, series)``, stopping at the first remainder of degree at most
    ``deg_num``.
    """
    F = series.field
    if order is None:
        order = deg_num + deg_den + 1
    series = series.truncate(order)
    if series[0] != 1:
        raise ValueError("series must have constant term 1")
    r_prev, r_cur = Polynomial(F, [0] * order + [1]), series
    t_prev, t_cur = Polynomial(F), Polynomial(F, [1])
    while r_cur.degree > deg_num:
        q, r = r_prev.divmod(r_cur)
        r_prev, r_cur = r_cur, r
        t_prev, t_cur = t_cur, t_prev - q * t_cur
    c0 = t_cur[0]
    if c0 == 0 or t_cur.degree > deg_den:
        raise NoSolution("no split with the requested degree bounds")
    inv = F.inv(c0)
    num, den = r_cur.scale(inv), t_cur.scale(inv)
    if num[0] != 1 or (series * den).truncate(order) != num:
        raise NoSolution("no split with the requested degree bounds")
    return num, den
