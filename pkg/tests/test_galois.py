import random

import pytest
from hypothesis import given, strategies as st

from asymdl.errors import NoSolution
from asymdl.galois import (
    GF,
    Polynomial,
    field,
    find_roots_with_multiplicity,
    is_irreducible,
    is_prime,
    pade_split,
    smallest_irreducible,
    smallest_prime_above,
    smallest_prime_at_least,
)

FIELDS = [(2, 1), (2, 4), (3, 2), (5, 1), (7, 2), (11, 1), (11, 2), (31, 1)]


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert smallest_prime_above(40) == 41
    assert smallest_prime_above(41) == 43
    assert smallest_prime_at_least(41) == 41
    assert smallest_prime_at_least(8) == 11


def test_irreducible_choice():
    # x^2 + 1 over GF(3) is the first monic irreducible quadratic
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    assert smallest_irreducible(2, 4) == (1, 1, 0, 0, 1)
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)


@pytest.mark.parametrize("p,m", FIELDS)
def test_field_axioms_exhaustive(p, m):
    F = GF(p, m)
    els = list(F.elements())
    assert len(els) == p ** m
    rng = random.Random(p * 100 + m)
    sample = [(rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(400)]
    for a, b, c in sample:
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(F.add(a, b), b) == a
    for a in els[1:]:
        assert F.mul(a, F.inv(a)) == 1
        assert F.alpha_pow(F.log(a)) == a
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("p,m", FIELDS)
def test_generator_is_primitive(p, m):
    F = field(p, m)
    powers = {F.alpha_pow(e) for e in range(F.q - 1)}
    assert powers == set(range(1, F.q))
    assert F.pow(F.generator, F.q - 1) == 1


def test_prime_subfield():
    F = field(3, 2)
    for a in range(3):
        assert F.in_prime_subfield(a)
        assert F.pow(a, 3) == a
    assert not F.in_prime_subfield(4)
    assert F.scalar(-1) == 2


def _poly(F, rng, deg):
    return Polynomial(F, [rng.randrange(F.q) for _ in range(deg + 1)])


@pytest.mark.parametrize("p,m", [(2, 3), (5, 1), (3, 2), (31, 1)])
def test_polynomial_division(p, m):
    F = field(p, m)
    rng = random.Random(7)
    for _ in range(200):
        a = _poly(F, rng, rng.randint(0, 8))
        b = _poly(F, rng, rng.randint(0, 5))
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_polynomial_evaluation_and_roots():
    F = field(11)
    f = Polynomial.from_roots(F, [2, 2, 5])
    assert f.degree == 3
    assert f(2) == 0 and f(5) == 0 and f(3) != 0
    assert find_roots_with_multiplicity(f, range(11)) == [2, 2, 5]
    assert f.derivative()(2) == 0
    with pytest.raises(ValueError):
        find_roots_with_multiplicity(Polynomial(F), range(11))


def test_reciprocal_and_shift():
    F = field(7)
    f = Polynomial(F, [1, 2, 3])
    assert f.reciprocal().coeffs == (3, 2, 1)
    assert f.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert f.truncate(2).coeffs == (1, 2)
    assert f.monic()[2] == 1


@given(
    st.sampled_from([11, 31, 101]),
    st.lists(st.integers(1, 100), min_size=0, max_size=3),
    st.lists(st.integers(1, 100), min_size=0, max_size=3),
)
def test_pade_roundtrip(p, num_roots, den_roots):
    F = field(p)
    num_roots = [r % p for r in num_roots if r % p]
    den_roots = [r % p for r in den_roots if r % p]
    if set(num_roots) & set(den_roots):
        return
    # polynomials with constant term 1: prod (1 - r x)
    num = Polynomial(F, [1])
    for r in num_roots:
        num = num * Polynomial(F, [1, F.neg(r)])
    den = Polynomial(F, [1])
    for r in den_roots:
        den = den * Polynomial(F, [1, F.neg(r)])
    dn, dd = len(num_roots), len(den_roots)
    order = dn + dd + 1
    # series = num / den mod x^order
    inv = Polynomial(F, [1])
    for _ in range(order):
        inv = (inv * (Polynomial(F, [2]) - den * inv)).truncate(order)
    series = (num * inv).truncate(order)
    got_num, got_den = pade_split(series, dn, dd)
    assert got_num == num and got_den == den


def test_pade_rejects():
    F = field(11)
    with pytest.raises(ValueError):
        pade_split(Polynomial(F, [2, 1]), 1, 1)
    # 1 + x^2 has no (0, 1) split modulo x^3
    with pytest.raises(NoSolution):
        pade_split(Polynomial(F, [1, 0, 1]), 0, 1, order=3)
