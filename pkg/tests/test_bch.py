import random

import pytest
from hypothesis import given, strategies as st

from asymdl.bch import (
    BchSpec,
    aly_condition,
    block_prime,
    cyclotomic_coset,
    formula_parity,
    generator_polynomial,
    min_extension_degree,
    parity_report,
)
from asymdl.errors import BCHDecodeFailure

CODES = [(2, 12, 3), (2, 15, 5), (3, 26, 5), (7, 6, 3), (11, 100, 7), (13, 30, 5), (11, 120, 9)]


def test_cosets():
    assert cyclotomic_coset(1, 2, 15) == (1, 2, 4, 8)
    assert cyclotomic_coset(5, 2, 15) == (5, 10)
    assert min_extension_degree(2, 15) == 4
    assert min_extension_degree(2, 16) == 5
    assert min_extension_degree(11, 11) == 2


def test_binary_hamming_generator():
    # x^4 + x + 1 generates the [15, 11] Hamming code
    assert generator_polynomial(2, 4, 3) == (1, 1, 0, 0, 1)
    assert BchSpec(2, 15, 5).redundancy == 8


@pytest.mark.parametrize("p,n,d", CODES)
def test_roundtrip_within_radius(p, n, d):
    spec = BchSpec(p, n, d)
    rng = random.Random(p * 1000 + n)
    for _ in range(60):
        msg = [rng.randrange(p) for _ in range(spec.k)]
        c = spec.encode_systematic(msg)
        assert c[:spec.k] == tuple(msg)
        assert spec.is_codeword(c)
        assert not any(spec.syndromes(c))
        w = list(c)
        for j in rng.sample(range(n), rng.randint(0, spec.t)):
            w[j] = (w[j] + rng.randrange(1, p)) % p
        assert spec.decode(w) == c


@pytest.mark.parametrize("p,n,d", CODES)
def test_generator_degree_matches_formula(p, n, d):
    m = min_extension_degree(p, n)
    rep = parity_report(p, m, d)
    assert rep["generator_degree"] == BchSpec(p, n, d).redundancy
    assert rep["formula"] >= rep["generator_degree"] or not rep["formula_applies"]


def test_formula_inside_its_range():
    # the closed form is exact for small designed distances in a large field
    for p, m, d in [(2, 6, 3), (2, 8, 5), (3, 4, 3), (3, 6, 7), (5, 4, 3)]:
        assert aly_condition(d, p, m)
        assert formula_parity(d, p, m) == len(generator_polynomial(p, m, d)) - 1


def test_decoder_never_returns_non_codeword():
    spec = BchSpec(3, 26, 5)
    rng = random.Random(5)
    for _ in range(300):
        w = [rng.randrange(3) for _ in range(26)]
        try:
            out = spec.decode(w)
        except BCHDecodeFailure:
            continue
        assert spec.is_codeword(out)
        assert sum(a != b for a, b in zip(out, w)) <= spec.t


def test_low_distance_only_accepts_codewords():
    spec = BchSpec(5, 4, 2)
    c = spec.encode_systematic([1, 2, 3])
    assert spec.decode(c) == c
    with pytest.raises(BCHDecodeFailure):
        spec.decode([(c[0] + 1) % 5] + list(c[1:]))


def test_invalid_specs():
    with pytest.raises(ValueError):
        BchSpec(2, 16, 3, m=4)
    with pytest.raises(ValueError):
        BchSpec(2, 5, 9)
    with pytest.raises(ValueError):
        BchSpec(2, 15, 3).encode_systematic([1])


def test_block_prime_rule():
    assert block_prime(2, 2, 1) == 11
    assert block_prime(1, 1, 0) == 7
    assert block_prime(1, 1, 3) == 11
    assert block_prime(2, 2, 1, strict=True) == 11
    assert block_prime(1, 1, 0, strict=True) == 5


@given(st.integers(0, 2 ** 32), st.sampled_from(CODES[:5]))
def test_linearity(seed, code):
    p, n, d = code
    spec = BchSpec(p, n, d)
    rng = random.Random(seed)
    a = [rng.randrange(p) for _ in range(spec.k)]
    b = [rng.randrange(p) for _ in range(spec.k)]
    ca, cb = spec.encode_systematic(a), spec.encode_systematic(b)
    s = spec.encode_systematic([(x + y) % p for x, y in zip(a, b)])
    assert s == tuple((x + y) % p for x, y in zip(ca, cb))
