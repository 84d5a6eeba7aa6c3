import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asymdl.block_codes import (
    BlockCodeSpec,
    CodebookInnerDecoder,
    balance_decode,
    balance_encode,
    binary_map,
    binary_unmap,
    decode_nonsys,
    decode_systematic,
    encode_systematic,
    layout_for,
    worked_example,
    repeat_bits,
    repetition_factor,
    size_lower_bound,
    unwrap,
)
from asymdl.channel import apply_pattern, block_deletion_ball, sample_pattern
from asymdl.errors import CapacityExceeded, DecodeError


def test_worked_trace():
    tr = worked_example()
    assert tr["p"] == 11
    assert tr["z_prime"] == (1, 0, 1, 0, 1)
    assert tr["z_star"] == (1, 2, 1, 2, 0)
    assert tr["eps_prime"] == (0, 9, 0, 9, 1)
    assert tr["eps"] == (0, -2, 0, -2, 1)
    assert tr["phi_x"] == (1, 2, 1, 2, 0)
    assert tr["x"] == "0100101001"


def test_unwrap():
    assert unwrap((0, 9, 1, 10), 11, 1) == (0, -2, 1, -1)
    assert unwrap((2, 3), 11, 2) == (2, -8)


def test_codebook_decoder_prefers_nearest():
    dec = CodebookInnerDecoder([(1, 2, 3), (0, 0, 0)], 11)
    assert dec((1, 2, 0)) == (1, 2, 3)
    with pytest.raises(DecodeError):
        dec((1, 2))


@pytest.mark.parametrize("t_b,ell,s", [(1, 1, 0), (1, 2, 0), (1, 1, 1)])
def test_nonsystematic_exhaustive(t_b, ell, s):
    spec = BlockCodeSpec(10, t_b, ell, s)
    code = spec.codebook()
    assert len(code) >= size_lower_bound(10, t_b, ell, s)
    for x in code:
        for y in block_deletion_ball(x, t_b, ell, s):
            assert decode_nonsys(y, spec) == x


def test_size_lower_bound_value():
    assert size_lower_bound(10, 1, 1, 0) == Fraction(2 ** 10, 7 * 11 ** 2)


@given(st.text(alphabet="01", min_size=3, max_size=14))
def test_balance_roundtrip(x):
    y = balance_encode(x)
    assert balance_decode(y, len(x)) == x
    tail = y[1:]
    assert abs(tail.count("0") - tail.count("1")) <= 1


def test_balance_is_injective():
    k = 7
    outs = {balance_encode(format(i, "07b")) for i in range(2 ** k)}
    assert len(outs) == 2 ** k
    with pytest.raises(CapacityExceeded):
        balance_encode("01")


def test_binary_map_roundtrip():
    u = (0, 10, 3, 7)
    assert binary_unmap(binary_map(u, 11), 11) == u
    with pytest.raises(DecodeError):
        binary_unmap("1111", 11)
    assert repeat_bits("10", 3) == "111000"


def test_layout_example():
    lay = layout_for(100, 2, 2, 1)
    assert (lay.p, lay.m, lay.parity, lay.n1_sym, lay.n1, lay.R, lay.N) == (11, 2, 16, 17, 78, 11, 1124)
    assert lay.formula_n1_sym() == lay.n1_sym
    assert repetition_factor(1, 1, 3) == 9


@pytest.mark.parametrize("k,t_b,ell,s", [(8, 1, 1, 0), (12, 1, 2, 1), (16, 2, 2, 1), (10, 1, 1, 2)])
def test_systematic_roundtrip(k, t_b, ell, s):
    lay = layout_for(k, t_b, ell, s)
    rng = random.Random(k * 31 + s)
    for trial in range(120):
        c = "".join(rng.choice("01") for _ in range(k))
        x = encode_systematic(c, lay)
        assert len(x) == lay.N and x.startswith(c)
        e = sample_pattern(x, (t_b, ell, s), trial, "block")
        assert decode_systematic(apply_pattern(x, e), lay) == c


def test_systematic_codeword_weights_are_fixed():
    lay = layout_for(10, 1, 1, 1)
    x = encode_systematic("0110100111", lay)
    tail = x[lay.k:]
    assert tail.count("1") == lay.ones_h1 + lay.ones_h2


def test_nonsystematic_spec_props():
    spec = BlockCodeSpec(10, 2, 2, 1)
    assert spec.p == 11 and spec.d == 9 and spec.up == 2
    assert spec.phi_code(5) is None
    assert not spec.contains("0100101001")
    assert spec.contains("1" * 10)
