import json
import math
from fractions import Fraction

import pytest

from asymdl import block_codes, lee_codes, shift_codes, single_codes
from asymdl.bounds import (
    block_count_total,
    empirical_block_fraction,
    expected_block_fraction,
    lower_bound_redundancy,
    phi_cardinality,
    report,
    typical_block_fraction,
    upper_bound_size,
)
from asymdl.channel import error_ball
from asymdl.oracle import max_code_size

from conftest import words


def test_upper_bound_values():
    assert upper_bound_size(16, 1, 1) == 2048
    assert upper_bound_size(10, 1, 0) == Fraction(2 ** 10 * 4, 10)
    assert lower_bound_redundancy(16, 1, 1) == 8
    assert lower_bound_redundancy(5, 0, 0) == 0


@pytest.mark.parametrize("n", [0, 1, 5, 10, 20, 64])
def test_phi_cardinality(n):
    assert phi_cardinality(n) == 2 ** n


def _count_blocks(n, i):
    total = 0
    for x in words(n):
        run = 0
        for c in x:
            if c == "1":
                total += run == i
                run = 0
            else:
                run += 1
    return total


@pytest.mark.parametrize("n,i", [(8, 0), (8, 1), (8, 2), (10, 3), (12, 1)])
def test_block_count_matches_direct_count(n, i):
    assert block_count_total(n, i) == _count_blocks(n, i)


@pytest.mark.parametrize("n,i", [(12, 0), (16, 2), (20, 3)])
def test_block_fraction_closed_form(n, i):
    assert empirical_block_fraction(n, i) == expected_block_fraction(n, i)


def test_block_fraction_approaches_typical():
    i = 2
    gap = [abs(float(empirical_block_fraction(n, i) - typical_block_fraction(i))) for n in (8, 12, 16, 20)]
    assert gap == sorted(gap, reverse=True)
    assert empirical_block_fraction(20, 1) == Fraction(1, 8)


def test_report_json():
    rep = report(20, 1, 1, t_b=1, ell=2, p=None)
    obj = json.loads(rep.to_json())
    assert obj["asymptotic"] is True
    assert obj["p"] == 7
    assert obj["block_size_lower"] > 0
    assert math.isclose(obj["lower_redundancy_bits"], 2 * math.log2(20))
    with pytest.raises(ValueError):
        block_count_total(25, 1)


def test_codebooks_beat_pigeonhole():
    n = 10
    single = single_codes.best_residue(n)
    assert len(single.codebook()) * single.p >= 2 ** n
    shift = shift_codes.best_pair(n, 1)
    assert len(shift.codebook()) * 2 * shift.modulus >= len(shift_codes.inner_words(n, 1))
    lee, size = lee_codes.best_residue(n, 2)
    assert size * lee.p ** 2 >= 2 ** n
    block = block_codes.BlockCodeSpec(n, 1, 1, 0)
    assert len(block.codebook()) >= block_codes.size_lower_bound(n, 1, 1, 0)


@pytest.mark.parametrize("n", [6, 8])
def test_max_code_below_upper_estimate(n):
    best = max_code_size(n, lambda c: error_ball(c, 1, 0))
    assert best <= upper_bound_size(n, 1, 0)
