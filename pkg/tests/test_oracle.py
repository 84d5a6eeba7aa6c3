import json

import pytest

from asymdl.channel import error_ball
from asymdl.errors import GridTooLarge
from asymdl.oracle import (
    balls_disjoint,
    exhaustive_decode_check,
    find_containing_codewords,
    max_code_size,
)
from asymdl.single_codes import SingleCodeSpec, all_strings


def test_disjointness_witness():
    rep = balls_disjoint(["00", "000"], lambda c: error_ball(c, 1, 0))
    assert not rep.verified
    assert rep.failures[0]["witness"] == "00"
    ok = balls_disjoint(["01", "11"], lambda c: error_ball(c, 1, 0))
    assert ok.verified


def test_single_code_balls_are_disjoint():
    spec = SingleCodeSpec.default(8, 3)
    rep = balls_disjoint(spec.codebook(), lambda c: error_ball(c, 1, 0) | error_ball(c, 0, 1))
    assert rep.verified and rep.total > 0


def test_containing_codewords():
    assert find_containing_codewords("00", ["000", "001", "100"], t=1) == {"000"}
    assert find_containing_codewords("10", ["01", "11"], s=1) == {"01"}


@pytest.mark.parametrize("family,params", [
    ("single", {"n": 7}),
    ("shift", {"n": 9, "s_plus": 1, "s_minus": 0}),
    ("lee", {"n": 7, "t": 1, "s": 1}),
    ("list", {"n": 7, "t": 1, "s_plus": 1, "s_minus": 0}),
    ("block", {"n": 9, "t_b": 1, "ell": 1, "s": 0}),
])
def test_family_checks_pass(family, params):
    rep = exhaustive_decode_check(family, **params)
    assert rep.verified, rep.failures[:3]
    assert rep.total > 0
    obj = json.loads(rep.to_json())
    assert obj["verified"] and obj["n_failures"] == 0


def test_grid_limit():
    with pytest.raises(GridTooLarge):
        exhaustive_decode_check("lee", n=12, t=2, s=2, limit=1000)
    with pytest.raises(ValueError):
        exhaustive_decode_check("nope", n=4)


def _brute_max(n, ball):
    strings = all_strings(n)
    balls = [ball(x) for x in strings]
    best = 0
    for mask in range(1 << len(strings)):
        chosen = [balls[i] for i in range(len(strings)) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        seen = set()
        if all(not (b & seen) and not seen.update(b) for b in chosen):
            best = len(chosen)
    return best


@pytest.mark.parametrize("n", [2, 3, 4])
def test_max_code_matches_subset_search(n):
    ball = lambda c: error_ball(c, 1, 0)
    assert max_code_size(n, ball) == _brute_max(n, ball)


def test_max_code_known_value():
    assert max_code_size(6, lambda c: error_ball(c, 1, 0)) == 22
