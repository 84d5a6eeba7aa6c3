from itertools import product

import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def bits(min_size=0, max_size=12):
    return st.text(alphabet="01", min_size=min_size, max_size=max_size)


def words(n):
    return ["".join(b) for b in product("01", repeat=n)]


def brute_ball(x, t, s_right, s_left, s_total=None, block=0):
    """String-level search over every interleaving of the allowed events.

    With ``block`` > 0 a deletion removes 1..block consecutive zeros and
    ``t`` counts blocks; otherwise it removes a single 0.
    """
    if s_total is None:
        s_total = s_right + s_left
    start = (x, 0, 0, 0)
    seen = {start}
    stack = [start]
    while stack:
        y, d, r, l = stack.pop()
        nxt = []
        if d < t:
            for i in range(len(y)):
                if block:
                    for k in range(1, block + 1):
                        if y[i:i + k] == "0" * k:
                            nxt.append((y[:i] + y[i + k:], d + 1, r, l))
                elif y[i] == "0":
                    nxt.append((y[:i] + y[i + 1:], d + 1, r, l))
        if r + l < s_total:
            for i in range(len(y) - 1):
                if y[i:i + 2] == "01" and r < s_right:
                    nxt.append((y[:i] + "10" + y[i + 2:], d, r + 1, l))
                if y[i:i + 2] == "10" and l < s_left:
                    nxt.append((y[:i] + "01" + y[i + 2:], d, r, l + 1))
        for state in nxt:
            if state not in seen:
                seen.add(state)
                stack.append(state)
    return {y for y, *_ in seen}


@pytest.fixture
def oracle_ball():
    return brute_ball
