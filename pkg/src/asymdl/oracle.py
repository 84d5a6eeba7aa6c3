"""Brute-force ground truth built only from ball enumeration and set algebra."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import block_codes, lee_codes, list_codes, shift_codes, single_codes
from .channel import asym_ball, block_deletion_ball, error_ball, single_deletion_shift_ball
from .errors import DecodeError, GridTooLarge
from .galois import smallest_prime_above
from .seqcore import vt_syndrome, weight
from .single_codes import all_strings

CASE_LIMIT = 10 ** 7


@dataclass
class VerificationReport:
    params: dict
    total: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        obj = asdict(self)
        obj["verified"] = self.verified
        obj["failures"] = obj["failures"][:20]
        obj["n_failures"] = len(self.failures)
        return json.dumps(obj, sort_keys=True, default=str)


def balls_disjoint(code: Iterable[str], ball: Callable[[str], Iterable[str]], params: dict | None = None) -> VerificationReport:
    """Pairwise ball disjointness; each collision is reported with a witness."""
    start = time.perf_counter()
    rep = VerificationReport(params or {})
    owner: dict[str, str] = {}
    for c in sorted(set(code)):
        for y in ball(c):
            rep.total += 1
            if y in owner and owner[y] != c:
                rep.failures.append({"first": owner[y], "second": c, "witness": y})
            else:
                owner[y] = c
    rep.elapsed = time.perf_counter() - start
    return rep


def find_containing_codewords(y: str, code: Iterable[str], t: int = 0, s: int = 0,
                              ball: Callable[[str], Iterable[str]] | None = None) -> set:
    ball = ball or (lambda c: error_ball(c, t, s))
    return {c for c in code if len(c) >= len(y) and y in ball(c)}


def _family_plan(family: str, p: dict):
    """Words, spec factory, ball and decoder for one family.

    Every residue class is covered at once: each word is paired with the
    code that its own syndrome selects.
    """
    n = p["n"]
    if family == "single":
        prime = smallest_prime_above(4 * n)
        words = all_strings(n)
        spec = lambda x: single_codes.SingleCodeSpec(n, prime, single_codes.syndrome_value(x, prime))
        ball = lambda x: error_ball(x, 1, 0) | error_ball(x, 0, 1)
        dec = lambda y, sp: single_codes.decode(y, sp)
        budget = 2
    elif family == "shift":
        sp_, sm_ = p.get("s_plus", 1), p.get("s_minus", 0)
        M = n + sp_ + sm_ + 1
        words = shift_codes.inner_words(n, sp_ + sm_)
        spec = lambda x: shift_codes.ShiftCodeSpec(n, sp_, sm_, vt_syndrome(x) % M, weight(x) % 2)
        ball = lambda x: single_deletion_shift_ball(x, sp_, sm_)
        dec = lambda y, sp: shift_codes.decode(y, sp)
        budget = 1 + sp_ + sm_
    elif family == "lee":
        t, s = p.get("t", 1), p.get("s", 1)
        r = t + 2 * s
        words = all_strings(n)
        spec = lambda x: lee_codes.LeeCodeSpec.for_word(x, r)
        ball = lambda x: error_ball(x, t, s)
        dec = lambda y, sp: lee_codes.decode(y, sp, t, s)
        budget = t + s
    elif family == "list":
        t, sp_, sm_ = p.get("t", 1), p.get("s_plus", 1), p.get("s_minus", 0)
        prime = p.get("p") or smallest_prime_above(n)
        words = all_strings(n)
        spec = lambda x: list_codes.ListCodeSpec.for_word(x, t, sp_, sm_, prime)
        ball = lambda x: asym_ball(x, t, sp_, sm_)
        dec = lambda y, sp: list_codes.decode_list(y, sp)
        budget = t + sp_ + sm_
    elif family == "block":
        t_b, ell, s = p.get("t_b", 1), p.get("ell", 1), p.get("s", 0)
        bspec = block_codes.BlockCodeSpec(n, t_b, ell, s)
        words = tuple(bspec.codebook())
        spec = lambda x: bspec
        ball = lambda x: block_deletion_ball(x, t_b, ell, s)
        dec = lambda y, sp: block_codes.decode_nonsys(y, sp)
        budget = t_b * ell + s
    else:
        raise ValueError(f"unknown family {family!r}")
    return words, spec, ball, dec, budget


def exhaustive_decode_check(family: str, **params) -> VerificationReport:
    """Decode every ball member of every codeword and compare."""
    start = time.perf_counter()
    words, spec, ball, dec, budget = _family_plan(family, params)
    estimate = len(words) * (params["n"] + 1) ** budget
    if estimate > params.get("limit", CASE_LIMIT):
        raise GridTooLarge(f"about {estimate} cases exceeds the limit")
    rep = VerificationReport({"family": family, **params})
    max_list = 0
    for x in words:
        sp = spec(x)
        for y in sorted(ball(x)):
            rep.total += 1
            try:
                out = dec(y, sp)
            except DecodeError as exc:
                rep.failures.append({"x": x, "y": y, "error": repr(exc)})
                continue
            if family == "list":
                max_list = max(max_list, len(out))
                ok = x in out
            else:
                ok = out == x
            if not ok:
                rep.failures.append({"x": x, "y": y, "got": out})
    if family == "list":
        rep.extra["max_list_size"] = max_list
    rep.elapsed = time.perf_counter() - start
    return rep


def max_code_size(n: int, ball: Callable[[str], Iterable[str]], time_limit: float | None = None) -> int:
    """Largest code of length ``n`` with pairwise disjoint balls (exact ILP).

    Assumes the balls preserve weight, so each weight class is solved on
    its own. One packing row per received word keeps the relaxation tight.
    """
    total = 0
    for w in range(n + 1):
        words = [x for x in all_strings(n) if weight(x) == w]
        total += _max_packing(words, ball, time_limit)
    return total


def _max_packing(words, ball, time_limit) -> int:
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import coo_matrix

    index: dict[str, list[int]] = {}
    for col, x in enumerate(words):
        for y in ball(x):
            index.setdefault(y, []).append(col)
    rows = [cols for cols in index.values() if len(cols) > 1]
    if not rows:
        return len(words)
    r_idx = [r for r, cols in enumerate(rows) for _ in cols]
    c_idx = [c for cols in rows for c in cols]
    A = coo_matrix((np.ones(len(c_idx)), (r_idx, c_idx)), shape=(len(rows), len(words)))
    options = {"time_limit": time_limit} if time_limit else {}
    res = milp(
        c=-np.ones(len(words)),
        constraints=LinearConstraint(A.tocsr(), -np.inf, 1),
        integrality=np.ones(len(words)),
        bounds=Bounds(0, 1),
        options=options,
    )
    if res.status != 0:
        raise RuntimeError(f"ILP did not reach optimality: {res.message}")
    return int(round(-res.fun))
