"""Codes for t_b blocks of at most ell 0-deletions plus s transpositions.

Non-systematic code: ``phi(x) mod p`` (the run-gap vector, identical to
``phi(x1)``) must be a codeword of a p-ary narrow-sense BCH code of
designed distance ``2(t_b + 2s) + 1`` shortened to the vector's length.
Each block touches one gap and each transposition two, so the received gap
vector differs in at most ``t_b + 2s`` places, with small signed
magnitudes that are unwrapped from their residues mod ``p``.

Systematic code: ``(c, h1, h2)`` where ``h1`` carries the BCH parity of
``phi(c1) mod p`` in balanced binary form and ``h2`` is a repetition-coded,
balanced protection of ``h1``. The number of 1s is channel-invariant, so
region boundaries are found by counting 1s from the end.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Protocol, Sequence

from .bch import BchSpec, block_prime, formula_parity, generator_polynomial, min_extension_degree
from .errors import BCHDecodeFailure, CapacityExceeded, DecodeError, MarkerNotFound
from .seqcore import phi, phi_inverse
from .single_codes import all_strings


def design_distance(t_b: int, s: int) -> int:
    return 2 * (t_b + 2 * s) + 1


def unwrap(eps_prime: Sequence[int], p: int, up: int) -> tuple[int, ...]:
    """Signed lift: residues ``<= up`` stay, larger ones become negative."""
    return tuple(e if e <= up else e - p for e in eps_prime)


# -- inner decoders for the non-systematic code

class InnerDecoder(Protocol):
    def __call__(self, z: tuple) -> tuple: ...


@dataclass(frozen=True)
class BlockCodeSpec:
    n: int
    t_b: int
    ell: int
    s: int
    strict: bool = False

    @property
    def p(self) -> int:
        return block_prime(self.t_b, self.ell, self.s, self.strict)

    @property
    def d(self) -> int:
        return design_distance(self.t_b, self.s)

    @property
    def m(self) -> int:
        return min_extension_degree(self.p, self.n + 1)

    @property
    def up(self) -> int:
        """Largest positive gap change the unwrap accepts."""
        return 1 if self.strict else max(2, self.s)

    def phi_code(self, length: int) -> BchSpec | None:
        """BCH code for gap vectors of ``length``; ``None`` means only zero."""
        return _phi_code(self.p, self.m, self.d, length)

    def contains(self, x: str) -> bool:
        if len(x) != self.n:
            return False
        z = tuple(v % self.p for v in phi(x))
        code = self.phi_code(len(z))
        return code.is_codeword(z) if code else not any(z)

    def codebook(self) -> list[str]:
        return [x for x in all_strings(self.n) if self.contains(x)]

    def bch_decoder(self, z: tuple) -> tuple:
        code = self.phi_code(len(z))
        if code is not None:
            return code.decode(z)
        if sum(1 for v in z if v) > (self.d - 1) // 2:
            raise BCHDecodeFailure("too many nonzero gaps for the zero code")
        return (0,) * len(z)


@lru_cache(maxsize=None)
def _phi_code(p: int, m: int, d: int, length: int) -> BchSpec | None:
    deg = len(generator_polynomial(p, m, d)) - 1 if d > 1 else 0
    if length <= deg:
        return None
    return BchSpec(p, length, d, m)


class CodebookInnerDecoder:
    """Nearest codeword (Hamming) among an explicit list of gap vectors."""

    def __init__(self, codebook: Sequence[Sequence[int]], p: int):
        self.p = p
        self.codebook = [tuple(v % p for v in c) for c in codebook]

    def __call__(self, z: tuple) -> tuple:
        same = [c for c in self.codebook if len(c) == len(z)]
        if not same:
            raise BCHDecodeFailure("no codeword of this length")
        return min(same, key=lambda c: (sum(a != b for a, b in zip(c, z)), c))


def membership_nonsys(x: str, spec: BlockCodeSpec) -> bool:
    return spec.contains(x)


def decode_nonsys_trace(y: str, spec: BlockCodeSpec, inner: Callable | None = None) -> dict:
    """Decode and return every intermediate value of the procedure."""
    inner = inner or spec.bch_decoder
    p = spec.p
    u = phi(y)
    z1 = tuple(v % p for v in u)
    z_star = tuple(inner(z1))
    eps_prime = tuple((a - b) % p for a, b in zip(z1, z_star))
    eps = unwrap(eps_prime, p, spec.up)
    fixed = [a - b for a, b in zip(u, eps)]
    if min(fixed) < 0:
        raise DecodeError("correction produced a negative gap")
    x = phi_inverse(fixed)
    return {"y": y, "p": p, "z_prime": z1, "z_star": z_star,
            "eps_prime": eps_prime, "eps": eps, "phi_x": tuple(fixed), "x": x}


def decode_nonsys(y: str, spec: BlockCodeSpec, inner: Callable | None = None) -> str:
    x = decode_nonsys_trace(y, spec, inner)["x"]
    if len(x) != spec.n:
        raise DecodeError(f"decoded length {len(x)} != {spec.n}")
    return x


def worked_example() -> dict:
    """Worked trace: ``0100101001`` read back as ``0110110``.

    A length-5 linear code of distance 9 only holds the zero word, so the
    trace uses a nearest-codeword decoder over the single transmitted
    gap vector instead of a BCH decoder.
    """
    spec = BlockCodeSpec(10, 2, 2, 1)
    x = "0100101001"
    inner = CodebookInnerDecoder([phi(x)], spec.p)
    return decode_nonsys_trace("0110110", spec, inner)


def size_lower_bound(n: int, t_b: int, ell: int, s: int, p: int | None = None):
    """``2^n / (p (n+1)^ceil(2(t_b+2s)(1-1/p)))`` as an exact fraction."""
    from fractions import Fraction

    p = p or block_prime(t_b, ell, s)
    expo = math.ceil(2 * (t_b + 2 * s) * (p - 1) / p)
    return Fraction(2 ** n, p * (n + 1) ** expo)


# -- binary plumbing

def _balanced_length(k: int) -> int:
    return k + math.ceil(math.log2(k)) + 1


@lru_cache(maxsize=None)
def _count(length: int, zeros: int) -> int:
    return math.comb(length, zeros) if 0 <= zeros <= length else 0


def balance_encode(x: str) -> str:
    """``1`` followed by the rank-``int(x)`` string with a fixed 0-count.

    Output length ``k + ceil(log2 k) + 1``; the tail has ``ceil((n-1)/2)``
    zeros, listed in lexicographic order.
    """
    k = len(x)
    if k < 3:
        raise CapacityExceeded(f"message length {k} is too short to balance")
    n = _balanced_length(k)
    L, zeros = n - 1, math.ceil((n - 1) / 2)
    if _count(L, zeros) < 2 ** k:
        raise CapacityExceeded(f"not enough balanced words for k={k}")
    rank = int(x, 2)
    out = []
    z = zeros
    for i in range(L):
        rest = L - i - 1
        c0 = _count(rest, z - 1) if z > 0 else 0
        if rank < c0:
            out.append("0")
            z -= 1
        else:
            rank -= c0
            out.append("1")
    return "1" + "".join(out)


def balance_decode(y: str, k: int) -> str:
    n = _balanced_length(k)
    if len(y) != n or y[0] != "1":
        raise DecodeError("not a balanced block")
    tail = y[1:]
    L, zeros = n - 1, math.ceil((n - 1) / 2)
    if tail.count("0") != zeros:
        raise DecodeError("balanced block has the wrong weight")
    rank, z = 0, zeros
    for i, c in enumerate(tail):
        rest = L - i - 1
        if c == "0":
            z -= 1
        else:
            rank += _count(rest, z - 1) if z > 0 else 0
    if rank >= 2 ** k:
        raise DecodeError("balanced block rank out of range")
    return format(rank, f"0{k}b")


def symbol_bits(p: int) -> int:
    return max(1, math.ceil(math.log2(p)))


def binary_map(u: Sequence[int], p: int) -> str:
    w = symbol_bits(p)
    return "".join(format(v, f"0{w}b") for v in u)


def binary_unmap(bits: str, p: int) -> tuple[int, ...]:
    w = symbol_bits(p)
    if len(bits) % w:
        raise DecodeError("bit length is not a multiple of the symbol width")
    out = tuple(int(bits[i:i + w], 2) for i in range(0, len(bits), w))
    if any(v >= p for v in out):
        raise DecodeError("symbol outside the field")
    return out


def repeat_bits(x: str, R: int) -> str:
    return "".join(c * R for c in x)


# -- protector

class Protector(Protocol):
    def protect(self, h: str) -> str: ...

    def recover(self, region: str, digest: str) -> str: ...


class IdentityProtector:
    """Digest is an exact copy, so recovery ignores the damaged region."""

    def protect(self, h: str) -> str:
        return h

    def recover(self, region: str, digest: str) -> str:
        return digest

    def digest_length(self, n: int) -> int:
        return n


# -- systematic layout

@dataclass(frozen=True)
class SystematicLayout:
    k: int
    t_b: int
    ell: int
    s: int
    p: int
    m: int
    d: int
    parity: int
    n1_sym: int
    n1_bits: int
    n1: int
    n2_digest: int
    n2_bal: int
    R: int
    n2: int
    N: int

    @property
    def bch(self) -> BchSpec:
        return BchSpec(self.p, self.k + 1 + self.parity, self.d, self.m)

    @property
    def ones_h1(self) -> int:
        return 3 + (self.n1 - 3) // 2

    @property
    def ones_h2(self) -> int:
        return self.R * (1 + (self.n2_bal - 1) // 2)

    @property
    def up(self) -> int:
        return max(2, self.s)

    def formula_n1_sym(self) -> int:
        return formula_parity(self.d, self.p, self.m) + 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def repetition_factor(t_b: int, ell: int, s: int) -> int:
    """Copies per bit in ``h2``; rounding gaps needs ``R > 2(t_b*ell + s)``."""
    return max(2 * t_b * ell + 3, 2 * (t_b * ell + s) + 1)


def layout_for(k: int, t_b: int, ell: int, s: int, prot: Protector | None = None) -> SystematicLayout:
    prot = prot or IdentityProtector()
    p = block_prime(t_b, ell, s)
    d = design_distance(t_b, s)
    m = 1
    while True:
        deg = len(generator_polynomial(p, m, d)) - 1
        if p ** m - 1 >= k + 1 + deg:
            break
        m += 1
    n1_sym = deg + 1
    n1_bits = n1_sym * symbol_bits(p)
    n1 = n1_bits + math.ceil(math.log2(n1_bits)) + 3
    n2_digest = prot.digest_length(n1) if hasattr(prot, "digest_length") else len(prot.protect("1" * n1))
    n2_bal = _balanced_length(n2_digest)
    R = repetition_factor(t_b, ell, s)
    n2 = R * n2_bal
    return SystematicLayout(k, t_b, ell, s, p, m, d, deg, n1_sym, n1_bits, n1,
                            n2_digest, n2_bal, R, n2, k + n1 + n2)


def _c_bar(c: str, layout: SystematicLayout) -> tuple[int, ...]:
    z = [v % layout.p for v in phi(c)]
    return tuple(z + [0] * (layout.k + 1 - len(z)))


def encode_systematic(c: str, layout: SystematicLayout, prot: Protector | None = None) -> str:
    prot = prot or IdentityProtector()
    if len(c) != layout.k:
        raise ValueError(f"message length {len(c)} != {layout.k}")
    g = layout.bch.parity(_c_bar(c, layout)) + (0,)
    h1 = "11" + balance_encode(binary_map(g, layout.p))
    h2 = repeat_bits(balance_encode(prot.protect(h1)), layout.R)
    out = c + h1 + h2
    assert len(out) == layout.N
    return out


def _nth_one_from_end(d: str, count: int) -> int:
    seen = 0
    for i in range(len(d) - 1, -1, -1):
        if d[i] == "1":
            seen += 1
            if seen == count:
                return i
    raise MarkerNotFound(f"fewer than {count} ones in the received word")


def _derepeat(region: str, R: int) -> str:
    gaps = phi(region)
    if gaps[0] != 0:
        raise MarkerNotFound("repetition region does not start with a 1")
    rounded = [0] + [R * round(g / R) for g in gaps[1:]]
    clean = phi_inverse(rounded)
    if len(clean) % R:
        raise DecodeError("repetition region has a ragged length")
    blocks = [clean[i:i + R] for i in range(0, len(clean), R)]
    if any(b != b[0] * R for b in blocks):
        raise DecodeError("repetition groups disagree")
    return "".join(b[0] for b in blocks)


def decode_systematic(d: str, layout: SystematicLayout, prot: Protector | None = None) -> str:
    prot = prot or IdentityProtector()
    w1, w2 = layout.ones_h1, layout.ones_h2
    i_r2 = _nth_one_from_end(d, w2)
    i_r1 = _nth_one_from_end(d, w1 + w2)
    digest_bal = _derepeat(d[i_r2:], layout.R)
    digest = balance_decode(digest_bal, layout.n2_digest)
    h1 = prot.recover(d[i_r1:i_r2], digest)
    if len(h1) != layout.n1 or h1[:2] != "11":
        raise DecodeError("recovered parity block is malformed")
    g = binary_unmap(balance_decode(h1[2:], layout.n1_bits), layout.p)
    parity = g[:layout.parity]

    region = d[:i_r1]
    u = phi(region)
    rc = len(u)
    if rc > layout.k + 1:
        raise DecodeError("message region has too many ones")
    z1 = tuple(v % layout.p for v in u) + (0,) * (layout.k + 1 - rc)
    z_star = layout.bch.decode(z1 + parity)[:layout.k + 1]
    if any(z_star[rc:]):
        raise DecodeError("correction touched the zero padding")
    eps = unwrap([(a - b) % layout.p for a, b in zip(z1[:rc], z_star[:rc])], layout.p, layout.up)
    fixed = [a - b for a, b in zip(u, eps)]
    if min(fixed) < 0:
        raise DecodeError("correction produced a negative gap")
    c = phi_inverse(fixed)
    if len(c) != layout.k:
        raise DecodeError(f"decoded message has length {len(c)} != {layout.k}")
    return c
