"""Arithmetic structure of the code parameters.

All exponents are canonicalised into Z_{p^m-1}. Because -1 = pi^((p^m-1)/2),
statements about field elements such as (pi^t)^(p^i) = -pi^t become
congruences between discrete logs and never touch a field table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import InadmissibleT, InvalidParameters, NoMatch, NonPositive
from .gf import FieldCtx, FieldElem, is_prime


class CaseTag(str, Enum):
    EVEN_EQ = "EVEN_EQ"  # v2(k) + 1 == v2(m)
    EVEN_LT = "EVEN_LT"  # v2(k) + 1 < v2(m)
    ODD_M = "ODD_M"  # v2(m) == 0
    ODD_S = "ODD_S"  # 1 <= v2(m) <= v2(k)

    @property
    def s_even(self) -> bool:
        return self in (CaseTag.EVEN_EQ, CaseTag.EVEN_LT)


def v2(j: int) -> int:
    if j < 1:
        raise NonPositive(f"v2 needs a positive integer, got {j}")
    return (j & -j).bit_length() - 1


def case_tag(m: int, k: int) -> CaseTag:
    vm, vk = v2(m), v2(k)
    if vk + 1 == vm:
        return CaseTag.EVEN_EQ
    if vk + 1 < vm:
        return CaseTag.EVEN_LT
    if vm == 0:
        return CaseTag.ODD_M
    return CaseTag.ODD_S


def gcd_pk_plus_1(p: int, k: int, m: int) -> int:
    """gcd(p^k + 1, p^m - 1) in closed form."""
    if v2(m) > v2(k):
        return p ** math.gcd(k, m) + 1
    return 2


def cyclotomic_coset(p: int, m: int, i: int) -> list[int]:
    n = p**m - 1
    if not 0 <= i < n:
        raise InvalidParameters(f"i={i} outside Z_{n}")
    return sorted({i * pow(p, j, n) % n for j in range(m)})


def minimal_polynomial(ctx: FieldCtx, beta: FieldElem) -> tuple[int, ...]:
    """Minimal polynomial of a nonzero beta over F_p, constant term first."""
    b = ctx.index(beta)
    if b == 0:
        raise InvalidParameters("minimal_polynomial needs a nonzero element")
    roots = []
    r = b
    while r not in roots:
        roots.append(r)
        r = int(ctx.vfrob(r))
    coeffs = np.array([1], dtype=np.int64)  # indices in F_{p^m}, constant first
    for r in roots:
        shifted = np.concatenate([[0], coeffs])
        scaled = np.concatenate([ctx.vmul(coeffs, r), [0]])
        coeffs = ctx.vsub(shifted, scaled)
    if np.any(coeffs >= ctx.p):
        raise AssertionError("minimal polynomial has coefficients outside F_p")
    return tuple(int(c) for c in coeffs)


def minimal_polynomial_of_power(ctx: FieldCtx, e: int, negate: bool = False):
    """Minimal polynomial of pi^e, or of -pi^e when ``negate``."""
    idx = int(ctx.exp[e % ctx.n])
    if negate:
        idx = int(ctx.vneg(idx))
    return minimal_polynomial(ctx, ctx.elem(idx))


class Admissibility(NamedTuple):
    ok: bool
    witness: int | None


def admissibility_witness(p: int, m: int, t: int):
    """First i in Z_m with t p^i = t + (p^m-1)/2 mod p^m-1, or None."""
    n = p**m - 1
    t %= n
    target = (t + n // 2) % n
    for i in range(m):
        if t * pow(p, i, n) % n == target:
            return i
    return None


def check_admissible(ctx: FieldCtx, t: int) -> Admissibility:
    w = admissibility_witness(ctx.p, ctx.m, t)
    return Admissibility(w is None, w)


def half_exponent(p: int, k: int) -> int:
    """(p^k + 1) / 2."""
    return (p**k + 1) // 2


def match_exponent(p: int, m: int, t: int):
    """Smallest (k, tau) with t = ((p^k+1)/2) p^tau mod (p^m-1)/2, or None.

    k only matters modulo m here, so k <= 2m is an exhaustive search.
    """
    half = (p**m - 1) // 2
    for k in range(1, 2 * m + 1):
        e = half_exponent(p, k)
        for tau in range(m):
            if (e * p**tau - t) % half == 0:
                return k, tau
    return None


def equivalent_exponents(p: int, m: int, t: int) -> frozenset[int]:
    """Orbit of t under e -> e p mod (p^m-1)/2 and e -> e + (p^m-1)/2, in Z_{p^m-1}."""
    n = p**m - 1
    half = n // 2
    out = set()
    for tau in range(m):
        r = t * p**tau % half
        out.add(r % n)
        out.add((r + half) % n)
    return frozenset(out)


@dataclass(frozen=True)
class CodeSpec:
    p: int
    m: int
    t: int
    k: int
    tau: int
    d: int
    s: int
    case_tag: CaseTag

    @property
    def n(self) -> int:
        return self.p**self.m - 1

    @property
    def e(self) -> int:
        """The representative exponent (p^k+1)/2 of the family."""
        return half_exponent(self.p, self.k)


def make_spec(p: int, m: int, t: int) -> CodeSpec:
    """Validate (p, m, t) and attach the matched (k, tau) and case."""
    if not is_prime(p) or p == 2:
        raise InvalidParameters(f"p={p} must be an odd prime")
    if m < 1:
        raise InvalidParameters(f"m={m} must be >= 1")
    n = p**m - 1
    t %= n
    w = admissibility_witness(p, m, t)
    if w is not None:
        raise InadmissibleT(t, w)
    match = match_exponent(p, m, t)
    if match is None:
        raise NoMatch(f"t={t} is not ((p^k+1)/2) p^tau mod {n // 2} for any k <= {2 * m}")
    k, tau = match
    d = math.gcd(m, k)
    tag = case_tag(m, k)
    assert ((m // d) % 2 == 0) == tag.s_even
    return CodeSpec(p=p, m=m, t=t, k=k, tau=tau, d=d, s=m // d, case_tag=tag)
