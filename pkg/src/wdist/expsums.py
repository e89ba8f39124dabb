"""Exact exponential sums over F_{p^m} and their value distributions.

Every sum here has the shape sum_x zeta^(Tr(alpha * x^e)). It is evaluated
by counting, for each residue r in F_p, how many x give Tr(alpha x^e) = r,
then reading the count vector as an element of Z[zeta_p]. The x = 0 term
always contributes zeta^0.

Summing over u in F_p^* as well maps the count vector c_r to sum_u c_r zeta^(ur)
("u-expansion"); those sums are Galois-stable and come out as rational
integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import CycInt, from_counts, gauss_sum
from .errors import (
    CaseNotCovered,
    IdentityViolation,
    LemmaViolation,
    NonRationalSum,
    PreconditionViolation,
)
from .gf import FieldCtx, FieldElem
from .structure import CaseTag, CodeSpec, case_tag, half_exponent, v2


@dataclass(frozen=True)
class SumDistribution:
    """Multiset of exact sum values: value -> number of occurrences."""

    entries: dict
    total: int

    @classmethod
    def from_values(cls, values) -> SumDistribution:
        c = Counter(values)
        return cls(dict(c), sum(c.values()))

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0].sort_key())

    def as_int_dict(self) -> dict[int, int]:
        out = {}
        for v, c in self.entries.items():
            r = v.as_int()
            if r is None:
                raise NonRationalSum(f"{v} is not a rational integer")
            out[r] = c
        return out

    def __eq__(self, other):
        if not isinstance(other, SumDistribution):
            return NotImplemented
        return self.total == other.total and self.entries == other.entries


# ---------------------------------------------------------------------------
# trace histograms

def _check_k(k):
    if k < 1:
        raise PreconditionViolation(f"k={k} must be >= 1")


def trace_histogram(ctx: FieldCtx, alpha: int, e: int) -> np.ndarray:
    """counts[r] = #{x in F : Tr(alpha x^e) = r}, by scanning every x."""
    p, n = ctx.p, ctx.n
    counts = np.zeros(p, dtype=np.int64)
    if alpha == 0:
        counts[0] = ctx.q
        return counts
    logs = (int(ctx.log[alpha]) + np.arange(n, dtype=np.int64) * (e % n)) % n
    counts += np.bincount(ctx.trace_table[ctx.exp[logs]], minlength=p)
    counts[0] += 1
    return counts


def histogram_table(ctx: FieldCtx, e: int) -> np.ndarray:
    """Trace histograms of alpha x^e for every alpha, shape (q, p).

    x^e runs over the subgroup generated by pi^g, g = gcd(e, n), hitting each
    element g times, so the histogram of alpha depends only on log(alpha) mod g.
    """
    p, n = ctx.p, ctx.n
    g = math.gcd(e % n, n) or n
    rows = np.zeros((g, p), dtype=np.int64)
    steps = np.arange(0, n, g, dtype=np.int64)
    for r in range(g):
        rows[r] = g * np.bincount(ctx.trace_table[ctx.exp[(r + steps) % n]], minlength=p)
    rows[:, 0] += 1
    table = np.empty((ctx.q, p), dtype=np.int64)
    table[0] = 0
    table[0, 0] = ctx.q
    table[1:] = rows[ctx.log[1:] % g]
    return table


def u_expand(counts) -> np.ndarray:
    """Counts of u*r over u in F_p^*, i.e. the histogram behind sum_u sum_x zeta^(u Tr)."""
    counts = np.asarray(counts, dtype=np.int64)
    p = counts.shape[-1]
    out = np.zeros_like(counts)
    for u in range(1, p):
        out[..., (u * np.arange(p)) % p] += counts
    return out


def _cyc_rows(p, table) -> list[CycInt]:
    cache = {}
    out = []
    for row in map(tuple, table.tolist()):
        v = cache.get(row)
        if v is None:
            v = cache[row] = from_counts(p, row)
        out.append(v)
    return out


def _as_int_array(values: list[CycInt]) -> np.ndarray:
    ints = [v.as_int() for v in values]
    if any(r is None for r in ints):
        raise NonRationalSum("expected rational sums")
    return np.array(ints, dtype=np.int64)


# ---------------------------------------------------------------------------
# T_alpha and R_alpha

def t_alpha(ctx: FieldCtx, k: int, alpha: FieldElem) -> CycInt:
    """sum_x zeta^(Tr(alpha x^(p^k+1)))."""
    _check_k(k)
    return from_counts(ctx.p, trace_histogram(ctx, ctx.index(alpha), ctx.p**k + 1))


def r_alpha(ctx: FieldCtx, k: int, alpha: FieldElem) -> CycInt:
    """sum_{u != 0} sum_x zeta^(u Tr(alpha x^(p^k+1)))."""
    _check_k(k)
    h = trace_histogram(ctx, ctx.index(alpha), ctx.p**k + 1)
    return from_counts(ctx.p, u_expand(h))


@lru_cache(maxsize=32)
def t_alpha_table(ctx: FieldCtx, k: int) -> tuple[CycInt, ...]:
    _check_k(k)
    return tuple(_cyc_rows(ctx.p, histogram_table(ctx, ctx.p**k + 1)))


@lru_cache(maxsize=32)
def r_alpha_table(ctx: FieldCtx, k: int) -> tuple[CycInt, ...]:
    _check_k(k)
    return tuple(_cyc_rows(ctx.p, u_expand(histogram_table(ctx, ctx.p**k + 1))))


@lru_cache(maxsize=32)
def r_alpha_ints(ctx: FieldCtx, k: int) -> np.ndarray:
    arr = _as_int_array(list(r_alpha_table(ctx, k)))
    arr.setflags(write=False)
    return arr


def lemma_t_alpha_values(p: int, m: int, k: int) -> dict[int, int]:
    """Three-row value table of T_alpha over all alpha when m/gcd(m,k) is even."""
    tag = case_tag(m, k)
    if not tag.s_even:
        raise CaseNotCovered(f"(m, k) = ({m}, {k}) has odd m/gcd(m,k)")
    d = math.gcd(m, k)
    N = (p**m - 1) // (p**d + 1)
    A, B = p ** (m // 2 + d), p ** (m // 2)
    sign = 1 if tag is CaseTag.EVEN_EQ else -1
    out = Counter()
    out[p**m] += 1
    out[sign * A] += N
    out[-sign * B] += p**d * N
    return dict(out)


def lemma_r_alpha_values(p: int, m: int, k: int) -> dict[int, int]:
    return {(p - 1) * v: c for v, c in lemma_t_alpha_values(p, m, k).items()}


@dataclass(frozen=True)
class LemmaReport:
    name: str
    case: str
    observed: SumDistribution
    expected: dict | None
    checked: int
    ok: bool


def check_t_alpha_lemma(ctx: FieldCtx, k: int) -> LemmaReport:
    """Check the value distribution of T_alpha over every alpha.

    Odd m/gcd(m,k): T_alpha = eta(alpha) (-1)^(m-1) G^m exactly, G the Gauss
    sum of F_p (this carries both the p^(m/2) and the sqrt(-1)^m factors).
    Even m/gcd(m,k): the multiset must equal :func:`lemma_t_alpha_values`.
    """
    table = t_alpha_table(ctx, k)
    observed = SumDistribution.from_values(table)
    tag = case_tag(ctx.m, k)
    if tag.s_even:
        expected = lemma_t_alpha_values(ctx.p, ctx.m, k)
        got = {v.as_int(): c for v, c in observed.entries.items()}
        if got != expected:
            bad = next((a for a, v in enumerate(table) if v.as_int() not in expected), None)
            raise LemmaViolation(f"T_alpha distribution {got} != {expected}", alpha=bad)
        return LemmaReport("t_alpha", tag.value, observed, expected, ctx.q, True)

    g_m = gauss_sum(ctx.p) ** ctx.m * (-1) ** (ctx.m - 1)
    eta = ctx.vpow(ctx.all_indices(), ctx.n // 2)
    for a in range(1, ctx.q):
        sign = 1 if eta[a] == 1 else -1
        if table[a] != g_m * sign:
            raise LemmaViolation(f"T_alpha({a}) = {table[a]} != {sign} * {g_m}", alpha=a)
    if table[0] != ctx.q:
        raise LemmaViolation("T_0 != p^m", alpha=0)
    return LemmaReport("t_alpha", tag.value, observed, None, ctx.q, True)


def _require_even_s(ctx, k):
    _check_k(k)
    if not v2(ctx.m) > v2(k):
        raise PreconditionViolation(f"needs v2(m) > v2(k), got m={ctx.m}, k={k}")


def check_r_identity(ctx: FieldCtx, k: int) -> LemmaReport:
    """R_alpha = (p-1) T_alpha for every alpha, together with T_alpha = T_{-alpha}."""
    _require_even_s(ctx, k)
    t_tab, r_tab = t_alpha_table(ctx, k), r_alpha_table(ctx, k)
    neg = ctx.vneg(ctx.all_indices())
    for a in range(ctx.q):
        if t_tab[a] != t_tab[int(neg[a])]:
            raise IdentityViolation(f"T_alpha != T_-alpha at {a}", alpha=a)
        if r_tab[a] != t_tab[a] * (ctx.p - 1):
            raise IdentityViolation(f"R_alpha != (p-1) T_alpha at {a}", alpha=a)
    observed = SumDistribution.from_values(r_tab)
    return LemmaReport("r_identity", case_tag(ctx.m, k).value, observed, None, ctx.q, True)


def r_distribution(ctx: FieldCtx, k: int) -> SumDistribution:
    _require_even_s(ctx, k)
    return SumDistribution.from_values(r_alpha_table(ctx, k))


# ---------------------------------------------------------------------------
# T(a, b)

def _family_k(spec_or_k):
    return spec_or_k.k if isinstance(spec_or_k, CodeSpec) else int(spec_or_k)


def t_ab_indices(ctx: FieldCtx, k: int, a, b) -> np.ndarray:
    """Vectorised T(a, b) = R_{a+b} + R_{(a-b) pi^e}, e = (p^k+1)/2, on index arrays."""
    R = r_alpha_ints(ctx, k)
    shift = int(ctx.exp[half_exponent(ctx.p, k) % ctx.n])
    return R[ctx.vadd(a, b)] + R[ctx.vmul(ctx.vsub(a, b), shift)]


def t_ab(ctx: FieldCtx, spec: CodeSpec, a: FieldElem, b: FieldElem) -> CycInt:
    k = _family_k(spec)
    R = r_alpha_table(ctx, k)
    ia, ib = ctx.index(a), ctx.index(b)
    shift = int(ctx.exp[half_exponent(ctx.p, k) % ctx.n])
    return R[int(ctx.vadd(ia, ib))] + R[int(ctx.vmul(ctx.vsub(ia, ib), shift))]


def lemma_t_ab_values(p: int, m: int, k: int) -> dict[int, int]:
    """The six-row value distribution of T(a, b) over all (a, b)."""
    tag = case_tag(m, k)
    if not tag.s_even:
        raise CaseNotCovered(f"(m, k) = ({m}, {k}) has odd m/gcd(m,k)")
    d = math.gcd(m, k)
    q = p**m
    N = (q - 1) // (p**d + 1)
    sign = 1 if tag is CaseTag.EVEN_EQ else -1
    A, B = sign * p ** (m // 2 + d), sign * p ** (m // 2)
    out = Counter()
    out[2 * (p - 1) * q] += 1
    out[(p - 1) * (q + A)] += 2 * N
    out[(p - 1) * (q - B)] += 2 * p**d * N
    out[(p - 1) * (A - B)] += 2 * p**d * N**2
    out[2 * (p - 1) * A] += N**2
    out[-2 * (p - 1) * B] += p ** (2 * d) * N**2
    return dict(out)


def t_distribution(ctx: FieldCtx, spec) -> SumDistribution:
    """Distribution of T(a, b) over F_{p^m}^2 as a self-convolution of R.

    (a, b) -> (a + b, (a - b) pi^e) is a bijection of F_{p^m}^2, so the pair
    (R_{a+b}, R_{(a-b)pi^e}) runs over all pairs of R values independently.
    """
    k = _family_k(spec)
    if not case_tag(ctx.m, k).s_even:
        raise CaseNotCovered("T(a, b) convolution needs even m/gcd(m,k)")
    r = r_distribution(ctx, k)
    out = Counter()
    for v1, c1 in r.entries.items():
        for v2_, c2 in r.entries.items():
            out[v1 + v2_] += c1 * c2
    return SumDistribution(dict(out), r.total**2)


# ---------------------------------------------------------------------------
# general exponent t

def delta_general(ctx: FieldCtx, t: int, a: FieldElem, b: FieldElem) -> CycInt:
    """Delta_t(a, b) = sum_{u != 0} sum_x zeta^(u Tr((a+b) x^2t)) + zeta^(u Tr((a-b) pi^t x^2t)).

    Direct O(p^m) evaluation.
    """
    ia, ib = ctx.index(a), ctx.index(b)
    first = int(ctx.vadd(ia, ib))
    second = int(ctx.vmul(ctx.vsub(ia, ib), int(ctx.exp[t % ctx.n])))
    h1 = trace_histogram(ctx, first, 2 * t)
    h2 = trace_histogram(ctx, second, 2 * t)
    return from_counts(ctx.p, u_expand(h1)) + from_counts(ctx.p, u_expand(h2))


@lru_cache(maxsize=32)
def delta_sum_ints(ctx: FieldCtx, t: int) -> np.ndarray:
    """S[alpha] = sum_{u != 0} sum_x zeta^(u Tr(alpha x^2t)) for every alpha, as ints."""
    arr = _as_int_array(_cyc_rows(ctx.p, u_expand(histogram_table(ctx, 2 * t))))
    arr.setflags(write=False)
    return arr


def delta_indices(ctx: FieldCtx, t: int, a, b) -> np.ndarray:
    """Vectorised Delta_t on index arrays via the one-variable sums S."""
    S = delta_sum_ints(ctx, t)
    shift = int(ctx.exp[t % ctx.n])
    return S[ctx.vadd(a, b)] + S[ctx.vmul(ctx.vsub(a, b), shift)]


def delta_distribution(ctx: FieldCtx, t: int) -> SumDistribution:
    """Multiset of Delta_t(a, b) over all (a, b)."""
    idx = ctx.all_indices()
    counts = Counter()
    for a in range(ctx.q):
        vals, freq = np.unique(delta_indices(ctx, t, a, idx), return_counts=True)
        for v, c in zip(vals.tolist(), freq.tolist()):
            counts[v] += c
    return SumDistribution({CycInt.from_int(ctx.p, v): c for v, c in counts.items()}, ctx.q**2)


def power_image(ctx: FieldCtx, e: int) -> np.ndarray:
    """Multiplicity of each element in {x^e : x in F_{p^m}}, indexed by element."""
    return np.bincount(ctx.vpow(ctx.all_indices(), e), minlength=ctx.q)


def check_c1_equivalence(ctx: FieldCtx, k: int) -> bool:
    """Delta_1 and Delta_e (e = (p^k+1)/2) have the same multiset when m/gcd(m,k) is odd.

    Also asserts that x^(p^k+1) and x^2 have the same image multiset, the fact
    the equivalence rests on.
    """
    _check_k(k)
    if case_tag(ctx.m, k).s_even:
        raise PreconditionViolation(f"needs odd m/gcd(m,k), got m={ctx.m}, k={k}")
    if not np.array_equal(power_image(ctx, ctx.p**k + 1), power_image(ctx, 2)):
        raise IdentityViolation("x^(p^k+1) and x^2 have different images")
    return delta_distribution(ctx, 1) == delta_distribution(ctx, half_exponent(ctx.p, k))
