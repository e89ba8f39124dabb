"""Codewords of C_t and their weight distributions.

C_t = { c(a, b) = (Tr(a pi^(ti) + b (-pi^t)^i))_{i=0}^{n-1} : a, b in F_{p^m} },
n = p^m - 1. Weights are computed two ways: by scanning the codeword
(``weight_direct``) and from the exponential sum T(a, b) (``weight_fast``),
wt = p^m - p^(m-1) - T / (2p).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateCode, InadmissibleT, NonRationalSum, TooLarge
from .expsums import delta_indices, t_ab, t_distribution
from .gf import FieldCtx, FieldElem
from .structure import CodeSpec, admissibility_witness, make_spec, match_exponent

DIRECT_WORK_LIMIT = 2**34  # p^(2m) * n symbol evaluations
DELTA_FIELD_LIMIT = 3**6  # p^m for the per-pair Delta route
METHODS = ("direct", "fast", "auto")


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[int, ...]
    a: FieldElem
    b: FieldElem

    @property
    def weight(self) -> int:
        return sum(1 for c in self.symbols if c)


@dataclass(frozen=True)
class WeightDistribution:
    """A_w for every weight w that occurs, counted over all (a, b)."""

    entries: dict[int, int]
    n: int
    p: int

    def items(self):
        return sorted(self.entries.items())

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def dimension(self) -> int:
        d = round(math.log(self.total, self.p))
        assert self.p**d == self.total, "frequency total is not a power of p"
        return d


def _require_admissible(ctx: FieldCtx, t: int) -> int:
    t %= ctx.n
    w = admissibility_witness(ctx.p, ctx.m, t)
    if w is not None:
        raise InadmissibleT(t, w)
    return t


@lru_cache(maxsize=32)
def position_tables(ctx: FieldCtx, t: int):
    """Index arrays u_i = pi^(ti) and v_i = (-pi^t)^i for i < n."""
    i = np.arange(ctx.n, dtype=np.int64)
    u = ctx.exp[(i * (t % ctx.n)) % ctx.n]
    v = np.where(i % 2 == 1, ctx.vneg(u), u)
    u.setflags(write=False)
    v.setflags(write=False)
    return u, v


def _symbols(ctx, t, a: int, b: int) -> np.ndarray:
    u, v = position_tables(ctx, t)
    return (ctx.vtrace(ctx.vmul(a, u)) + ctx.vtrace(ctx.vmul(b, v))) % ctx.p


def codeword(ctx: FieldCtx, t: int, a: FieldElem, b: FieldElem) -> Codeword:
    t = _require_admissible(ctx, t)
    syms = _symbols(ctx, t, ctx.index(a), ctx.index(b))
    return Codeword(tuple(int(s) for s in syms), a, b)


def weight_direct(ctx: FieldCtx, t: int, a: FieldElem, b: FieldElem) -> int:
    """Hamming weight by scanning the codeword."""
    t = _require_admissible(ctx, t)
    return int(np.count_nonzero(_symbols(ctx, t, ctx.index(a), ctx.index(b))))


def _weight_from_sum(ctx: FieldCtx, total):
    """p^m - p^(m-1) - total / (2p), with the division checked to be exact."""
    two_p = 2 * ctx.p
    if np.any(np.asarray(total) % two_p):
        raise ArithmeticError(f"exponential sum not divisible by 2p={two_p}")
    return ctx.q - ctx.q // ctx.p - np.asarray(total) // two_p


def weight_fast(ctx: FieldCtx, spec: CodeSpec, a: FieldElem, b: FieldElem) -> int:
    """Hamming weight of c(a, b) in C_t from T(a, b).

    T is defined for the representative exponent e = (p^k+1)/2. For
    t = e p^tau mod (p^m-1)/2 the weight of c_t(a, b) equals that of
    c_e(a^(p^(m-tau)), b^(p^(m-tau))), so the pair is pulled back first.
    """
    j = (ctx.m - spec.tau) % ctx.m
    a2 = ctx.elem(ctx.vfrob(ctx.index(a), j))
    b2 = ctx.elem(ctx.vfrob(ctx.index(b), j))
    total = t_ab(ctx, spec, a2, b2).as_int()
    if total is None:
        raise NonRationalSum("T(a, b) is not a rational integer")
    return int(_weight_from_sum(ctx, total))


# ---------------------------------------------------------------------------
# distributions

def _chunks(q, size):
    return [(lo, min(lo + size, q)) for lo in range(0, q, size)]


def _run(jobs, fn, workers):
    if workers <= 1 or len(jobs) == 1:
        parts = [fn(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, jobs))
    return sum(parts[1:], parts[0])


def _hist_to_dist(ctx, hist) -> WeightDistribution:
    nz = np.nonzero(hist)[0]
    return WeightDistribution({int(w): int(hist[w]) for w in nz}, ctx.n, ctx.p)


def _direct_distribution(ctx: FieldCtx, t: int, workers: int) -> WeightDistribution:
    u, v = position_tables(ctx, t)
    idx = ctx.all_indices()
    dtype = np.uint8 if ctx.p < 256 else np.int64
    TA = ctx.vtrace(ctx.vmul(idx[:, None], u[None, :])).astype(dtype)
    TB = ctx.vtrace(ctx.vmul(idx[:, None], v[None, :])).astype(dtype)
    negTA = ((ctx.p - TA.astype(np.int64)) % ctx.p).astype(dtype)
    rows = max(1, 2**24 // (ctx.q * ctx.n))

    # c_i(a, b) = 0 iff TB[b, i] == -TA[a, i]
    def job(span):
        lo, hi = span
        zeros = np.count_nonzero(TB[None, :, :] == negTA[lo:hi, None, :], axis=2)
        return np.bincount((ctx.n - zeros).ravel(), minlength=ctx.n + 1)

    return _hist_to_dist(ctx, _run(_chunks(ctx.q, rows), job, workers))


def _delta_distribution(ctx: FieldCtx, t: int, workers: int) -> WeightDistribution:
    idx = ctx.all_indices()
    rows = max(1, 2**20 // ctx.q)

    def job(span):
        lo, hi = span
        a = np.arange(lo, hi, dtype=np.int64)[:, None]
        w = _weight_from_sum(ctx, delta_indices(ctx, t, a, idx[None, :]))
        return np.bincount(w.ravel(), minlength=ctx.n + 1)

    return _hist_to_dist(ctx, _run(_chunks(ctx.q, rows), job, workers))


def _convolution_distribution(ctx: FieldCtx, spec: CodeSpec) -> WeightDistribution:
    out = {}
    for value, freq in t_distribution(ctx, spec).as_int_dict().items():
        w = int(_weight_from_sum(ctx, value))
        out[w] = out.get(w, 0) + freq
    return WeightDistribution(out, ctx.n, ctx.p)


def direct_allowed(ctx: FieldCtx) -> bool:
    return ctx.q**2 * ctx.n <= DIRECT_WORK_LIMIT


def weight_distribution(ctx: FieldCtx, t: int, method: str = "auto", workers: int | None = None):
    """Weight distribution of C_t over all (a, b) in F_{p^m}^2.

    ``direct`` counts nonzero symbols of every codeword. ``fast`` uses the
    T(a, b) convolution for matched t with even m/gcd(m,k), and otherwise the
    per-pair Delta_t sums. ``auto`` picks fast when the convolution applies,
    else direct, else per-pair Delta.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    workers = workers or os.cpu_count() or 1
    t = _require_admissible(ctx, t)
    match = match_exponent(ctx.p, ctx.m, t)
    spec = make_spec(ctx.p, ctx.m, t) if match else None
    convolution = spec is not None and spec.case_tag.s_even

    if method == "auto":
        if convolution:
            method = "fast"
        elif direct_allowed(ctx):
            method = "direct"
        else:
            method = "fast"

    if method == "direct":
        if not direct_allowed(ctx):
            raise TooLarge(f"direct enumeration of {ctx.q}^2 words of length {ctx.n} exceeds 2^34")
        return _direct_distribution(ctx, t, workers)
    if convolution:
        return _convolution_distribution(ctx, spec)
    if ctx.q > DELTA_FIELD_LIMIT:
        raise TooLarge(f"per-pair Delta enumeration needs p^m <= {DELTA_FIELD_LIMIT}")
    return _delta_distribution(ctx, t, workers)


def distinct_codeword_count(ctx: FieldCtx, t: int) -> int:
    """Number of distinct words among all c(a, b); p^(2m) means (a, b) -> c is injective."""
    t = _require_admissible(ctx, t)
    u, v = position_tables(ctx, t)
    idx = ctx.all_indices()
    TA = ctx.vtrace(ctx.vmul(idx[:, None], u[None, :]))
    TB = ctx.vtrace(ctx.vmul(idx[:, None], v[None, :]))
    words = ((TA[:, None, :] + TB[None, :, :]) % ctx.p).reshape(-1, ctx.n).astype(np.uint8)
    return int(np.unique(words, axis=0).shape[0])


def weight_enumerator(dist: WeightDistribution) -> str:
    terms = []
    for w, a in dist.items():
        terms.append(str(a) if w == 0 else f"{a}X^{w}")
    return "+".join(terms)


def minimum_distance(dist: WeightDistribution) -> int:
    nonzero = [w for w, a in dist.items() if w > 0 and a > 0]
    if not nonzero:
        raise DegenerateCode("code has no nonzero codeword")
    return min(nonzero)

