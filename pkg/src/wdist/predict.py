"""Closed-form weight distributions and the predicted-vs-computed comparator."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .codes import WeightDistribution, weight_distribution
from .errors import InvalidParameters
from .gf import FieldCtx, is_prime
from .structure import CaseTag, CodeSpec, admissibility_witness, case_tag, half_exponent, make_spec


@dataclass(frozen=True)
class CaseInfo:
    case_tag: CaseTag
    d: int
    s: int
    p_half: int | None = None  # p^(m/2)
    p_half_d: int | None = None  # p^(m/2 + d)


def _check_params(p, m, k):
    if not is_prime(p) or p == 2:
        raise InvalidParameters(f"p={p} must be an odd prime")
    if m < 1:
        raise InvalidParameters(f"m={m} must be >= 1")
    if k < 1:
        raise InvalidParameters(f"k={k} must be >= 1")


def classify(p: int, m: int, k: int) -> CaseInfo:
    _check_params(p, m, k)
    tag = case_tag(m, k)
    d = math.gcd(m, k)
    if m % 2 == 0:
        return CaseInfo(tag, d, m // d, p ** (m // 2), p ** (m // 2 + d))
    return CaseInfo(tag, d, m // d)


def _table_rows(p, m, k, info: CaseInfo):
    q = p**m
    h = (p - 1) // 2
    tag, d = info.case_tag, info.d
    if tag.s_even:
        N, rem = divmod(q - 1, p**d + 1)
        assert rem == 0
        sg = 1 if tag is CaseTag.EVEN_EQ else -1
        big = sg * p ** (m // 2 + d - 1)  # +-p^(m/2+d-1)
        small = sg * p ** (m // 2 - 1)  # +-p^(m/2-1)
        top = p ** (m - 1)
        return [
            (h * (top - big), 2 * N),
            (h * (top + small), 2 * p**d * N),
            (h * (2 * top - big + small), 2 * p**d * N**2),
            ((p - 1) * (top - big), N**2),
            ((p - 1) * (top + small), p ** (2 * d) * N**2),
        ]
    if tag is CaseTag.ODD_M:
        return [
            (h * p ** (m - 1), 2 * (q - 1)),
            ((p - 1) * p ** (m - 1), q * q - 2 * q + 1),
        ]
    assert m % 2 == 0, "the 1 <= v2(m) <= v2(k) case has even m"
    quarter, rem = divmod((q - 1) ** 2, 4)
    assert rem == 0
    top, small = p ** (m - 1), p ** (m // 2 - 1)
    return [
        ((p - 1) * top, 2 * quarter),
        ((p - 1) * (top + small), quarter),
        ((p - 1) * (top - small), quarter),
        (h * (top + small), q - 1),
        (h * (top - small), q - 1),
    ]


def predicted_distribution(p: int, m: int, k: int) -> WeightDistribution:
    """Weight distribution of C_t for any t matched to k, from the closed-form tables.

    Refuses k for which (p^k+1)/2 is not admissible, since the two zeros then
    coincide up to conjugacy and the tables do not describe a 2m-dimensional code.
    """
    info = classify(p, m, k)
    w = admissibility_witness(p, m, half_exponent(p, k))
    if w is not None:
        raise InvalidParameters(
            f"(p^k+1)/2 = {half_exponent(p, k)} is not admissible for p={p}, m={m} (i={w})"
        )
    entries = {0: 1}
    for weight, freq in _table_rows(p, m, k, info):
        entries[weight] = entries.get(weight, 0) + freq
    dist = WeightDistribution(entries, p**m - 1, p)
    check_moments(dist, p, m)
    return dist


def check_moments(dist: WeightDistribution, p: int, m: int) -> None:
    """Frequencies sum to p^(2m) and the first moment is n (p-1) p^(2m-1)."""
    n = p**m - 1
    if dist.total != p ** (2 * m):
        raise AssertionError(f"frequencies sum to {dist.total}, not {p}^{2 * m}")
    moment = sum(w * a for w, a in dist.entries.items())
    if moment != n * (p - 1) * p ** (2 * m - 1):
        raise AssertionError(f"first moment {moment} != n (p-1) p^(2m-1)")


@dataclass
class VerifyReport:
    spec: CodeSpec
    predicted: WeightDistribution
    computed: WeightDistribution
    method: str
    diff: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "FAIL" if self.diff else "PASS"


def compare(predicted: WeightDistribution, computed: WeightDistribution) -> list:
    """Rows [weight, predicted A_w, computed A_w] wherever the two disagree."""
    weights = sorted(set(predicted.entries) | set(computed.entries))
    return [
        [w, predicted.entries.get(w, 0), computed.entries.get(w, 0)]
        for w in weights
        if predicted.entries.get(w, 0) != computed.entries.get(w, 0)
    ]


def verify(ctx: FieldCtx, t: int, method: str = "auto", workers: int | None = None) -> VerifyReport:
    spec = make_spec(ctx.p, ctx.m, t)
    predicted = predicted_distribution(ctx.p, ctx.m, spec.k)
    computed = weight_distribution(ctx, spec.t, method=method, workers=workers)
    return VerifyReport(spec, predicted, computed, method, compare(predicted, computed))
