"""Acceptance suite: eleven end-to-end criteria, each reported as one PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import field  # noqa: E402

from wdist import gf  # noqa: E402
from wdist.cli import config_from_args, run  # noqa: E402
from wdist.codes import weight_direct, weight_distribution, weight_fast  # noqa: E402
from wdist.cyclo import CycInt, gauss_sum  # noqa: E402
from wdist.expsums import (  # noqa: E402
    check_c1_equivalence,
    check_r_identity,
    check_t_alpha_lemma,
    lemma_r_alpha_values,
    r_distribution,
    t_distribution,
)
from wdist.predict import predicted_distribution  # noqa: E402
from wdist.errors import InvalidParameters  # noqa: E402
from wdist.structure import (  # noqa: E402
    admissibility_witness,
    equivalent_exponents,
    gcd_pk_plus_1,
    half_exponent,
    make_spec,
)

RESULTS: dict[int, str] = {}

DIST_3_6_2 = {0: 1, 216: 364, 252: 1092, 432: 33124, 468: 198744, 504: 298116}
DIST_3_4_2 = {0: 1, 24: 120, 36: 40, 48: 3600, 60: 2400, 72: 400}
DIST_5_3_3 = {0: 1, 50: 248, 100: 15376}
DIST_3_6_5 = {0: 1, 234: 728, 252: 728, 468: 132496, 486: 264992, 504: 132496}


def _timed(fn, *args, **kw):
    start = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - start


def criterion_1():
    out, code = run(config_from_args("verify --p 3 --m 6 --t 2".split()))
    assert code == 0 and out.startswith("PASS"), out
    dist, secs = _timed(weight_distribution, field(3, 6), 2, method="fast", workers=1)
    assert dist.entries == DIST_3_6_2
    assert secs < 5, f"fast path took {secs:.2f}s"
    return f"fast path {secs:.3f}s"


def criterion_2():
    ctx = field(3, 4)
    direct, secs = _timed(weight_distribution, ctx, 2, method="direct")
    fast = weight_distribution(ctx, 2, method="fast")
    assert direct.entries == DIST_3_4_2 and fast.entries == DIST_3_4_2
    assert secs < 60
    return f"direct {secs:.3f}s"


def criterion_3():
    ctx = field(5, 3)
    fast, secs = _timed(weight_distribution, ctx, 3, method="fast", workers=1)
    assert fast.entries == DIST_5_3_3
    assert secs < 120
    assert weight_distribution(ctx, 3, method="direct").entries == DIST_5_3_3
    return f"per-pair sum route {secs:.3f}s"


def criterion_4():
    ctx = field(3, 6)
    assert weight_distribution(ctx, 5, method="fast").entries == DIST_3_6_5
    assert weight_distribution(ctx, 5, method="direct").entries == DIST_3_6_5
    out, code = run(config_from_args("verify --p 3 --m 6 --t 5".split()))
    assert code == 0, out
    return "fast and direct"


def criterion_5():
    ctx = field(3, 4)
    spec = make_spec(3, 4, 1)
    bad = 0
    for a in range(ctx.q):
        A = ctx.elem(a)
        for b in range(ctx.q):
            B = ctx.elem(b)
            bad += weight_direct(ctx, 1, A, B) != weight_fast(ctx, spec, A, B)
    assert bad == 0, f"{bad} mismatches"
    return "6561 pairs, 0 mismatches"


def criterion_6():
    for pm in [(3, 6), (3, 4), (5, 3), (3, 5)]:
        assert check_t_alpha_lemma(field(*pm), 1).ok
    for pm in [(3, 6), (3, 4)]:
        ctx = field(*pm)
        assert check_r_identity(ctx, 1).checked == ctx.q
    assert r_distribution(field(3, 6), 1).as_int_dict() == {1458: 1, 162: 182, -54: 546}
    assert r_distribution(field(3, 4), 1).as_int_dict() == {162: 1, 18: 60, -54: 20}
    assert r_distribution(field(3, 4), 1).as_int_dict() == lemma_r_alpha_values(3, 4, 1)
    return "4 T_alpha checks, 2 R identities"


def criterion_7():
    dist = t_distribution(field(3, 6), 1)
    expected = {2916: 1, 1620: 364, 1404: 1092, 108: 198744, 324: 33124, -108: 298116}
    assert dist.as_int_dict() == expected
    assert dist.total == 531441
    return "six rows"


def criterion_8():
    start = time.perf_counter()
    n_ok = 0
    for p in (3, 5, 7):
        for m in range(1, 9):
            for k in range(1, 9):
                try:
                    dist = predicted_distribution(p, m, k)
                except InvalidParameters:
                    # only k whose half exponent is inadmissible is refused
                    assert admissibility_witness(p, m, half_exponent(p, k)) is not None
                    continue
                assert dist.total == p ** (2 * m)
                assert sum(w * a for w, a in dist.items()) == (p**m - 1) * (p - 1) * p ** (2 * m - 1)
                n_ok += 1
    secs = time.perf_counter() - start
    assert secs < 1
    return f"{n_ok} tables in {secs:.3f}s"


def criterion_9():
    ctx = field(3, 4)
    orbit = sorted(equivalent_exponents(3, 4, 2))
    dists = {tuple(weight_distribution(ctx, t, method="direct").items()) for t in orbit}
    assert len(dists) == 1 and dict(dists.pop()) == DIST_3_4_2
    return f"orbit {orbit}"


def criterion_10():
    checked = []
    for p, m, k in [(5, 3, 1), (3, 3, 1), (3, 3, 3), (3, 5, 1)]:
        ctx = field(p, m)
        e = half_exponent(p, k) % ctx.n
        assert check_c1_equivalence(ctx, k)
        assert weight_distribution(ctx, 1).entries == weight_distribution(ctx, e).entries
        checked.append((p, m, k))
    return f"{checked}"


def criterion_11():
    for p, m in [(3, 4), (5, 3), (7, 2)]:
        ctx = field(p, m)
        idx = ctx.all_indices()
        tr = ctx.vtrace(idx)
        assert np.array_equal(tr[ctx.vadd(idx[:, None], idx[None, :])], (tr[:, None] + tr[None, :]) % p)
        assert np.bincount(tr, minlength=p).tolist() == [ctx.q // p] * p
        eta = np.array([gf.quad_character(ctx, ctx.elem(i)) for i in range(ctx.q)])
        assert np.array_equal(eta[ctx.vmul(idx[:, None], idx[None, :])], eta[:, None] * eta[None, :])
    rng = np.random.default_rng(0)
    for p in (3, 5, 7):
        for _ in range(50):
            a, b, c = (CycInt(p, rng.integers(-9, 9, p).tolist()) for _ in range(3))
            assert a * (b + c) == a * b + a * c and (a * b) * c == a * (b * c) and a + b == b + a
    for p in range(3, 50):
        if gf.is_prime(p):
            g = gauss_sum(p)
            assert g * g == (-1) ** ((p - 1) // 2) * p
    for p in (3, 5, 7):
        for k in range(1, 13):
            for m in range(1, 13):
                assert gcd_pk_plus_1(p, k, m) == math.gcd(p**k + 1, p**m - 1)
    return "trace, character, ring, Gauss, gcd"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def _record(num, fn):
    try:
        detail = fn()
    except Exception as exc:  # record then re-raise so pytest fails
        RESULTS[num] = f"criterion {num}: FAIL ({type(exc).__name__}: {exc})"
        print(RESULTS[num])
        raise
    RESULTS[num] = f"criterion {num}: PASS ({detail})"
    print(RESULTS[num])


@pytest.mark.parametrize("num", range(1, 12))
def test_acceptance_criterion(num):
    _record(num, CRITERIA[num - 1])


if __name__ == "__main__":
    failed = 0
    for i, fn in enumerate(CRITERIA, 1):
        try:
            _record(i, fn)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
