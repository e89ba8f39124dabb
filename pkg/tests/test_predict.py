import time

import pytest

from wdist.codes import WeightDistribution
from wdist.errors import InadmissibleT, InvalidParameters, NoMatch
from wdist.predict import check_moments, classify, compare, predicted_distribution, verify
from wdist.structure import CaseTag, admissibility_witness, half_exponent, match_exponent

from conftest import field

DIST_3_6_2 = {0: 1, 216: 364, 252: 1092, 432: 33124, 468: 198744, 504: 298116}
DIST_3_4_2 = {0: 1, 24: 120, 36: 40, 48: 3600, 60: 2400, 72: 400}
DIST_5_3_3 = {0: 1, 50: 248, 100: 15376}
DIST_3_6_5 = {0: 1, 234: 728, 252: 728, 468: 132496, 486: 264992, 504: 132496}


def test_classify():
    assert classify(3, 6, 1).case_tag is CaseTag.EVEN_EQ and classify(3, 6, 1).d == 1
    assert classify(3, 4, 1).case_tag is CaseTag.EVEN_LT
    assert classify(3, 6, 2).case_tag is CaseTag.ODD_S
    assert classify(5, 3, 1).case_tag is CaseTag.ODD_M
    with pytest.raises(InvalidParameters):
        classify(3, 5, 0)
    with pytest.raises(InvalidParameters):
        classify(4, 5, 1)


@pytest.mark.parametrize("pmk, expected", [((3, 6, 1), DIST_3_6_2), ((3, 4, 1), DIST_3_4_2), ((5, 3, 1), DIST_5_3_3), ((3, 6, 2), DIST_3_6_5)])
def test_tables_reproduce_reference(pmk, expected):
    assert predicted_distribution(*pmk).entries == expected


def test_all_tables_satisfy_moments():
    start = time.perf_counter()
    checked = refused = 0
    for p in (3, 5, 7):
        for m in range(1, 9):
            for k in range(1, 9):
                try:
                    dist = predicted_distribution(p, m, k)
                except InvalidParameters:
                    assert admissibility_witness(p, m, half_exponent(p, k)) is not None
                    refused += 1
                    continue
                assert dist.total == p ** (2 * m)
                first = sum(w * a for w, a in dist.items())
                assert first == (p**m - 1) * (p - 1) * p ** (2 * m - 1)
                checked += 1
    assert time.perf_counter() - start < 1
    assert checked > 150 and refused > 0


def test_inadmissible_k_refused():
    # (3^2+1)/2 = 5 and 5 * 3^2 = 45 = 5 + 40 mod 80
    with pytest.raises(InvalidParameters):
        predicted_distribution(3, 4, 2)


def test_check_moments_detects_corruption():
    bad = WeightDistribution({0: 1, 50: 249, 100: 15375}, 124, 5)
    with pytest.raises(AssertionError):
        check_moments(bad, 5, 3)


def test_compare_rows():
    a = WeightDistribution({0: 1, 2: 3}, 4, 3)
    b = WeightDistribution({0: 1, 3: 3}, 4, 3)
    assert compare(a, a) == []
    assert compare(a, b) == [[2, 3, 0], [3, 0, 3]]


@pytest.mark.parametrize("pmt, k", [((3, 6, 2), 1), ((3, 6, 5), 2), ((3, 4, 2), 1), ((5, 3, 3), 1)])
def test_verify_reference(pmt, k):
    p, m, t = pmt
    rep = verify(field(p, m), t)
    assert rep.status == "PASS" and rep.diff == []
    assert rep.spec.k == k


@pytest.mark.parametrize("pm", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_verify_every_matched_exponent(pm):
    ctx = field(*pm)
    for t in range(1, ctx.n):
        if admissibility_witness(ctx.p, ctx.m, t) is None and match_exponent(ctx.p, ctx.m, t):
            assert verify(ctx, t).status == "PASS", t


def test_verify_errors(F34):
    with pytest.raises(NoMatch):
        verify(F34, 7)
    with pytest.raises(InadmissibleT):
        verify(F34, 20)
