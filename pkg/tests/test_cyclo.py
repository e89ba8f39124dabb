import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wdist.cyclo import CycInt, as_rational_integer, from_counts, gauss_sum, zeta_pow
from wdist.errors import MixedModulus
from wdist.gf import is_prime

PRIMES = [p for p in range(3, 50) if is_prime(p)]


def cyc(p):
    return st.lists(st.integers(-50, 50), min_size=p, max_size=p).map(lambda cs: CycInt(p, cs))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_ring_laws(p):
    @settings(max_examples=60, deadline=None)
    @given(cyc(p), cyc(p), cyc(p))
    def check(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        assert a * 1 == a and a + 0 == a
        assert hash(a * b) == hash(b * a)

    check()


@pytest.mark.parametrize("p", PRIMES)
def test_gauss_sum_square(p):
    g = gauss_sum(p)
    sign = (-1) ** ((p - 1) // 2)
    assert g * g == sign * p
    assert (g * g).as_int() == sign * p
    assert g.as_int() is None


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_zeta_relations(p):
    z = zeta_pow(p, 1)
    assert z**p == 1
    assert sum((zeta_pow(p, j) for j in range(p)), CycInt(p)) == 0
    assert zeta_pow(p, p + 2) == zeta_pow(p, 2)
    # the canonical form drops the zeta^(p-1) coordinate
    assert zeta_pow(p, p - 1).coeffs[-1] == 0


def test_rationality_and_integer_equality():
    p = 5
    assert from_counts(p, [3, 2, 2, 2, 2]).as_int() == 1
    assert as_rational_integer(CycInt(p, [0, 1])) is None
    assert CycInt.from_int(p, -7) == -7
    assert hash(CycInt.from_int(p, -7)) == hash(-7)
    assert {CycInt.from_int(p, 4): 1}[4] == 1


def test_conjugation_is_a_ring_automorphism():
    p = 7
    a, b = CycInt(p, [1, 2, 0, -1]), CycInt(p, [0, 3, 1])
    for g in range(1, p):
        assert (a * b).conjugate(g) == a.conjugate(g) * b.conjugate(g)
        assert (a + b).conjugate(g) == a.conjugate(g) + b.conjugate(g)
    # a Galois-stable combination is rational
    norm = CycInt(p, [1])
    for g in range(1, p):
        norm = norm * a.conjugate(g)
    assert norm.is_rational()


def test_mixed_modulus_rejected():
    with pytest.raises(MixedModulus):
        CycInt(3, [1]) + CycInt(5, [1])


def test_text_and_json_rendering():
    p = 5
    assert str(CycInt.from_int(p, -54)) == "-54"
    assert CycInt.from_int(p, -54).to_json() == -54
    x = CycInt(p, [5, 0, 10, 10])
    assert x.to_json() == [5, 0, 10, 10, 0]
    assert CycInt.from_json(p, x.to_json()) == x
    assert CycInt.from_json(p, -54) == -54
    assert str(x) == "5 + 10*z^2 + 10*z^3"


def test_immutable():
    x = CycInt(3, [1])
    with pytest.raises(AttributeError):
        x.p = 5
