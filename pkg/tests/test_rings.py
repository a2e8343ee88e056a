import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli import arith
from capelli.errors import DomainError, ParseError
from capelli.rings import (
    GAUSSIAN,
    INTEGERS,
    GaussInt,
    I,
    canonical_factor,
    exponent,
    is_pth_power,
    prime_field,
    ring_from_name,
    unit_pth_powers,
    units,
)

G = GaussInt
gauss = st.builds(GaussInt, st.integers(-40, 40), st.integers(-40, 40))
nonzero_gauss = gauss.filter(bool)
primes = st.sampled_from([2, 3, 5, 7])


# -- units ----------------------------------------------------------------------


def test_units_of_each_ring():
    assert units(INTEGERS) == [1, -1]
    assert units(GAUSSIAN) == [1, -1, I, -I]
    assert units(prime_field(5)) == [1, 2, 3, 4]


def test_ring_descriptor_fields():
    F = prime_field(7)
    assert (F.modulus, F.characteristic, F.name) == (7, 7, "fq7")
    assert INTEGERS.characteristic == GAUSSIAN.characteristic == 0
    assert INTEGERS.modulus is None
    assert ring_from_name("zi") is GAUSSIAN
    with pytest.raises(DomainError):
        prime_field(9)


# -- canonical factorization ----------------------------------------------------------


def test_canonical_factor_integers():
    fac = canonical_factor(INTEGERS, -12)
    assert fac.unit == -1
    assert fac.factors == ((2, 2), (3, 1))


def test_canonical_factor_eight_i():
    fac = canonical_factor(GAUSSIAN, 8 * I)
    assert fac.unit == -1
    assert fac.factors == ((G(1, 1), 6),)


def test_canonical_factor_five_order():
    fac = canonical_factor(GAUSSIAN, 5)
    assert fac.unit == 1
    assert fac.factors == ((G(2, 1), 1), (G(2, -1), 1))


def test_canonical_factor_unit_and_zero():
    fac = canonical_factor(GAUSSIAN, -I)
    assert fac.unit == -I and fac.factors == ()
    with pytest.raises(DomainError):
        canonical_factor(INTEGERS, 0)
    with pytest.raises(DomainError):
        canonical_factor(GAUSSIAN, 0)


@settings(max_examples=300)
@given(nonzero_gauss)
def test_gaussian_factorization_round_trip(x):
    fac = canonical_factor(GAUSSIAN, x)
    assert fac.expand() == x
    assert GAUSSIAN.is_unit(fac.unit)
    primes_ = [q for q, _ in fac.factors]
    for q in primes_:
        assert GAUSSIAN.canonical_associate(q)[0] == q
    # pairwise non-associate and sorted
    assert len({GAUSSIAN.canonical_associate(q)[0] for q in primes_}) == len(primes_)
    assert primes_ == sorted(primes_, key=GAUSSIAN.sort_key)


@given(st.integers(-10**6, 10**6).filter(bool))
def test_integer_factorization_round_trip(x):
    fac = canonical_factor(INTEGERS, x)
    assert fac.expand() == x
    assert all(q > 0 and arith.is_prime(q) for q, _ in fac.factors)


# -- p-th powers -----------------------------------------------------------------------


def test_is_pth_power_examples():
    assert is_pth_power(INTEGERS, -8, 3) == -2
    assert is_pth_power(INTEGERS, -1, 2) is None
    r = is_pth_power(GAUSSIAN, 8 * I, 2)
    # 8i = -(1+i)^6 and the root is i(1+i)^3 = -2-2i
    assert r == GaussInt(-2, -2) and r * r == 8 * I
    assert is_pth_power(INTEGERS, 0, 5) == 0
    with pytest.raises(DomainError):
        is_pth_power(INTEGERS, 4, 4)


def _brute_root(R, x, p, pool):
    return any(R.pow(r, p) == x for r in pool)


@settings(max_examples=200)
@given(gauss, primes)
def test_gaussian_pth_power_matches_search(x, p):
    r = is_pth_power(GAUSSIAN, x, p)
    if r is not None:
        assert r**p == x
    else:
        # a root r has norm(r)^p = norm(x), so norm(r) <= norm(x)
        pool = GAUSSIAN.elements(max(x.norm(), 1))
        assert not _brute_root(GAUSSIAN, x, p, pool)


@given(st.integers(-5000, 5000), primes)
def test_integer_pth_power_matches_search(x, p):
    r = is_pth_power(INTEGERS, x, p)
    if r is not None:
        assert r**p == x
    else:
        assert not _brute_root(INTEGERS, x, p, range(-abs(x) - 1, abs(x) + 2))


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_pth_power_matches_search(q, p):
    F = prime_field(q)
    for x in range(q):
        r = F.is_pth_power(x, p)
        if r is not None:
            assert pow(r, p, q) == x
        else:
            assert not _brute_root(F, x, p, range(q))


def test_unit_pth_powers():
    assert unit_pth_powers(GAUSSIAN, 2) == [1, -1]
    assert unit_pth_powers(GAUSSIAN, 3) == [1, -1, I, -I]
    assert unit_pth_powers(INTEGERS, 5) == [1, -1]
    assert unit_pth_powers(prime_field(7), 3) == [1, 6]


@pytest.mark.parametrize("R", [INTEGERS, GAUSSIAN, prime_field(7), prime_field(13)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_unit_pth_powers_is_a_subgroup(R, p):
    H = R.unit_pth_powers(p)
    assert R.one in H
    assert all(R.mul(x, y) in H for x in H for y in H)
    assert len(set(H)) == len(H)


# -- exponent ----------------------------------------------------------------------------


def test_exponent_examples():
    assert exponent(GAUSSIAN, 8 * I) == 6
    assert exponent(INTEGERS, 1) == 0
    assert exponent(INTEGERS, 72) == 1
    with pytest.raises(DomainError):
        exponent(INTEGERS, 0)


@given(nonzero_gauss.filter(lambda x: x.norm() > 1), st.integers(1, 5))
def test_exponent_scales_with_powers(x, k):
    assert exponent(GAUSSIAN, x**k) == k * exponent(GAUSSIAN, x)


# -- text -----------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, value",
    [("3", G(3)), ("-2*i", G(0, -2)), ("i", I), ("1+i", G(1, 1)), ("4 - 7*i", G(4, -7)), ("-i", -I)],
)
def test_parse_gaussian(text, value):
    assert GAUSSIAN.parse(text) == value
    assert GAUSSIAN.parse(GAUSSIAN.format(value)) == value


def test_parse_rejects_polynomial_and_garbage():
    with pytest.raises(ParseError):
        INTEGERS.parse("x+1")
    with pytest.raises(ParseError):
        INTEGERS.parse("2*i")
    with pytest.raises(ParseError):
        INTEGERS.parse("3 +")


def test_field_residues_reduced():
    F = prime_field(5)
    assert F.parse("12") == 2
    assert F.coerce(-1) == 4


# -- integer helpers ---------------------------------------------------------------------


def test_two_squares():
    for p in [5, 13, 17, 29, 10009, 1000000009]:
        a, b = arith.two_squares(p)
        assert a * a + b * b == p and a > b > 0


def test_two_squares_matches_search():
    for p in range(5, 3000, 4):
        if arith.is_prime(p):
            found = next((a, b) for a in range(1, p) for b in range(1, a) if a * a + b * b == p)
            assert arith.two_squares(p) == found


def test_factorint_large_semiprime():
    n = 1000000007 * 998244353
    assert arith.factorint(n) == {998244353: 1, 1000000007: 1}


def test_multiplicative_order_and_phi():
    assert arith.multiplicative_order(7, 8) == 2
    assert arith.multiplicative_order(2, 5) == 4
    assert [arith.euler_phi(n) for n in (1, 8, 12, 30)] == [1, 4, 4, 8]
