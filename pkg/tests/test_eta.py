import pytest
from hypothesis import given, strategies as st

from hmcy import eta

# Independent oracle: the defining product multiplied out in Python integers.
_ORACLE_N = 400


@pytest.fixture(scope="module")
def oracle():
    big = eta.euler_product_power(_ORACLE_N)
    small = [0] * _ORACLE_N
    small[::5] = big[: (_ORACLE_N + 4) // 5]
    return eta.mul_trunc(big, small, _ORACLE_N)


def test_expand_matches_product_oracle(oracle):
    s = eta.expand_f(_ORACLE_N)
    assert list(s.a) == oracle


def test_sparse_route_matches_binomial():
    assert eta.euler_fourth_power_sparse(500) == eta.euler_product_power(500)


def test_sparse_route_matches_squaring():
    e2 = eta.euler_product_power(300, power=2)
    assert eta.mul_trunc(e2, e2, 300) == eta.euler_fourth_power_sparse(300)


def test_leading_coefficients():
    s = eta.expand_f(9)
    assert [s[n] for n in range(1, 10)] == [1, -4, 2, 8, -5, -8, 6, 0, -23]


@pytest.mark.parametrize("p,a", [(59, 500), (101, 702), (113, 1562), (157, -2494), (61, -518)])
def test_known_ap(p, a):
    assert eta.expand_f(200)[p] == a


def test_hecke_parity_ramanujan_to_2000():
    s = eta.expand_f(2000)
    for rep in (eta.hecke_checks(s), eta.ap_parity(s), eta.ramanujan_bound(s)):
        assert rep.ok, rep
        assert rep.checked > 0


@given(st.integers(1, 3000))
def test_prefix_stability(n):
    assert eta.expand_f(n).a == eta.expand_f(3000).a[:n]


def test_bounds_and_indexing():
    with pytest.raises(ValueError):
        eta.expand_f(0)
    with pytest.raises(ValueError):
        eta.expand_f(eta.MAX_TERMS + 1)
    s = eta.expand_f(10)
    with pytest.raises(IndexError):
        s[11]
    with pytest.raises(IndexError):
        s[0]
    with pytest.raises(ValueError):
        eta.hecke_checks(s)
