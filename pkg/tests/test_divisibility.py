"""Tests for divisibility bounds and the exact low-degree orders.

The d=4..10 k=4 table below was derived by hand twice (once from the
series powers, once from the l*m product rule) before freezing.
"""

from fractions import Fraction
from math import gcd

import pytest

from swcohom.divisibility import (
    DivisibilityReport,
    hurewicz_cokernel_order,
    hurewicz_kernel_order,
    k_from_bplus,
    sharpness_scan,
    sw_divisibility_lower_bound,
)

F = Fraction


# -- kernel and cokernel orders ----------------------------------------


def test_kernel_orders_low_degrees():
    assert hurewicz_kernel_order(2, 0) == 1
    assert hurewicz_kernel_order(2, 1) == 2
    assert hurewicz_kernel_order(3, 1) == 1
    assert hurewicz_kernel_order(6, 2) == 2
    assert hurewicz_kernel_order(7, 2) == 1
    assert hurewicz_kernel_order(9, 4) == 1


def test_kernel_order_degree_three():
    assert hurewicz_kernel_order(4, 3) == 4      # gcd(24, 4)
    assert hurewicz_kernel_order(24, 3) == 24
    assert hurewicz_kernel_order(3, 3) == 12     # gcd(24, 0)/2
    assert hurewicz_kernel_order(5, 3) == 1      # gcd(24, 2)/2
    assert hurewicz_kernel_order(9, 3) == 3      # gcd(24, 6)/2


def test_cokernel_orders():
    assert hurewicz_cokernel_order(4, 0) == 1
    assert hurewicz_cokernel_order(5, 2) == 2
    assert hurewicz_cokernel_order(6, 2) == 1
    assert hurewicz_cokernel_order(4, 4) == 12   # l=4, 48/4
    assert hurewicz_cokernel_order(5, 4) == 12   # l=1, 12/1
    assert hurewicz_cokernel_order(10, 4) == 24  # l=2, 48/2


def test_order_domain_errors():
    with pytest.raises(ValueError):
        hurewicz_kernel_order(1, 0)
    with pytest.raises(ValueError):
        hurewicz_kernel_order(4, 5)
    with pytest.raises(ValueError):
        hurewicz_cokernel_order(4, 3)
    with pytest.raises(ValueError):
        hurewicz_cokernel_order(2, 4)


def test_degree_four_product_rule():
    # l * m = 48 for even d, 12 for odd d, across a wide range
    for d in range(3, 60):
        l = hurewicz_kernel_order(d, 3)
        m = hurewicz_cokernel_order(d, 4)
        assert l * m == (48 if d % 2 == 0 else 12), d


# -- the divisibility bound ---------------------------------------------


def test_bound_d5_k2():
    r = sw_divisibility_lower_bound(5, 2)
    assert (r.p, r.kappa) == (3, 1)
    assert r.a_coeffs == (F(-1), F(-3, 2))
    assert r.denominators == (1, 2)
    assert r.lower_bound == 2
    assert r.lemma_cokernel_order == 2
    assert r.sharp is True


def test_bound_k0_is_trivial():
    r = sw_divisibility_lower_bound(4, 0)
    assert r.lower_bound == 1
    assert r.sharp is True


def test_bound_d4_k4_not_sharp():
    r = sw_divisibility_lower_bound(4, 4)
    assert r.p == 1
    assert r.denominators == (1, 2, 3)
    assert r.lower_bound == 6
    assert r.lemma_cokernel_order == 12
    assert r.sharp is False


def test_bound_k6_leaves_comparison_empty():
    r = sw_divisibility_lower_bound(9, 6)
    assert r.lower_bound >= 1
    assert r.lemma_cokernel_order is None
    assert r.sharp is None


def test_bound_rejects_bad_input():
    with pytest.raises(ValueError):
        sw_divisibility_lower_bound(5, 3)
    with pytest.raises(ValueError):
        sw_divisibility_lower_bound(5, -2)
    with pytest.raises(ValueError):
        sw_divisibility_lower_bound(3, 4)   # p = 0


def test_k4_table_d4_to_10():
    # (d, lower_bound, cokernel order)
    table = {
        4: (6, 12),
        5: (12, 12),
        6: (4, 8),
        7: (6, 6),
        8: (6, 6),
        9: (4, 4),
        10: (12, 24),
    }
    for d, (bound, order) in table.items():
        r = sw_divisibility_lower_bound(d, 4)
        assert r.lower_bound == bound, d
        assert r.lemma_cokernel_order == order, d
        assert r.sharp is (bound == order), d


def test_k2_bound_is_always_gcd_and_sharp():
    for d in range(3, 80):
        r = sw_divisibility_lower_bound(d, 2)
        assert r.lower_bound == gcd(2, d - 1)
        assert r.sharp is True


def test_bound_divides_exact_order():
    for d in range(2, 60):
        for k in (0, 2, 4):
            if d - 1 - k // 2 < 1:
                continue
            r = sw_divisibility_lower_bound(d, k)
            assert r.lemma_cokernel_order % r.lower_bound == 0, (d, k)


# -- k from b_plus --------------------------------------------------------


def test_k_from_bplus_values():
    assert k_from_bplus(2, 3) == 0
    assert k_from_bplus(5, 3) == 6
    assert k_from_bplus(4, 7) == 0


def test_k_from_bplus_errors():
    with pytest.raises(ValueError):
        k_from_bplus(5, 4)
    with pytest.raises(ValueError):
        k_from_bplus(5, 1)
    with pytest.raises(ValueError):
        k_from_bplus(2, 5)


# -- scan ------------------------------------------------------------------


def test_scan_contents_and_non_sharp_witness():
    reports = sharpness_scan(2, 20)
    # d=2 admits neither k=2 nor k=4; d=3 only k=2
    assert {(r.d, r.k) for r in reports if r.d == 3} == {(3, 2)}
    assert all(r.lemma_cokernel_order % r.lower_bound == 0 for r in reports)
    assert any(r.sharp is False for r in reports)


def test_scan_rejects_empty_range():
    with pytest.raises(ValueError):
        sharpness_scan(5, 4)
    with pytest.raises(ValueError):
        sharpness_scan(1, 4)
