"""Closed forms, counting polynomials, sequences and the scan report."""

from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest

from borderstrips.enumeration import count_bsd, qpoly_bsd
from borderstrips.formulas import (
    UnsupportedRangeError,
    bsd_count_formula,
    bst_closed,
    compositions,
    conjecture_scan,
    f_polynomial,
    format_sequence,
    j_statistic,
    kaufmann_sum,
    multinomial,
    partition_ie_sum,
    partitions,
    q_bracket,
    q_factorial,
    qpoly_single_column,
    rc_closed,
    rect_recurrence,
    straightness_compare,
    total_over_words,
    wp_volume,
    zograf_sequence,
)
from borderstrips.polynomial import Polynomial, falling_factorial


def test_q_basics():
    assert q_factorial(0) == Polynomial((1,), "q")
    assert q_factorial(1) == Polynomial((1,), "q")
    assert q_factorial(3) == Polynomial((1, 2, 2, 1), "q")
    assert q_bracket(4) == Polynomial((1, 1, 1, 1), "q")
    with pytest.raises(ValueError):
        q_factorial(-1)


def test_bst_closed():
    assert bst_closed(0, 3) == 6
    assert bst_closed(1, 2) == 3
    assert bst_closed(2, 2) == 6
    with pytest.raises(UnsupportedRangeError):
        bst_closed(3, 2)


def test_f_polynomials_small():
    assert f_polynomial("") == Polynomial((1,))
    assert f_polynomial("c") == falling_factorial(1, 2)  # (n+1) n
    assert f_polynomial("cc") == 5 * falling_factorial(2, 4) + falling_factorial(1, 4)
    assert f_polynomial("rc") == 4 * falling_factorial(2, 4) + 2 * falling_factorial(1, 4)


def test_f_polynomial_degree_and_divisibility():
    for k in (1, 2, 3):
        divisor = falling_factorial(1, k + 1)
        for letters in product("cr", repeat=k):
            poly = f_polynomial("".join(letters))
            assert poly.degree == 2 * k
            assert poly.coefficient(2 * k) == factorial(2 * k) // 2**k
            assert poly.divisible_by(divisor)


def test_bsd_count_formula():
    assert bsd_count_formula("rc", 4) == 140
    assert bsd_count_formula("cc", 4) == 160
    assert bsd_count_formula("c", 5) == 360
    assert bsd_count_formula("", 3) == 6
    with pytest.raises(UnsupportedRangeError):
        bsd_count_formula("rc", 3)


def test_formula_matches_enumeration():
    for k in range(3):
        for letters in product("cr", repeat=k):
            word = "".join(letters)
            for n in range(max(1, 2 * k), 6):
                assert bsd_count_formula(word, n) == count_bsd(word, n)


def test_rc_closed():
    assert [rc_closed(n) for n in (2, 3, 4, 5)] == [4, 22, 140, 1020]
    assert rc_closed(2) == count_bsd("rc", 2)
    assert rc_closed(3) == count_bsd("rc", 3)
    with pytest.raises(UnsupportedRangeError):
        rc_closed(1)


def test_total_over_words():
    count, poly = total_over_words(0, 3)
    assert count == 6 and poly == q_factorial(3)
    count, poly = total_over_words(1, 2)
    assert count == 6 and poly == q_bracket(3) * q_factorial(2)
    count, poly = total_over_words(2, 2)
    assert count == 18
    enumerated = sum(count_bsd("".join(ls), 2) for ls in product("cr", repeat=2))
    assert enumerated == 18


def test_j_statistic():
    assert j_statistic("c") == 0
    assert j_statistic("cc") == 1
    assert j_statistic("rc") == 2
    assert j_statistic("ccc") == 30


def test_straightness_compare():
    report = straightness_compare("cc", "rc")
    assert report.leading_equal
    assert report.difference == Polynomial((0, -4, 0, 4))  # 4n^3 - 4n
    assert report.subleading_delta == 4
    assert report.eventually_larger == "first"
    assert report.eventually_larger_word() == report.first
    same = straightness_compare("cr", "rc")
    assert same.difference.is_zero() and same.eventually_larger == "equal"
    with pytest.raises(ValueError):
        straightness_compare("c", "cc")


def test_partitions():
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(partitions(0)) == [()]
    assert len(list(partitions(6))) == 11
    for p in partitions(5):
        assert sum(p) == 5
        assert list(p) == sorted(p, reverse=True)


def test_compositions():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(compositions(3, 4)) == []
    assert list(compositions(0, 0)) == [()]
    assert len(list(compositions(6, 3))) == comb(5, 2)


def test_multinomial():
    assert multinomial((2, 2)) == 6
    assert multinomial((3,)) == 1
    assert multinomial((1, 1, 1)) == 6


def test_zograf_sequence():
    assert zograf_sequence(7) == [1, 1, 5, 61, 1379]
    with pytest.raises(ValueError):
        zograf_sequence(2)


def test_rect_recurrence():
    assert rect_recurrence(4) == [1, 1, 5, 61, 1379]
    assert rect_recurrence(0) == [1]


def test_kaufmann_sum():
    assert kaufmann_sum(4) == 1
    assert kaufmann_sum(5) == 5
    assert kaufmann_sum(6) == 61
    with pytest.raises(ValueError):
        kaufmann_sum(3)


def test_partition_ie_sum():
    assert partition_ie_sum(1) == 1
    assert partition_ie_sum(2) == 5
    assert partition_ie_sum(3) == 61
    assert partition_ie_sum(2) == count_bsd("rr", 2)


def test_three_way_agreement():
    values = zograf_sequence(12)
    for n in range(4, 13):
        assert kaufmann_sum(n) == values[n - 3]
        assert partition_ie_sum(n - 3) == values[n - 3]


def test_wp_volume():
    assert wp_volume(4) == (Fraction(1, 24), 2)
    assert wp_volume(5) == (Fraction(1, 48), 4)
    assert wp_volume(6) == (Fraction(61, 4320), 6)
    with pytest.raises(UnsupportedRangeError):
        wp_volume(3)


def test_format_sequence():
    assert format_sequence([1, 1, 5], 0) == "0 1\n1 1\n2 5"


def test_qpoly_single_column_closed_form():
    for n in (1, 2, 3, 4):
        assert qpoly_bsd("c", n) == qpoly_single_column(n)


def test_conjecture_scan():
    one = conjecture_scan(1)
    assert one.orbits == (("c", "r"),)
    assert one.conjecture_holds
    two = conjecture_scan(2)
    assert two.orbits == (("cc", "rr"), ("cr", "rc"))
    assert two.polynomial_groups == two.orbits
    three = conjecture_scan(3)
    assert three.orbits == (
        ("ccc", "rrr"),
        ("ccr", "crr", "rcc", "rrc"),
        ("crc", "rcr"),
    )
    for orbit in three.orbits:
        polys = {str(f_polynomial(w)) for w in orbit}
        assert len(polys) == 1
    assert not three.counterexamples or not three.conjecture_holds
