"""Permutation statistics, membership, the head encoding and its inverse."""

from itertools import permutations, product

import pytest

from borderstrips.perm import (
    MembershipError,
    Permutation,
    canonicalize,
    descents_k,
    inv_window,
    is_bsp_member,
    psi,
    psi_inverse,
    word_of,
)
from borderstrips.ribbon import decomposition_of, validate_tableau
from borderstrips.shape import Cell, Word, build_diagram


def brute_bsp(word, n):
    """Independent oracle: filter the symmetric group by the pair conditions."""
    k = len(word)
    members = []
    for seq in permutations(range(1, n + k + 1)):
        pos = {v: i for i, v in enumerate(seq)}
        ok = True
        for i, letter in enumerate(word, start=1):
            before = pos[i] < pos[n + i]
            if (letter == "c") != before:
                ok = False
                break
        if ok:
            members.append(seq)
    return members


def test_permutation_basics():
    p = Permutation([3, 2, 5, 6, 1, 4])
    assert p(1) == 3 and p.position_of(1) == 5
    assert p.inverse().one_line == (5, 2, 1, 6, 3, 4)
    assert Permutation.parse("[3,2,5,6,1,4]") == p
    assert str(p) == "[3,2,5,6,1,4]"
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_is_bsp_member_examples():
    assert is_bsp_member(Permutation([3, 2, 5, 6, 1, 4]), Word.parse("ccc"), 3)
    assert not is_bsp_member(Permutation([2, 1]), Word.parse("c"), 1)
    assert not is_bsp_member(Permutation([2, 4, 1, 3]), Word.parse("rc"), 2)
    assert is_bsp_member(Permutation([3, 1, 2, 4]), Word.parse("rc"), 2)
    with pytest.raises(ValueError):
        is_bsp_member(Permutation([1, 2]), Word.parse("rc"), 2)


def test_bsp_rc2_frozen():
    # brute-force filter of S_4 by the two pair conditions
    expected = {(3, 1, 2, 4), (3, 2, 1, 4), (3, 2, 4, 1), (2, 3, 1, 4), (2, 3, 4, 1), (2, 4, 3, 1)}
    assert set(brute_bsp("rc", 2)) == expected
    for seq in expected:
        assert is_bsp_member(Permutation(seq), Word.parse("rc"), 2)


def test_word_of():
    assert str(word_of(Permutation([3, 2, 5, 6, 1, 4]), 3, 3)) == "ccc"
    assert str(word_of(Permutation(range(1, 5)), 2, 2)) == "cc"
    assert str(word_of(Permutation([2, 1]), 1, 1)) == "r"


def test_word_of_partitions_symmetric_group():
    # every permutation satisfies exactly one word's conditions
    for n, k in ((2, 2), (3, 1), (1, 3)):
        seen = {}
        for seq in permutations(range(1, n + k + 1)):
            sigma = Permutation(seq)
            w = word_of(sigma, n, k)
            assert is_bsp_member(sigma, w, n)
            seen.setdefault(str(w), 0)
            seen[str(w)] += 1
        assert sum(seen.values()) == len(list(permutations(range(1, n + k + 1))))
        for word_text, count in seen.items():
            assert count == len(brute_bsp(word_text, n))


def test_descents_k():
    assert descents_k(Permutation([2, 4, 10, 5, 6, 3, 8, 1, 7, 9]), 3) == {3, 7}
    assert descents_k(Permutation(range(1, 6)), 2) == frozenset()
    assert descents_k(Permutation([3, 2, 5, 6, 1, 4]), 3) == {4}
    with pytest.raises(ValueError):
        descents_k(Permutation([1]), -1)


def test_inv_window():
    assert inv_window(Permutation(range(1, 7)), 3) == 0
    assert inv_window(Permutation([2, 1]), 2) == 1
    assert inv_window(Permutation([3, 2, 1, 5, 6, 4]), 3) == 5


def test_inv_window_is_mahonian_for_square():
    # window n on S_n counts all inversions of the inverse
    for seq in permutations(range(1, 5)):
        sigma = Permutation(seq)
        inv_classic = sum(
            1
            for a in range(4)
            for b in range(a + 1, 4)
            if sigma.inverse().one_line[a] > sigma.inverse().one_line[b]
        )
        assert inv_window(sigma, 4) == inv_classic


def test_psi_worked_example():
    sigma = Permutation([3, 2, 5, 6, 1, 4])
    tableau = psi_inverse(sigma, Word.parse("ccc"), 3)
    assert validate_tableau(tableau)
    # row 1 of the picture: 1 1 1 3 3 4 over columns -2..3
    row1 = [tableau.labels[Cell(1, c)] for c in range(-2, 4)]
    assert row1 == [1, 1, 1, 3, 3, 4]
    row2 = [tableau.labels[Cell(2, c)] for c in range(-2, 4)]
    assert row2 == [2, 2, 2, 3, 4, 4]
    row3 = [tableau.labels[Cell(3, c)] for c in range(-2, 4)]
    assert row3 == [5, 5, 5, 6, 6, 6]
    assert psi(tableau) == sigma


def test_psi_single_cell():
    tableau = psi_inverse(Permutation([1]), Word.parse(""), 1)
    assert tableau.labels == {Cell(1, 1): 1}
    assert psi(tableau) == Permutation([1])


def test_psi_inverse_rejects_non_members():
    with pytest.raises(MembershipError):
        psi_inverse(Permutation([2, 1]), Word.parse("c"), 1)


def test_psi_round_trip_exhaustive():
    for word_text, n in (("rc", 2), ("c", 3), ("rr", 2), ("crc", 1)):
        word = Word.parse(word_text)
        for seq in brute_bsp(word_text, n):
            sigma = Permutation(seq)
            tableau = psi_inverse(sigma, word, n)
            assert validate_tableau(tableau)
            assert psi(tableau) == sigma


def test_canonicalize():
    assert canonicalize(Permutation([3, 2, 5, 6, 1, 4]), 3) == Permutation([3, 2, 1, 5, 6, 4])
    ident = Permutation(range(1, 6))
    assert canonicalize(ident, 2) == ident
    reps = {canonicalize(Permutation(seq), 2) for seq in brute_bsp("rc", 2)}
    assert reps == {
        Permutation([3, 1, 2, 4]),
        Permutation([3, 2, 1, 4]),
        Permutation([2, 3, 1, 4]),
        Permutation([2, 4, 3, 1]),
    }


def test_canonicalize_preserves_membership_and_decomposition():
    for word_text, n in (("rc", 2), ("cc", 2), ("r", 3)):
        word = Word.parse(word_text)
        for seq in brute_bsp(word_text, n):
            sigma = Permutation(seq)
            rep = canonicalize(sigma, n)
            assert is_bsp_member(rep, word, n)
            assert not descents_k(rep, n)
            before = decomposition_of(psi_inverse(sigma, word, n))
            after = decomposition_of(psi_inverse(rep, word, n))
            assert before == after


def test_single_descent_swap_keeps_decomposition():
    # swapping one n-descent never changes the underlying decomposition
    for word_text, n in (("rc", 2), ("c", 2)):
        word = Word.parse(word_text)
        for seq in brute_bsp(word_text, n):
            sigma = Permutation(seq)
            for i in descents_k(sigma, n):
                swapped = list(sigma.one_line)
                swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                tau = Permutation(swapped)
                assert is_bsp_member(tau, word, n)
                assert decomposition_of(psi_inverse(tau, word, n)) == decomposition_of(
                    psi_inverse(sigma, word, n)
                )
