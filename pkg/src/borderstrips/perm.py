"""Permutation statistics and the head-placement bijection.

A tableau of (word, n) is encoded by the permutation sending each label to
the diagonal of its head.  Membership of a permutation in the image is a
set of pairwise position conditions on the values (i, n + i), one per word
letter.
"""

from __future__ import annotations

from typing import Iterable

from .ribbon import Tableau, validate_tableau
from .shape import Word, build_diagram


class MembershipError(ValueError):
    """The permutation does not satisfy the pair conditions of (word, n)."""


class Permutation:
    """One-line permutation of 1..m with a precomputed position map."""

    __slots__ = ("one_line", "positions")

    def __init__(self, one_line: Iterable[int]):
        seq = tuple(int(v) for v in one_line)
        m = len(seq)
        if sorted(seq) != list(range(1, m + 1)):
            raise ValueError(f"not a one-line permutation of 1..{m}: {seq}")
        pos = [0] * (m + 1)
        for idx, value in enumerate(seq):
            pos[value] = idx + 1
        self.one_line = seq
        self.positions = tuple(pos)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accept the bracketed one-line form, e.g. ``[3,2,5,6,1,4]``."""
        body = text.strip().strip("[]")
        if not body:
            return cls(())
        return cls(int(part) for part in body.replace(",", " ").split())

    def __call__(self, j: int) -> int:
        return self.one_line[j - 1]

    def position_of(self, value: int) -> int:
        """The inverse permutation evaluated at ``value``."""
        return self.positions[value]

    def inverse(self) -> "Permutation":
        return Permutation(self.positions[1:])

    def __len__(self) -> int:
        return len(self.one_line)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self) -> int:
        return hash(self.one_line)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.one_line) + "]"

    def __repr__(self) -> str:
        return f"Permutation({list(self.one_line)})"


def is_bsp_member(sigma: Permutation, word: Word, n: int) -> bool:
    """Pair conditions: letter c at i forces value i before value n + i,
    letter r forces it after."""
    k = len(word)
    if len(sigma) != n + k:
        raise ValueError(f"permutation size {len(sigma)} != n + k = {n + k}")
    for i, letter in enumerate(word.letters, start=1):
        before = sigma.position_of(i) < sigma.position_of(n + i)
        if letter == "c" and not before:
            return False
        if letter == "r" and before:
            return False
    return True


def word_of(sigma: Permutation, n: int, k: int) -> Word:
    """The unique word of length k whose pair conditions sigma satisfies."""
    if len(sigma) != n + k:
        raise ValueError(f"permutation size {len(sigma)} != n + k = {n + k}")
    return Word(
        tuple(
            "c" if sigma.position_of(i) < sigma.position_of(n + i) else "r"
            for i in range(1, k + 1)
        )
    )


def descents_k(sigma: Permutation, kk: int) -> frozenset[int]:
    """Positions i where the one-line value drops by more than kk."""
    if kk < 0:
        raise ValueError("descent window must be nonnegative")
    seq = sigma.one_line
    return frozenset(
        i + 1 for i in range(len(seq) - 1) if seq[i] - kk > seq[i + 1]
    )


def inv_window(sigma: Permutation, n: int) -> int:
    """Inversions restricted to value pairs at most n apart.

    Value pairs exactly n apart belong to strips on adjacent diagonals and
    do invert; dropping them would break the q-identities (the all-words
    total could never reach degree kn + C(n,2)).
    """
    if n < 1:
        raise ValueError("window must be positive")
    m = len(sigma)
    pos = sigma.positions
    total = 0
    for i in range(1, m + 1):
        for j in range(i + 1, min(i + n, m) + 1):
            if pos[i] > pos[j]:
                total += 1
    return total


def psi(tableau: Tableau) -> Permutation:
    """Encode a valid tableau: label j maps to the diagonal of its head."""
    check = validate_tableau(tableau)
    if not check:
        raise ValueError(f"invalid tableau: {check.reason}")
    k = tableau.diagram.k
    one_line = [0] * tableau.diagram.symbols
    for value, cells in tableau.label_classes().items():
        head = max(cells, key=lambda cell: cell.content)
        one_line[value - 1] = head.content + k + 1
    return Permutation(one_line)


def psi_inverse(sigma: Permutation, word: Word, n: int) -> Tableau:
    """Rebuild the unique tableau of (word, n) encoded by a member permutation.

    Diagonal d holds the labels j with d <= sigma(j) <= d + n - 1; within the
    diagonal, equal-content cells force the labels to increase downward, so
    they are placed in ascending order from the top.
    """
    if not is_bsp_member(sigma, word, n):
        raise MembershipError(f"{sigma} does not satisfy the conditions of ({word.display()}, {n})")
    diagram = build_diagram(word, n)
    m = diagram.symbols
    labels = {}
    for d in diagram.diagonals():
        active = sorted(
            sigma.position_of(v) for v in range(max(1, d), min(m, d + n - 1) + 1)
        )
        cells = diagram.diagonal_cells(d)
        if len(active) != len(cells):
            raise RuntimeError(
                f"internal consistency: diagonal {d} has {len(cells)} cells "
                f"but {len(active)} active labels"
            )
        for cell, label in zip(cells, active):
            labels[cell] = label
    return Tableau(diagram, labels)


def canonicalize(sigma: Permutation, n: int) -> Permutation:
    """Remove every n-descent by swapping adjacent entries; the result is the
    unique descent-free representative of sigma's decomposition fiber."""
    seq = list(sigma.one_line)
    i = 0
    while i < len(seq) - 1:
        if seq[i] - seq[i + 1] > n:
            seq[i], seq[i + 1] = seq[i + 1], seq[i]
            i = 0
        else:
            i += 1
    return Permutation(seq)
