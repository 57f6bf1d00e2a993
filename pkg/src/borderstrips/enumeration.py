"""Exhaustive enumeration of tableaux and decompositions.

The primary search runs over permutations: the pair conditions and the
no-n-descent condition both prune partial one-line sequences early.  A
separate depth-first tiling search (and a labeling search on top of it)
serves as an independent oracle with a different branching structure, so
the two routes cannot share a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from itertools import permutations as all_permutations
from typing import Iterator

from .perm import Permutation, psi_inverse
from .polynomial import Polynomial
from .ribbon import Cell, Decomposition, Tableau
from .shape import SimpleDiagram, Word, build_diagram


class BudgetExceededError(RuntimeError):
    """The request would exceed the enumeration budget."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_symbols: int = 10  # bound on n + k when materializing results
    count_symbols: int = 12  # bound on n + k for count-only traversals
    hard_cap: int = 2_000_000  # cap on materialized results / labeling work

    def check_symbols(self, symbols: int, counting: bool = False) -> None:
        limit = self.count_symbols if counting else self.max_symbols
        if symbols > limit:
            raise BudgetExceededError(
                f"n + k = {symbols} exceeds the budget of {limit}"
            )


DEFAULT_BUDGET = EnumerationBudget()


def _as_word(word: Word | str) -> Word:
    return word if isinstance(word, Word) else Word.parse(word)


def _bsp_sequences(
    word: Word, n: int, descent_free: bool = False
) -> Iterator[tuple[int, ...]]:
    """Backtracking over one-line sequences, in lexicographic order.

    Placing value i with letter r requires n + i already placed; placing
    value n + i with letter c requires i already placed.  A partial sequence
    violating either is pruned immediately.
    """
    letters = word.letters
    k = len(letters)
    m = n + k
    placed = [False] * (m + 1)
    seq: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(seq) == m:
            yield tuple(seq)
            return
        prev = seq[-1] if seq else None
        for v in range(1, m + 1):
            if placed[v]:
                continue
            if descent_free and prev is not None and prev - v > n:
                continue
            if v <= k and letters[v - 1] == "r" and not placed[n + v]:
                continue
            if v > n and letters[v - n - 1] == "c" and not placed[v - n]:
                continue
            placed[v] = True
            seq.append(v)
            yield from extend()
            seq.pop()
            placed[v] = False

    yield from extend()


def _capped(stream: Iterator, cap: int) -> Iterator:
    emitted = 0
    for item in stream:
        emitted += 1
        if emitted > cap:
            raise BudgetExceededError(f"more than {cap} materialized results")
        yield item


def enum_bsp(
    word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Permutation]:
    """All permutations encoding tableaux of (word, n), lexicographically."""
    word = _as_word(word)
    if n < 1:
        raise ValueError("n must be a positive integer")
    budget.check_symbols(n + len(word))
    return _capped(
        (Permutation(seq) for seq in _bsp_sequences(word, n)), budget.hard_cap
    )


def enum_bst(
    word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Tableau]:
    """All border-strip tableaux of (word, n)."""
    word = _as_word(word)
    return (psi_inverse(sigma, word, n) for sigma in enum_bsp(word, n, budget))


def _decomposition_from_sequence(
    seq: tuple[int, ...], diagram: SimpleDiagram, n: int
) -> Decomposition:
    # Strip v covers diagonals v-n+1..v; on each diagonal the strips appear
    # top to bottom in the order of their head positions in the sequence.
    m = diagram.symbols
    pos = [0] * (m + 1)
    for idx, v in enumerate(seq):
        pos[v] = idx
    assignment: dict[Cell, int] = {}
    for d in diagram.diagonals():
        active = sorted(range(max(1, d), min(m, d + n - 1) + 1), key=lambda v: pos[v])
        for cell, v in zip(diagram.diagonal_cells(d), active):
            assignment[cell] = v
    return Decomposition(diagram, assignment)


def enum_bsd(
    word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Decomposition]:
    """All border-strip decompositions of (word, n), one per descent-free
    member permutation."""
    word = _as_word(word)
    if n < 1:
        raise ValueError("n must be a positive integer")
    budget.check_symbols(n + len(word))
    diagram = build_diagram(word, n)
    return _capped(
        (
            _decomposition_from_sequence(seq, diagram, n)
            for seq in _bsp_sequences(word, n, descent_free=True)
        ),
        budget.hard_cap,
    )


def count_bsp(word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """|BSP(word, n)| = |BST(word, n)| without materializing anything."""
    word = _as_word(word)
    budget.check_symbols(n + len(word), counting=True)
    return sum(1 for _ in _bsp_sequences(word, n))


def count_bsd(word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """|BSD(word, n)| without materializing decompositions."""
    word = _as_word(word)
    budget.check_symbols(n + len(word), counting=True)
    return sum(1 for _ in _bsp_sequences(word, n, descent_free=True))


def qpoly_bsd(
    word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Polynomial:
    """The inversion generating polynomial of the decompositions of (word, n).

    Computed over descent-free member permutations via the windowed inversion
    statistic, which matches the direct strip-pair count decomposition by
    decomposition."""
    word = _as_word(word)
    if n < 1:
        raise ValueError("n must be a positive integer")
    budget.check_symbols(n + len(word), counting=True)
    m = n + len(word)
    counts: dict[int, int] = {}
    for seq in _bsp_sequences(word, n, descent_free=True):
        pos = [0] * (m + 1)
        for idx, v in enumerate(seq):
            pos[v] = idx
        inv = 0
        for i in range(1, m + 1):
            for j in range(i + 1, min(i + n, m) + 1):
                if pos[i] > pos[j]:
                    inv += 1
        counts[inv] = counts.get(inv, 0) + 1
    if not counts:
        return Polynomial((), "q")
    coeffs = [0] * (max(counts) + 1)
    for inv, c in counts.items():
        coeffs[inv] = c
    return Polynomial(tuple(coeffs), "q")


def fibers(
    word: Word | str, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> dict[Decomposition, set[Tableau]]:
    """Group the tableaux of (word, n) by their underlying decomposition."""
    word = _as_word(word)
    grouped: dict[Decomposition, set[Tableau]] = {}
    for sigma in enum_bsp(word, n, budget):
        tableau = psi_inverse(sigma, word, n)
        dec = Decomposition(
            tableau.diagram,
            {cell: sigma(label) for cell, label in tableau.labels.items()},
        )
        grouped.setdefault(dec, set()).add(tableau)
    return grouped


_DOWN_STEPS = ((0, -1), (1, 0))  # content - 1 neighbors
_UP_STEPS = ((0, 1), (-1, 0))  # content + 1 neighbors


def _chains(start: Cell, steps: int, deltas, allowed) -> Iterator[tuple[Cell, ...]]:
    if steps == 0:
        yield ()
        return
    for dr, dc in deltas:
        nxt = Cell(start.row + dr, start.col + dc)
        if nxt in allowed:
            for rest in _chains(nxt, steps - 1, deltas, allowed):
                yield (nxt, *rest)


def _strips_through(cell: Cell, allowed, n: int) -> Iterator[tuple[Cell, ...]]:
    """Every n-cell border strip containing the cell inside the allowed set."""
    for below in range(n):
        for down in _chains(cell, below, _DOWN_STEPS, allowed):
            for up in _chains(cell, n - 1 - below, _UP_STEPS, allowed):
                yield (*down, cell, *up)


def oracle_tilings(
    diagram: SimpleDiagram, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[Decomposition]:
    """Independent tiling search: cover the least uncovered cell by every
    possible n-cell strip and recurse.  Strip ids are the head diagonals."""
    if len(diagram.cells) % n:
        raise ValueError(f"{len(diagram.cells)} cells cannot be tiled by {n}-cell strips")
    budget.check_symbols(len(diagram.cells) // n)
    order = diagram.sorted_cells
    uncovered = set(diagram.cells)
    chosen: list[tuple[Cell, ...]] = []
    results: list[Decomposition] = []

    def record() -> None:
        assignment: dict[Cell, int] = {}
        for strip in chosen:
            head = max(strip, key=lambda cell: cell.content)
            sid = diagram.diagonal_index(head)
            for cell in strip:
                assignment[cell] = sid
        results.append(Decomposition(diagram, assignment))
        if len(results) > budget.hard_cap:
            raise BudgetExceededError(f"more than {budget.hard_cap} tilings")

    def search(start: int) -> None:
        while start < len(order) and order[start] not in uncovered:
            start += 1
        if start == len(order):
            record()
            return
        target = order[start]
        for strip in list(_strips_through(target, uncovered, n)):
            uncovered.difference_update(strip)
            chosen.append(strip)
            search(start + 1)
            chosen.pop()
            uncovered.update(strip)

    search(0)
    return results


def oracle_tableaux(
    diagram: SimpleDiagram, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[Tableau]:
    """Independent tableau search: label every tiling in all ways and keep
    the labelings that are weakly increasing along rows and columns."""
    tilings = oracle_tilings(diagram, n, budget)
    strip_count = len(diagram.cells) // n
    if factorial(strip_count) * max(len(tilings), 1) > budget.hard_cap:
        raise BudgetExceededError("labeling search exceeds the budget")
    adjacency = []
    for cell in diagram.sorted_cells:
        for nxt in (Cell(cell.row, cell.col + 1), Cell(cell.row + 1, cell.col)):
            if nxt in diagram.cells:
                adjacency.append((cell, nxt))
    results: list[Tableau] = []
    for dec in tilings:
        sids = dec.strip_ids()
        for labeling in all_permutations(range(1, strip_count + 1)):
            label_of = dict(zip(sids, labeling))
            labels = {cell: label_of[sid] for cell, sid in dec.assignment.items()}
            if all(labels[a] <= labels[b] for a, b in adjacency):
                results.append(Tableau(diagram, labels))
    return results
