"""Simple diagrams: shapes grown from an n x n square by a word over {r, c}.

A word letter prepends either a length-n column on the left (``c``) or a
length-n row at the bottom (``r``).  The square is pinned at rows 1..n,
cols 1..n and never re-translated, so the diagonal index

    d(cell) = content(cell) + k + 1        (content = col - row)

is stable: the unique top-right cell always sits in diagonal n + k.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    row: int  # grows downward
    col: int  # grows rightward

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class Word:
    """A finite sequence over {r, c}; the empty word is ``Word()``."""

    letters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter not in ("r", "c"):
                raise ValueError(f"word letters must be 'r' or 'c', got {letter!r}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(tuple(text))

    def __str__(self) -> str:
        return "".join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    @property
    def c_count(self) -> int:
        return self.letters.count("c")

    @property
    def r_count(self) -> int:
        return self.letters.count("r")

    def reversed(self) -> "Word":
        return Word(self.letters[::-1])

    def swapped(self) -> "Word":
        """Exchange r and c letterwise (transposes the diagram)."""
        return Word(tuple("c" if x == "r" else "r" for x in self.letters))

    def display(self) -> str:
        return str(self) or "∅"


def hor_statistic(word: Word) -> int:
    """c-count minus r-count; large absolute value means a straighter shape."""
    return word.c_count - word.r_count


def isometry_orbit(word: Word) -> frozenset[Word]:
    """Orbit of a word under letter swap and reversal (size divides 4)."""
    return frozenset(
        {word, word.reversed(), word.swapped(), word.swapped().reversed()}
    )


@dataclass(frozen=True)
class SimpleDiagram:
    word: Word
    n: int
    cells: frozenset[Cell]

    @property
    def k(self) -> int:
        return len(self.word)

    @property
    def symbols(self) -> int:
        """n + k: the number of diagonals that carry strip heads."""
        return self.n + self.k

    def diagonal_index(self, cell: Cell) -> int:
        return cell.content + self.k + 1

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @cached_property
    def _by_diagonal(self) -> dict[int, tuple[Cell, ...]]:
        buckets: dict[int, list[Cell]] = {}
        for cell in self.sorted_cells:
            buckets.setdefault(self.diagonal_index(cell), []).append(cell)
        # row-major sort already orders each diagonal by increasing row
        return {d: tuple(cs) for d, cs in sorted(buckets.items())}

    def diagonals(self) -> tuple[int, ...]:
        """All nonempty diagonal indices, ascending."""
        return tuple(self._by_diagonal)

    def diagonal_cells(self, d: int) -> tuple[Cell, ...]:
        """Cells of diagonal d ordered by increasing row (topmost first)."""
        return self._by_diagonal.get(d, ())

    @cached_property
    def row_span(self) -> tuple[int, int]:
        rows = [cell.row for cell in self.cells]
        return min(rows), max(rows)

    @cached_property
    def col_span(self) -> tuple[int, int]:
        cols = [cell.col for cell in self.cells]
        return min(cols), max(cols)


def build_diagram(word: Word | str, n: int) -> SimpleDiagram:
    """Construct the simple diagram for (word, n).

    The square comes first; letters are applied innermost-first (last letter
    of the word first), so the first letter is the outermost addition.
    """
    if isinstance(word, str):
        word = Word.parse(word)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    cells = {Cell(r, c) for r in range(1, n + 1) for c in range(1, n + 1)}
    min_col, max_row = 1, n
    for letter in reversed(word.letters):
        if letter == "c":
            min_col -= 1
            cells.update(Cell(r, min_col) for r in range(max_row - n + 1, max_row + 1))
        else:
            max_row += 1
            cells.update(Cell(max_row, c) for c in range(min_col, min_col + n))
    return SimpleDiagram(word, n, frozenset(cells))


PLAIN_GLYPH = "▪"
STRIP_GLYPHS = string.digits[1:] + string.ascii_uppercase + string.ascii_lowercase


def strip_glyph(strip_id: int) -> str:
    return STRIP_GLYPHS[(strip_id - 1) % len(STRIP_GLYPHS)]


def render_ascii(diagram: SimpleDiagram, decomposition=None) -> str:
    """Draw the diagram as a character grid, one glyph per cell.

    With a decomposition, each strip gets its own glyph (by strip id, so the
    output is deterministic).  The decomposition must belong to the diagram.
    """
    if decomposition is not None and decomposition.diagram != diagram:
        raise ValueError("decomposition does not belong to this diagram")
    lo_row, hi_row = diagram.row_span
    lo_col, hi_col = diagram.col_span
    lines = []
    for r in range(lo_row, hi_row + 1):
        chars = []
        for c in range(lo_col, hi_col + 1):
            cell = Cell(r, c)
            if cell not in diagram.cells:
                chars.append(" ")
            elif decomposition is None:
                chars.append(PLAIN_GLYPH)
            else:
                chars.append(strip_glyph(decomposition.assignment[cell]))
        lines.append("".join(chars).rstrip())
    return "\n".join(lines)


def diagram_to_json(diagram: SimpleDiagram) -> dict:
    return {
        "word": str(diagram.word),
        "n": diagram.n,
        "cells": [{"row": cell.row, "col": cell.col} for cell in diagram.sorted_cells],
    }


def diagram_from_json(data: dict) -> SimpleDiagram:
    diagram = build_diagram(Word.parse(data["word"]), int(data["n"]))
    cells = frozenset(Cell(int(c["row"]), int(c["col"])) for c in data["cells"])
    if cells != diagram.cells:
        raise ValueError("cell list does not match the diagram of (word, n)")
    return diagram
