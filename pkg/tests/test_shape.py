"""Diagram construction, word statistics, rendering and JSON round trips."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borderstrips.shape import (
    Cell,
    Word,
    build_diagram,
    diagram_from_json,
    diagram_to_json,
    hor_statistic,
    isometry_orbit,
    render_ascii,
)
from borderstrips.ribbon import Decomposition


words = st.text(alphabet="rc", max_size=4).map(Word.parse)


def row_profile(diagram):
    rows = {}
    for cell in diagram.cells:
        rows.setdefault(cell.row, 0)
        rows[cell.row] += 1
    return [rows[r] for r in sorted(rows)]


def normalize(cells):
    lo_r = min(r for r, c in cells)
    lo_c = min(c for r, c in cells)
    return sorted((r - lo_r, c - lo_c) for r, c in cells)


def test_word_parsing_and_counts():
    w = Word.parse("rcrcc")
    assert str(w) == "rcrcc"
    assert w.c_count == 3 and w.r_count == 2
    assert len(Word.parse("")) == 0
    with pytest.raises(ValueError):
        Word.parse("rcx")


def test_square_base_case():
    d = build_diagram("", 2)
    assert d.cells == frozenset({Cell(1, 1), Cell(1, 2), Cell(2, 1), Cell(2, 2)})


def test_known_shape_rcrcc():
    # row counts 4, 5, 3, 2 with the top row indented one column
    d = build_diagram("rcrcc", 2)
    assert row_profile(d) == [4, 5, 3, 2]
    row1 = min(c for r, c in d.cells if r == 1)
    row2 = min(c for r, c in d.cells if r == 2)
    assert row1 == row2 + 1


def test_known_shape_crrc():
    d = build_diagram("crrc", 3)
    assert len(d.cells) == 21
    assert row_profile(d) == [4, 4, 5, 4, 4]
    row4 = sorted(cell for cell in d.cells if cell.row == 4)
    assert [d.diagonal_index(cell) for cell in row4] == [0, 1, 2, 3]
    row1 = sorted(cell for cell in d.cells if cell.row == 1)
    assert [d.diagonal_index(cell) for cell in row1] == [4, 5, 6, 7]


def test_rectangles():
    tall = build_diagram("r" * 3, 3)
    assert row_profile(tall) == [3] * 6
    wide = build_diagram("c" * 3, 3)
    assert row_profile(wide) == [6] * 3


def test_build_rejects_bad_n():
    with pytest.raises(ValueError):
        build_diagram("rc", 0)


def test_hor_statistic():
    assert hor_statistic(Word.parse("")) == 0
    assert hor_statistic(Word.parse("rcrcc")) == 1
    assert hor_statistic(Word.parse("cc")) == 2
    assert hor_statistic(Word.parse("rc")) == 0


def test_diagonal_cells_ordering():
    d = build_diagram("", 2)
    assert d.diagonal_cells(2) == (Cell(1, 2),)
    assert d.diagonal_cells(99) == ()
    crrc = build_diagram("crrc", 3)
    assert len(crrc.diagonal_cells(7)) == 1
    assert len(crrc.diagonal_cells(3)) == 3
    for idx in crrc.diagonals():
        cells = crrc.diagonal_cells(idx)
        assert list(cells) == sorted(cells, key=lambda cell: cell.row)


def test_isometry_orbits():
    assert isometry_orbit(Word.parse("")) == frozenset({Word.parse("")})
    assert isometry_orbit(Word.parse("rc")) == {Word.parse("rc"), Word.parse("cr")}
    assert isometry_orbit(Word.parse("rrc")) == {
        Word.parse(w) for w in ("rrc", "crr", "ccr", "rcc")
    }


@given(words)
def test_orbit_closed_under_generators(word):
    orbit = isometry_orbit(word)
    assert len(orbit) in (1, 2, 4)
    for member in orbit:
        assert member.swapped() in orbit
        assert member.reversed() in orbit


@given(words, st.integers(min_value=1, max_value=5))
@settings(max_examples=60)
def test_cell_count(word, n):
    assert len(build_diagram(word, n).cells) == n * (n + len(word))


@given(words, st.integers(min_value=1, max_value=4))
@settings(max_examples=60)
def test_diagonal_profile(word, n):
    # one cell on top, growth by one down to diagonal k, then n wide, then
    # shrinking by one below diagonal 1
    d = build_diagram(word, n)
    m, k = d.symbols, d.k
    assert d.diagonals() == tuple(range(2 - n, m + 1))
    for idx in d.diagonals():
        size = len(d.diagonal_cells(idx))
        if idx > k:
            assert size == m - idx + 1
        elif idx >= 1:
            assert size == n
        else:
            assert size == n + idx - 1


@given(words, st.integers(min_value=1, max_value=3))
@settings(max_examples=40)
def test_shape_isometries(word, n):
    cells = build_diagram(word, n).cells
    rotated = normalize([(-r, -c) for r, c in cells])
    assert rotated == normalize(build_diagram(word.reversed(), n).cells)
    # swap alone is the anti-diagonal mirror; with reversal it is the main one
    anti = normalize([(-c, -r) for r, c in cells])
    assert anti == normalize(build_diagram(word.swapped(), n).cells)
    main = normalize([(c, r) for r, c in cells])
    assert main == normalize(build_diagram(word.swapped().reversed(), n).cells)


def test_render_plain():
    assert render_ascii(build_diagram("", 1)) == "▪"
    art = render_ascii(build_diagram("rc", 2))
    assert [len(line) for line in art.splitlines()] == [3, 3, 2]


def test_render_with_decomposition():
    d = build_diagram("", 2)
    dec = Decomposition(
        d, {Cell(1, 1): 1, Cell(2, 1): 1, Cell(1, 2): 2, Cell(2, 2): 2}
    )
    art = render_ascii(d, dec)
    assert art.splitlines() == ["12", "12"]
    other = build_diagram("c", 2)
    with pytest.raises(ValueError):
        render_ascii(other, dec)


def test_diagram_json_round_trip():
    d = build_diagram("rc", 2)
    data = diagram_to_json(d)
    assert data["word"] == "rc" and data["n"] == 2
    assert data["cells"] == sorted(data["cells"], key=lambda e: (e["row"], e["col"]))
    assert diagram_from_json(data) == d
    data["cells"] = data["cells"][:-1]
    with pytest.raises(ValueError):
        diagram_from_json(data)


def test_cell_count_exhaustive():
    from itertools import product as iproduct

    for k in range(5):
        for letters in iproduct("cr", repeat=k):
            word = Word(letters)
            for n in range(1, 6):
                assert len(build_diagram(word, n).cells) == n * (n + k)
