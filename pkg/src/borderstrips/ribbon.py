"""Border strips, decompositions and tableaux over simple diagrams.

A border strip covers a gap-free interval of contents, one cell per content,
with consecutive contents edge-adjacent.  In a decomposition every strip has
exactly n cells and is identified by the diagonal of its head, which is what
makes equality of decompositions canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .shape import Cell, SimpleDiagram


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


VALID = ValidationResult(True)


def is_border_strip(cells: Iterable[Cell]) -> bool:
    """True iff the cells form a ribbon: one cell per content over a gap-free
    content interval, consecutive contents edge-adjacent."""
    cell_set = set(cells)
    if not cell_set:
        return False
    by_content: dict[int, Cell] = {}
    for cell in cell_set:
        if cell.content in by_content:
            return False
        by_content[cell.content] = cell
    lo, hi = min(by_content), max(by_content)
    if hi - lo + 1 != len(cell_set):
        return False
    for t in range(lo, hi):
        a, b = by_content[t], by_content[t + 1]
        if b != Cell(a.row, a.col + 1) and b != Cell(a.row - 1, a.col):
            return False
    return True


@dataclass(frozen=True)
class BorderStrip:
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        if not is_border_strip(self.cells):
            raise ValueError("cells do not form a border strip")

    @cached_property
    def head(self) -> Cell:
        return max(self.cells, key=lambda cell: cell.content)

    @cached_property
    def tail(self) -> Cell:
        return min(self.cells, key=lambda cell: cell.content)

    def content_interval(self) -> tuple[int, int]:
        return self.tail.content, self.head.content


def head_tail(strip: BorderStrip) -> tuple[Cell, Cell]:
    return strip.head, strip.tail


class Decomposition:
    """A total assignment cell -> strip id over a simple diagram.

    Strip ids are head diagonals, so two decompositions are equal exactly
    when they tile the diagram the same way.
    """

    __slots__ = ("diagram", "assignment", "_key", "_strips")

    def __init__(self, diagram: SimpleDiagram, assignment: Mapping[Cell, int]):
        self.diagram = diagram
        self.assignment = dict(assignment)
        self._key = tuple(sorted((c.row, c.col, s) for c, s in self.assignment.items()))
        self._strips: dict[int, frozenset[Cell]] | None = None

    def strips(self) -> dict[int, frozenset[Cell]]:
        if self._strips is None:
            buckets: dict[int, list[Cell]] = {}
            for cell, sid in self.assignment.items():
                buckets.setdefault(sid, []).append(cell)
            self._strips = {sid: frozenset(cs) for sid, cs in buckets.items()}
        return self._strips

    def strip_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.strips()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Decomposition)
            and self.diagram == other.diagram
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash((self.diagram.word, self.diagram.n, self._key))

    def __repr__(self) -> str:
        return (
            f"Decomposition(({self.diagram.word.display()}, {self.diagram.n}), "
            f"{len(self.strips())} strips)"
        )


class Tableau:
    """A total labeling cell -> value over a simple diagram."""

    __slots__ = ("diagram", "labels", "_key")

    def __init__(self, diagram: SimpleDiagram, labels: Mapping[Cell, int]):
        self.diagram = diagram
        self.labels = dict(labels)
        self._key = tuple(sorted((c.row, c.col, v) for c, v in self.labels.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tableau)
            and self.diagram == other.diagram
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash((self.diagram.word, self.diagram.n, self._key))

    def __repr__(self) -> str:
        return f"Tableau(({self.diagram.word.display()}, {self.diagram.n}))"

    def label_classes(self) -> dict[int, frozenset[Cell]]:
        buckets: dict[int, list[Cell]] = {}
        for cell, value in self.labels.items():
            buckets.setdefault(value, []).append(cell)
        return {v: frozenset(cs) for v, cs in buckets.items()}


def decomposition_of(tableau: Tableau) -> Decomposition:
    """Forget the labels: each label class becomes the strip of its head diagonal."""
    k = tableau.diagram.k
    assignment: dict[Cell, int] = {}
    for cells in tableau.label_classes().values():
        head = max(cells, key=lambda cell: cell.content)
        sid = head.content + k + 1
        for cell in cells:
            assignment[cell] = sid
    return Decomposition(tableau.diagram, assignment)


def validate_decomposition(candidate: Decomposition) -> ValidationResult:
    """Check all decomposition invariants; on failure, name the first one violated."""
    diagram = candidate.diagram
    covered = set(candidate.assignment)
    if covered != diagram.cells:
        missing = diagram.cells - covered
        if missing:
            return ValidationResult(False, f"assignment misses cell {min(missing)}")
        return ValidationResult(False, f"assignment covers foreign cell {min(covered - diagram.cells)}")
    strips = candidate.strips()
    expected = diagram.symbols
    if len(strips) != expected:
        return ValidationResult(False, f"expected {expected} strips, found {len(strips)}")
    n = diagram.n
    for sid, cells in sorted(strips.items()):
        if len(cells) != n:
            return ValidationResult(False, f"strip {sid} has {len(cells)} cells, expected {n}")
        if not is_border_strip(cells):
            return ValidationResult(False, f"strip {sid} is not a border strip")
        head = max(cells, key=lambda cell: cell.content)
        if diagram.diagonal_index(head) != sid:
            return ValidationResult(
                False,
                f"strip {sid} has its head in diagonal {diagram.diagonal_index(head)}",
            )
    order = inner_relation(candidate)
    for a, b in order.pairs:
        if (b, a) in order.pairs:
            return ValidationResult(False, f"strips {a} and {b} are mutually inner")
    return VALID


def validate_tableau(candidate: Tableau) -> ValidationResult:
    """Check weak row/column monotonicity and that every label class is an
    n-cell border strip."""
    diagram = candidate.diagram
    labels = candidate.labels
    if set(labels) != diagram.cells:
        return ValidationResult(False, "labels are not total over the diagram")
    top = diagram.symbols
    for cell, value in labels.items():
        if not 1 <= value <= top:
            return ValidationResult(False, f"label {value} at {cell} outside 1..{top}")
    for cell in diagram.sorted_cells:
        right = Cell(cell.row, cell.col + 1)
        if right in diagram.cells and labels[cell] > labels[right]:
            return ValidationResult(False, f"row decreases at {cell}")
        down = Cell(cell.row + 1, cell.col)
        if down in diagram.cells and labels[cell] > labels[down]:
            return ValidationResult(False, f"column decreases at {cell}")
    n = diagram.n
    for value, cells in sorted(candidate.label_classes().items()):
        if len(cells) != n:
            return ValidationResult(False, f"label {value} covers {len(cells)} cells, expected {n}")
        if not is_border_strip(cells):
            return ValidationResult(False, f"label {value} is not a border strip")
    return VALID


def _reachable(diagram: SimpleDiagram, seeds: frozenset[Cell]) -> set[Cell]:
    """All diagram cells reachable from the seeds by unit down/right steps."""
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        cell = stack.pop()
        for nxt in (Cell(cell.row + 1, cell.col), Cell(cell.row, cell.col + 1)):
            if nxt in diagram.cells and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def above(s1: int, s2: int, dec: Decomposition) -> bool:
    """True iff some cell of strip s1 reaches a cell of strip s2 moving only
    down or right through diagram cells."""
    strips = dec.strips()
    for sid in (s1, s2):
        if sid not in strips:
            raise ValueError(f"unknown strip id {sid}")
    if s1 == s2:
        return True
    return bool(_reachable(dec.diagram, strips[s1]) & strips[s2])


@dataclass(frozen=True)
class StripOrder:
    """The inner relation: transitive closure of 'above' on distinct strips."""

    pairs: frozenset[tuple[int, int]]  # (a, b) means strip a is inner to strip b

    def inner(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs

    def comparable(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self.pairs or (b, a) in self.pairs


def inner_relation(dec: Decomposition) -> StripOrder:
    strips = dec.strips()
    ids = sorted(strips)
    direct: dict[int, set[int]] = {}
    for sid in ids:
        reach = _reachable(dec.diagram, strips[sid])
        direct[sid] = {t for t in ids if t != sid and reach & strips[t]}
    # transitive closure over at most n + k nodes
    closure = {sid: set(direct[sid]) for sid in ids}
    changed = True
    while changed:
        changed = False
        for sid in ids:
            extra = set()
            for mid in closure[sid]:
                extra |= closure[mid] - closure[sid]
            if extra:
                extra.discard(sid)
                if extra:
                    closure[sid] |= extra
                    changed = True
    return StripOrder(frozenset((a, b) for a in ids for b in closure[a]))


def inversions_direct(dec: Decomposition) -> frozenset[tuple[int, int]]:
    """All inverted strip pairs: content intervals that meet or abut, first
    strip inner to the second, first head strictly higher.

    Strips on adjacent diagonals (intervals abutting rather than meeting)
    count as well; excluding them is incompatible with the insertion step
    behind the q-recursion.
    """
    strips = dec.strips()
    spans = {
        sid: (
            min(cell.content for cell in cells),
            max(cell.content for cell in cells),
        )
        for sid, cells in strips.items()
    }
    order = inner_relation(dec)
    inverted = set()
    for a, b in order.pairs:
        if a > b and spans[a][0] <= spans[b][1] + 1 and spans[b][0] <= spans[a][1] + 1:
            inverted.add((a, b))
    return frozenset(inverted)


def decomposition_to_json(dec: Decomposition) -> dict:
    from .shape import diagram_to_json

    data = diagram_to_json(dec.diagram)
    data["strips"] = [
        {"row": cell.row, "col": cell.col, "strip": dec.assignment[cell]}
        for cell in dec.diagram.sorted_cells
    ]
    return data


def decomposition_from_json(data: dict) -> Decomposition:
    from .shape import diagram_from_json

    diagram = diagram_from_json(data)
    assignment = {
        Cell(int(e["row"]), int(e["col"])): int(e["strip"]) for e in data["strips"]
    }
    return Decomposition(diagram, assignment)


def tableau_to_json(tab: Tableau) -> dict:
    from .shape import diagram_to_json

    data = diagram_to_json(tab.diagram)
    data["labels"] = [
        {"row": cell.row, "col": cell.col, "label": tab.labels[cell]}
        for cell in tab.diagram.sorted_cells
    ]
    return data


def tableau_from_json(data: dict) -> Tableau:
    from .shape import diagram_from_json

    diagram = diagram_from_json(data)
    labels = {Cell(int(e["row"]), int(e["col"])): int(e["label"]) for e in data["labels"]}
    return Tableau(diagram, labels)
