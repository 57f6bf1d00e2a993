"""Figure rendering for diagrams, decompositions and count sequences.

Uses matplotlib's object API with no global state, so figures can be written
from headless CLI runs.  Everything drawn is exact data; figures are a
reporting surface only.
"""

from __future__ import annotations

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from .ribbon import Decomposition
from .shape import SimpleDiagram

_PALETTE = (
    "#4878cf", "#d65f5f", "#6acc65", "#b47cc7", "#c4ad66", "#77bedb",
    "#e5923d", "#8b8b8b", "#dc84c1", "#67c2a5", "#a56c49", "#d9c243",
)


def draw_diagram(
    diagram: SimpleDiagram,
    decomposition: Decomposition | None = None,
    path: str = "diagram.png",
    show_ids: bool = False,
) -> None:
    """Write a figure of the diagram, coloring strips if a decomposition is given."""
    if decomposition is not None and decomposition.diagram != diagram:
        raise ValueError("decomposition does not belong to this diagram")
    lo_row, hi_row = diagram.row_span
    lo_col, hi_col = diagram.col_span
    width = hi_col - lo_col + 1
    height = hi_row - lo_row + 1
    fig = Figure(figsize=(max(2.0, 0.45 * width), max(2.0, 0.45 * height)))
    ax = fig.add_subplot(111)
    for cell in diagram.sorted_cells:
        if decomposition is None:
            color = "#d8dde6"
        else:
            sid = decomposition.assignment[cell]
            color = _PALETTE[(sid - 1) % len(_PALETTE)]
        # rows grow downward, so flip to screen coordinates
        ax.add_patch(
            Rectangle(
                (cell.col, -cell.row), 1, 1, facecolor=color, edgecolor="black", linewidth=0.8
            )
        )
        if show_ids and decomposition is not None:
            ax.text(
                cell.col + 0.5,
                -cell.row + 0.5,
                str(decomposition.assignment[cell]),
                ha="center",
                va="center",
                fontsize=8,
            )
    ax.set_xlim(lo_col - 0.5, hi_col + 1.5)
    ax.set_ylim(-hi_row - 0.5, -lo_row + 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"({diagram.word.display()}, {diagram.n})")
    FigureCanvasAgg(fig).print_figure(path, dpi=150, bbox_inches="tight")


def draw_sequence(
    values: list[int],
    path: str = "sequence.png",
    start_index: int = 0,
    title: str = "",
    ylabel: str = "count",
) -> None:
    """Write a log-scale growth plot of an integer sequence."""
    fig = Figure(figsize=(5.0, 3.2))
    ax = fig.add_subplot(111)
    xs = list(range(start_index, start_index + len(values)))
    positive = [(x, v) for x, v in zip(xs, values) if v > 0]
    ax.plot([x for x, _ in positive], [float(v) for _, v in positive], "o-", color=_PALETTE[0])
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    FigureCanvasAgg(fig).print_figure(path, dpi=150, bbox_inches="tight")
