"""Sequence-pair placement of rectangles and SVG frames of a repacking sequence.

A sequence pair (p, q) over blocks [n] relates every two blocks a, b:

- a is left of b iff a precedes b in both p and q;
- a is below b iff a follows b in p and precedes b in q.

x-coordinates are longest weighted paths over the left-of constraint graph
(edge weight = width of the tail block), y-coordinates over the below graph
(edge weight = height).
"""

import logging
from collections.abc import Sequence
from enum import Enum
from pathlib import Path

import matplotlib
import networkx as nx
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from .consts import (
    FRAME_NAME_TEMPLATE,
    SVG_FILL,
    SVG_HASH_SALT,
    SVG_HIGHLIGHT_FILL,
    SVG_HIGHLIGHT_STROKE,
    SVG_MARGIN,
    SVG_SCALE,
    SVG_STROKE,
)
from .exceptions import (
    InvalidPathError,
    OutputError,
    ShapeMismatchError,
    WrongDimensionError,
)
from .models import Instance, MovePath, Permutation, Placement, RectSpec
from .path import replay, verify_path

logger = logging.getLogger("ulamk.seqpair")

# SVG user units per inch; matplotlib writes sizes in points.
_DPI = 72


class Relation(Enum):
    """Where block a lies relative to block b."""

    LEFT = "left"
    RIGHT = "right"
    BELOW = "below"
    ABOVE = "above"

    @property
    def inverse(self) -> "Relation":
        """Where b lies relative to a."""
        return _INVERSE[self]


_INVERSE = {
    Relation.LEFT: Relation.RIGHT,
    Relation.RIGHT: Relation.LEFT,
    Relation.BELOW: Relation.ABOVE,
    Relation.ABOVE: Relation.BELOW,
}


def relation(
    index_p: Sequence[int], index_q: Sequence[int], a: int, b: int
) -> Relation:
    """The relation of a to b given position tables of both permutations."""
    first = index_p[a] < index_p[b]
    second = index_q[a] < index_q[b]
    if first and second:
        return Relation.LEFT
    if not first and not second:
        return Relation.RIGHT
    if not first and second:
        return Relation.BELOW
    return Relation.ABOVE


def _longest_paths(graph: nx.DiGraph, sizes: Sequence[int]) -> list[int]:
    coords = dict.fromkeys(graph.nodes, 0)
    for u in nx.topological_sort(graph):
        for v in graph.successors(u):
            coords[v] = max(coords[v], coords[u] + sizes[u - 1])
    return [coords[b] for b in sorted(coords)]


def sp_place(sp: Sequence[Permutation], rects: RectSpec) -> Placement:
    """Decode a sequence pair into a non-overlapping placement.

    Args:
        sp: The two permutations (p, q) over [n].
        rects: Widths and heights of blocks 1..n.

    Returns:
        Lower-left corners of every block and the bounding box.

    Raises:
        ShapeMismatchError: If sp is not a pair over the same [n] as rects.
    """
    if len(sp) != 2 or sp[0].n != rects.n or sp[1].n != rects.n:
        raise ShapeMismatchError(
            f"Sequence pair of {[p.n for p in sp]} does not match {rects.n} blocks",
            suggestions=["Give two permutations of length n and n widths/heights"],
            context={"lengths": [p.n for p in sp], "blocks": rects.n},
        )
    p, q = sp
    n = rects.n
    horizontal = nx.DiGraph()
    vertical = nx.DiGraph()
    horizontal.add_nodes_from(range(1, n + 1))
    vertical.add_nodes_from(range(1, n + 1))

    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            rel = relation(p.index, q.index, a, b)
            assert relation(p.index, q.index, b, a) is rel.inverse
            if rel is Relation.LEFT:
                horizontal.add_edge(a, b)
            elif rel is Relation.RIGHT:
                horizontal.add_edge(b, a)
            elif rel is Relation.BELOW:
                vertical.add_edge(a, b)
            else:
                vertical.add_edge(b, a)

    x = _longest_paths(horizontal, rects.w)
    y = _longest_paths(vertical, rects.h)
    width = max(xb + wb for xb, wb in zip(x, rects.w, strict=True))
    height = max(yb + hb for yb, hb in zip(y, rects.h, strict=True))
    return Placement(x=tuple(x), y=tuple(y), width=width, height=height)


def find_overlaps(placement: Placement, rects: RectSpec) -> list[tuple[int, int]]:
    """Block pairs (a < b) whose rectangles share interior area."""
    overlaps = []
    for a in range(rects.n):
        for b in range(a + 1, rects.n):
            if (
                placement.x[a] < placement.x[b] + rects.w[b]
                and placement.x[b] < placement.x[a] + rects.w[a]
                and placement.y[a] < placement.y[b] + rects.h[b]
                and placement.y[b] < placement.y[a] + rects.h[a]
            ):
                overlaps.append((a + 1, b + 1))
    return overlaps


def _draw(placement: Placement, rects: RectSpec, highlight: int | None) -> Figure:
    width_px = placement.width * SVG_SCALE + 2 * SVG_MARGIN
    height_px = placement.height * SVG_SCALE + 2 * SVG_MARGIN
    fig = Figure(figsize=(width_px / _DPI, height_px / _DPI), dpi=_DPI)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(-SVG_MARGIN, placement.width * SVG_SCALE + SVG_MARGIN)
    ax.set_ylim(-SVG_MARGIN, placement.height * SVG_SCALE + SVG_MARGIN)
    ax.set_axis_off()

    for b in range(1, rects.n + 1):
        moved = b == highlight
        x0 = placement.x[b - 1] * SVG_SCALE
        y0 = placement.y[b - 1] * SVG_SCALE
        w = rects.w[b - 1] * SVG_SCALE
        h = rects.h[b - 1] * SVG_SCALE
        ax.add_patch(
            Rectangle(
                (x0, y0),
                w,
                h,
                facecolor=SVG_HIGHLIGHT_FILL if moved else SVG_FILL,
                edgecolor="black",
                linewidth=SVG_HIGHLIGHT_STROKE if moved else SVG_STROKE,
                gid=f"block-{b}",
            )
        )
        ax.text(x0 + w / 2, y0 + h / 2, str(b), ha="center", va="center")
    return fig


def render_frames(
    instance: Instance, path: MovePath, rects: RectSpec, out_dir: str | Path
) -> list[str]:
    """Write one SVG per tuple along ``path`` and return the file names.

    Frame i shows the placement of the i-th tuple; for i > 0 the block moved by
    the i-th move is highlighted. Output is byte-identical for identical input.

    Raises:
        WrongDimensionError: If the instance is not two-dimensional.
        InvalidPathError: If ``path`` does not verify against ``instance``.
        ShapeMismatchError: If rects does not cover the instance's n blocks.
        OutputError: If a frame cannot be written.
    """
    if instance.k != 2:
        raise WrongDimensionError(
            f"Frames need sequence pairs (k=2), got k={instance.k}",
            context={"k": instance.k},
        )
    verdict = verify_path(instance, path)
    if not verdict:
        raise InvalidPathError(
            f"Move path is invalid: {verdict.reason}",
            context={"reason": str(verdict.reason), "step": verdict.step},
        )

    states = replay(path)
    placements = [sp_place(state.dims, rects) for state in states]
    target = Path(out_dir)
    names = []
    try:
        target.mkdir(parents=True, exist_ok=True)
        with matplotlib.rc_context(
            {"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}
        ):
            for i, placement in enumerate(placements):
                highlight = path.moves[i - 1].element if i > 0 else None
                name = FRAME_NAME_TEMPLATE.format(i)
                fig = _draw(placement, rects, highlight)
                fig.savefig(target / name, format="svg", metadata={"Date": None})
                names.append(name)
    except OSError as e:
        raise OutputError(
            f"Cannot write frames to {target}: {e}",
            context={"out_dir": str(target)},
        ) from e

    logger.info(f"Wrote {len(names)} frames to {target}")
    return names
