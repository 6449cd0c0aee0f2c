"""Deterministic renderings of tree codes: dot, svg, or an ascii outline.

Layout quality is not a goal; embedding-order fidelity and byte-stable
output are. Accepts either a bare parenthesis code or a serialized
catalog line (`U:<code>` / `B:<code>`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .trees import RootedPlaneTree, decode

FORMATS = ("dot", "svg", "ascii")
LAYOUTS = ("layered", "radial")


@dataclass(frozen=True)
class RenderSpec:
    format: str
    layout: str
    code: str

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.layout not in LAYOUTS:
            raise ValueError(f"layout must be one of {LAYOUTS}, got {self.layout!r}")


def parse_code_argument(text: str) -> RootedPlaneTree:
    """Strip an optional centrality prefix and decode; MalformedCode on junk."""
    if text[:2] in ("U:", "B:"):
        text = text[2:]
    return decode(text)


def render(spec: RenderSpec) -> str:
    tree = parse_code_argument(spec.code)
    if spec.format == "ascii":
        return render_ascii(tree)
    if spec.format == "dot":
        return render_dot(tree)
    return render_svg(tree, layout=spec.layout)


def render_ascii(tree: RootedPlaneTree) -> str:
    """Indented outline, one vertex per line, children in stored order."""
    lines: list[str] = []

    def walk(node: RootedPlaneTree, depth: int) -> None:
        lines.append("  " * depth + "o")
        for child in node.children:
            walk(child, depth + 1)

    walk(tree, 0)
    return "\n".join(lines) + "\n"


def render_dot(tree: RootedPlaneTree) -> str:
    """Graphviz digraph; `ordering=out` keeps children in embedding order."""
    lines = ["digraph plane_tree {", "  graph [ordering=out];", "  node [shape=circle];"]
    edges: list[str] = []

    def walk(node: RootedPlaneTree, vid: int) -> int:
        lines.append(f'  n{vid} [label="{vid}"];')
        next_id = vid + 1
        for child in node.children:
            edges.append(f"  n{vid} -> n{next_id};")
            next_id = walk(child, next_id)
        return next_id

    walk(tree, 0)
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _radial_positions(tree: RootedPlaneTree) -> list[tuple[float, float]]:
    # children take angular wedges proportional to subtree size, preserving
    # their cyclic order around every vertex
    positions: list[tuple[float, float]] = []
    step = 60.0

    def place(node: RootedPlaneTree, depth: int, lo: float, hi: float) -> None:
        mid = (lo + hi) / 2.0
        r = step * depth
        positions.append((r * math.cos(mid), r * math.sin(mid)))
        total = max(node.vertex_count - 1, 1)
        angle = lo
        for child in node.children:
            span = (hi - lo) * child.vertex_count / total
            place(child, depth + 1, angle, angle + span)
            angle += span

    place(tree, 0, 0.0, 2.0 * math.pi)
    return positions


def _layered_positions(tree: RootedPlaneTree) -> list[tuple[float, float]]:
    # leaves get successive columns; inner vertices sit over their children
    positions: dict[int, tuple[float, float]] = {}
    next_column = [0]

    def place(node: RootedPlaneTree, vid: int, depth: int) -> tuple[int, float]:
        next_id = vid + 1
        child_xs: list[float] = []
        for child in node.children:
            next_id, x = place(child, next_id, depth + 1)
            child_xs.append(x)
        if child_xs:
            x = (child_xs[0] + child_xs[-1]) / 2.0
        else:
            x = float(next_column[0])
            next_column[0] += 1
        positions[vid] = (60.0 * x, 60.0 * depth)
        return next_id, x

    place(tree, 0, 0)
    return [positions[v] for v in range(len(positions))]


def render_svg(tree: RootedPlaneTree, layout: str = "radial") -> str:
    """Standalone svg document, one circle per vertex and one line per edge."""
    points = _radial_positions(tree) if layout == "radial" else _layered_positions(tree)
    pad = 20.0
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    min_x, min_y = min(xs) - pad, min(ys) - pad
    width = max(xs) - min_x + pad
    height = max(ys) - min_y + pad
    shifted = [(x - min_x, y - min_y) for x, y in points]

    edges: list[tuple[int, int]] = []

    def walk(node: RootedPlaneTree, vid: int) -> int:
        next_id = vid + 1
        for child in node.children:
            edges.append((vid, next_id))
            next_id = walk(child, next_id)
        return next_id

    walk(tree, 0)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" '
        f'height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}">',
    ]
    for a, b in edges:
        (x1, y1), (x2, y2) = shifted[a], shifted[b]
        lines.append(
            f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="black" stroke-width="1.5"/>'
        )
    for x, y in shifted:
        lines.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
