"""
Render - Arc diagrams of partitions and growth diagrams of fillings as SVG, TikZ or ASCII
"""

from html import escape

from app.models.errors import UnsupportedFormatError
from app.models.partition import NESTING, SetPartition, arcs, ground_set, order_key
from app.models.polyomino import Filling
from app.services.growth import format_labels, forward_growth, staircase_corners
from app.services.semistandard import semistandard_forward

FORMATS = ("svg", "tikz", "ascii")

SPACING = 40
MARGIN = 20
CELL = 36


def _check_format(fmt):
    if fmt not in FORMATS:
        raise UnsupportedFormatError(f"Unsupported format {fmt!r}; choose from {', '.join(FORMATS)}")


def diagram_elements(partition, kind=NESTING):
    """Ground elements in the order of the diagram kind; type B nesting diagrams include 0."""
    elements = list(ground_set(partition.ctype, partition.n))
    if partition.ctype == "B" and kind == NESTING:
        elements.append(0)
    return sorted(elements, key=order_key(kind, partition.n))


def _arc_spans(partition, kind):
    position = {x: index for index, x in enumerate(diagram_elements(partition, kind))}
    spans = []
    for arc in arcs(partition, kind):
        a, b = sorted((position[arc.opener], position[arc.closer]))
        spans.append((a, b, arc))
    return spans


def _levels(spans):
    """Heights for the ascii arcs: shorter arcs lower, overlapping arcs on different levels."""
    placed = []
    for a, b, arc in sorted(spans, key=lambda span: (span[1] - span[0], span[0])):
        level = 1 + max((lvl for pa, pb, lvl in placed if not (pb < a or b < pa)), default=0)
        placed.append((a, b, level))
    return {(a, b): level for a, b, level in placed}


def _partition_ascii(partition, kind):
    elements = diagram_elements(partition, kind)
    width = max(len(str(x)) for x in elements) + 2
    center = lambda index: index * width + width // 2
    spans = _arc_spans(partition, kind)
    levels = _levels(spans)
    height = max(levels.values(), default=0)
    grid = [[" "] * (len(elements) * width) for _ in range(height + 1)]
    for a, b, _ in spans:
        row = height - levels[(a, b)]
        for col in range(center(a), center(b) + 1):
            grid[row][col] = "-"
        grid[row][center(a)] = grid[row][center(b)] = "+"
    for a, b, _ in spans:
        for row in range(height - levels[(a, b)] + 1, height + 1):
            for col in (center(a), center(b)):
                grid[row][col] = "|" if grid[row][col] in (" ", "|") else "+"
    lines = ["".join(row).rstrip() for row in grid[:height]]
    lines.append("".join(str(x).center(width) for x in elements).rstrip())
    lines.append(f"{kind} diagram of {partition}")
    lines.append("arcs: " + " ".join(str(arc) for _, _, arc in spans))
    return "\n".join(lines) + "\n"


def _partition_svg(partition, kind):
    elements = diagram_elements(partition, kind)
    spans = _arc_spans(partition, kind)
    longest = max((b - a for a, b, _ in spans), default=0)
    width = 2 * MARGIN + SPACING * max(len(elements) - 1, 0)
    baseline = MARGIN + SPACING * longest / 2
    height = baseline + 2 * MARGIN
    x = lambda index: MARGIN + SPACING * index
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height:g}" '
        f'viewBox="0 0 {width} {height:g}" class="{kind}-diagram">',
        f'<line x1="{MARGIN}" y1="{baseline:g}" x2="{width - MARGIN}" y2="{baseline:g}" stroke="black"/>',
    ]
    for index, element in enumerate(elements):
        parts.append(f'<circle cx="{x(index)}" cy="{baseline:g}" r="3"/>')
        parts.append(
            f'<text x="{x(index)}" y="{baseline + 16:g}" text-anchor="middle" font-size="12">{escape(str(element))}</text>'
        )
    for a, b, arc in spans:
        radius = SPACING * (b - a) / 2
        parts.append(
            f'<path d="M {x(a)} {baseline:g} A {radius:g} {radius:g} 0 0 1 {x(b)} {baseline:g}" '
            f'fill="none" stroke="black"><title>{escape(str(arc))}</title></path>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _partition_tikz(partition, kind):
    elements = diagram_elements(partition, kind)
    last = max(len(elements) - 1, 0)
    lines = [r"\begin{tikzpicture}[scale=0.8]", rf"  \draw (0,0) -- ({last},0);"]
    for index, element in enumerate(elements):
        lines.append(rf"  \fill ({index},0) circle (1.5pt) node[below] {{\scriptsize ${element}$}};")
    for a, b, _ in _arc_spans(partition, kind):
        lines.append(rf"  \draw ({a},0) arc[start angle=180, end angle=0, radius={(b - a) / 2:g}];")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_partition(partition, kind=NESTING, fmt="ascii"):
    """
    Draw the nesting or crossing diagram of a partition.

    Args:
        partition (SetPartition): The partition
        kind (str): 'nesting' or 'crossing'
        fmt (str): 'svg', 'tikz' or 'ascii'

    Returns:
        str: The document
    """
    _check_format(fmt)
    if fmt == "svg":
        return _partition_svg(partition, kind)
    if fmt == "tikz":
        return _partition_tikz(partition, kind)
    return _partition_ascii(partition, kind)


def staircase_labels(filling):
    """Staircase labels of a filling, or None if no growth rule applies to it."""
    try:
        if filling.is_zero_one():
            return forward_growth(filling).staircase
        return semistandard_forward(filling).staircase
    except ValueError:
        return None


def _entry_text(value):
    return "X" if value == 1 else str(value)


def _filling_ascii(filling):
    polyomino = filling.polyomino
    values = filling.as_dict()
    row_width = max(len(str(row)) for row in polyomino.rows)
    lines = [f"{filling.kind} polyomino, n={filling.n}"]
    for row in polyomino.rows:
        cells = []
        for column in range(1, filling.n + 1):
            if polyomino.has_cell(column, row):
                cells.append(f"[{_entry_text(values.get((column, row), 0)) if (column, row) in values else ' '}]")
            else:
                cells.append("   ")
        lines.append(f"{str(row).rjust(row_width)} " + "".join(cells).rstrip())
    lines.append(" " * (row_width + 1) + "".join(f" {c} " for c in range(1, filling.n + 1)).rstrip())
    labels = staircase_labels(filling)
    if labels is not None:
        lines.append("corner labels: " + format_labels(labels))
    return "\n".join(lines) + "\n"


def _corner_points(filling):
    """Staircase corners in grid units (x right, y down from the top edge)."""
    return [(x, y - 1) for x, y in staircase_corners(filling.n)]


def _filling_svg(filling):
    polyomino = filling.polyomino
    values = filling.as_dict()
    n = filling.n
    width = 2 * MARGIN + CELL * (n + 1)
    height = 2 * MARGIN + CELL * (2 * n - 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" class="{filling.kind}-polyomino">'
    ]
    for column, row in polyomino.cells():
        left = MARGIN + CELL * (column - 1)
        top = MARGIN + CELL * (polyomino.row_position(row) - 1)
        parts.append(f'<rect x="{left}" y="{top}" width="{CELL}" height="{CELL}" fill="none" stroke="black"/>')
        value = values.get((column, row), 0)
        if value == 1:
            parts.append(
                f'<path d="M {left + 8} {top + 8} L {left + CELL - 8} {top + CELL - 8} '
                f'M {left + CELL - 8} {top + 8} L {left + 8} {top + CELL - 8}" stroke="black"/>'
            )
        elif value:
            parts.append(
                f'<text x="{left + CELL // 2}" y="{top + CELL // 2 + 5}" text-anchor="middle">{value}</text>'
            )
    labels = staircase_labels(filling)
    if labels is not None:
        for (x, y), label in zip(_corner_points(filling), labels):
            parts.append(
                f'<text x="{MARGIN + CELL * x + 4}" y="{MARGIN + CELL * y - 2}" font-size="10">{escape(str(label))}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _filling_tikz(filling):
    polyomino = filling.polyomino
    values = filling.as_dict()
    top = 2 * filling.n - 1
    lines = [r"\begin{tikzpicture}[scale=0.6]"]
    for column, row in polyomino.cells():
        y = top - polyomino.row_position(row)
        lines.append(rf"  \draw ({column - 1},{y}) rectangle ++(1,1);")
        value = values.get((column, row), 0)
        if value:
            mark = r"$\times$" if value == 1 else f"${value}$"
            lines.append(rf"  \node at ({column - 0.5:g},{y + 0.5:g}) {{{mark}}};")
    labels = staircase_labels(filling)
    if labels is not None:
        for (x, y), label in zip(_corner_points(filling), labels):
            lines.append(rf"  \node[above right] at ({x},{top - y}) {{\tiny ${label}$}};")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_filling(filling, fmt="ascii"):
    """
    Draw a filling with crosses for unit entries and its staircase corner labels.

    Args:
        filling (Filling): The filling
        fmt (str): 'svg', 'tikz' or 'ascii'

    Returns:
        str: The document
    """
    _check_format(fmt)
    if fmt == "svg":
        return _filling_svg(filling)
    if fmt == "tikz":
        return _filling_tikz(filling)
    return _filling_ascii(filling)


def render(obj, fmt="ascii", kind=NESTING):
    """
    Render a partition (as a kind diagram) or a filling.

    Args:
        obj (SetPartition or Filling): Object to draw
        fmt (str): 'svg', 'tikz' or 'ascii'
        kind (str): Diagram kind for partitions

    Returns:
        str: The document

    Raises:
        UnsupportedFormatError: For unknown formats or objects
    """
    if isinstance(obj, SetPartition):
        return render_partition(obj, kind, fmt)
    if isinstance(obj, Filling):
        return render_filling(obj, fmt)
    raise UnsupportedFormatError(f"Cannot render {type(obj).__name__}")
