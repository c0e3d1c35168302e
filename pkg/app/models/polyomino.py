"""
Polyomino - Nesting and crossing polyominoes and their fillings
"""

from dataclasses import dataclass
from typing import Tuple

from app.models.errors import FillingError
from app.models.partition import CROSSING, DIAGRAM_KINDS, NESTING


@dataclass(frozen=True)
class Polyomino:
    """
    Staircase of n columns with heights 2n-1, ..., n.

    Rows are listed top to bottom: 2..n followed by -n..-1 (nesting kind)
    or -1..-n (crossing kind). Row positions run 1..2n-1 from the top, and
    cell (i, j) exists iff j comes after i in the kind's order, i.e. iff
    row_position(j) >= i.
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in DIAGRAM_KINDS:
            raise FillingError(f"Unknown polyomino kind: {self.kind}")
        if self.n < 1:
            raise FillingError("Polyomino rank must be positive")

    @property
    def rows(self):
        """Row labels from top to bottom."""
        n = self.n
        upper = list(range(2, n + 1))
        if self.kind == NESTING:
            return tuple(upper + [-j for j in range(n, 0, -1)])
        return tuple(upper + [-j for j in range(1, n + 1)])

    def row_position(self, label):
        return self.rows.index(label) + 1

    def row_label(self, position):
        return self.rows[position - 1]

    def height(self, label):
        """Height of a row counted from the bottom row (height 1)."""
        return 2 * self.n - self.row_position(label)

    def has_cell(self, column, row):
        return 1 <= column <= self.n and row in self.rows and self.row_position(row) >= column

    def cells(self):
        """All cells as (column, row label), column by column, top to bottom."""
        return tuple((i, row) for i in range(1, self.n + 1) for row in self.rows if self.has_cell(i, row))

    def is_square_cell(self, cell):
        return cell[1] < 0

    def partner(self, cell):
        """Mirror image of a square cell: (i, -j) <-> (j, -i)."""
        i, row = cell
        if row > 0:
            return cell
        return (-row, -i)

    def on_diagonal(self, cell):
        return cell[1] == -cell[0]

    def half_cells(self):
        """
        One cell per mirror pair: every upper cell plus the square cells on
        or above the symmetry diagonal.

        Returns:
            tuple: Cells (column, row label)
        """
        result = []
        for i, row in self.cells():
            if row > 0:
                result.append((i, row))
            elif self.kind == NESTING and i <= -row:
                result.append((i, row))
            elif self.kind == CROSSING and i >= -row:
                result.append((i, row))
        return tuple(result)

    def coordinates(self, cell):
        """Plane coordinates (x, y) of a cell, x = column, y = height."""
        return cell[0], self.height(cell[1])

    def cell_at(self, x, y):
        """Inverse of coordinates."""
        return x, self.row_label(2 * self.n - y)


@dataclass(frozen=True)
class Filling:
    """
    Non-negative integer filling of a polyomino, stored sparsely.

    entries holds ((column, row), value) for non-zero values, sorted.
    """

    polyomino: Polyomino
    entries: Tuple[Tuple[Tuple[int, int], int], ...]

    @property
    def kind(self):
        return self.polyomino.kind

    @property
    def n(self):
        return self.polyomino.n

    def entry(self, cell):
        for key, value in self.entries:
            if key == cell:
                return value
        return 0

    def as_dict(self):
        return dict(self.entries)

    def support(self):
        return tuple(cell for cell, _ in self.entries)

    def total(self):
        return sum(value for _, value in self.entries)

    def is_zero_one(self):
        return all(value == 1 for _, value in self.entries)


def make_filling(kind, n, entries):
    """
    Build a filling from a mapping or iterable of (cell, value).

    Args:
        kind (str): 'nesting' or 'crossing'
        n (int): Rank
        entries (dict or iterable): Cell -> non-negative integer

    Returns:
        Filling: The validated filling

    Raises:
        FillingError: If a cell is outside the polyomino or a value is negative
    """
    polyomino = Polyomino(kind, n)
    items = entries.items() if isinstance(entries, dict) else entries
    cleaned = {}
    for cell, value in items:
        cell = (int(cell[0]), int(cell[1]))
        if not polyomino.has_cell(*cell):
            raise FillingError(f"Cell {cell} is not in the {kind} polyomino of rank {n}")
        if int(value) < 0:
            raise FillingError(f"Negative entry {value} at {cell}")
        if value:
            cleaned[cell] = cleaned.get(cell, 0) + int(value)
    return Filling(polyomino, tuple(sorted(cleaned.items(), key=_cell_order(polyomino))))


def _cell_order(polyomino):
    return lambda item: (item[0][0], polyomino.row_position(item[0][1]))


def partition_filling_violations(filling):
    """
    List the partition-filling conditions a filling violates.

    Conditions: entries are 0 or 1 with at most one non-zero entry per row
    and per column; the square part is mirror symmetric; at most one entry
    sits on the symmetry diagonal.

    Args:
        filling (Filling): The filling

    Returns:
        list: Messages, empty if the filling is a partition-filling
    """
    problems = []
    if not filling.is_zero_one():
        problems.append("entries must be 0 or 1")
    columns, rows = {}, {}
    for (i, row), _ in filling.entries:
        columns[i] = columns.get(i, 0) + 1
        rows[row] = rows.get(row, 0) + 1
    if any(count > 1 for count in columns.values()):
        problems.append("more than one entry in a column")
    if any(count > 1 for count in rows.values()):
        problems.append("more than one entry in a row")
    support = set(filling.support())
    polyomino = filling.polyomino
    for cell in support:
        if polyomino.is_square_cell(cell) and polyomino.partner(cell) not in support:
            problems.append(f"square entry {cell} has no mirror entry")
            break
    if sum(1 for cell in support if polyomino.on_diagonal(cell)) > 1:
        problems.append("more than one entry on the diagonal")
    return problems


def is_partition_filling(filling):
    return not partition_filling_violations(filling)


def to_text(filling):
    """Header 'kind n' followed by one 'col,row,entry' line per non-zero cell."""
    lines = [f"{filling.kind} {filling.n}"]
    lines.extend(f"{i},{row},{value}" for (i, row), value in filling.entries)
    return "\n".join(lines) + "\n"


def from_text(text):
    """
    Parse the sparse filling text format.

    Args:
        text (str): Filling text

    Returns:
        Filling: The parsed filling
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FillingError("Empty filling text")
    try:
        kind, n = lines[0].split()
        entries = []
        for line in lines[1:]:
            i, row, value = (int(part) for part in line.split(","))
            entries.append(((i, row), value))
        return make_filling(kind, int(n), entries)
    except ValueError as e:
        if isinstance(e, FillingError):
            raise
        raise FillingError(f"Malformed filling text: {e}") from e
