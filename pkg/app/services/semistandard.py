"""
Semistandard Growth - Growth diagrams for fillings with arbitrary non-negative entries

A cell with entry m is standardized into a small block of 0-1 cells: m unit
entries forming a north-east chain (nesting) or south-east chain (crossing),
next to the rows and columns contributed by neighbouring entries. Labels then
change by horizontal strips (nesting) or vertical strips (crossing).
"""

from app.models.errors import FillingError, LabelError
from app.models.integer_partition import (
    IntegerPartition,
    horizontal_strip_steps,
    is_horizontal_strip,
    is_vertical_strip,
    vertical_strip_steps,
)
from app.models.partition import CROSSING, NESTING
from app.models.polyomino import Polyomino, make_filling
from app.services.growth import (
    BorderLabels,
    backward_rule,
    conjugate,
    crossing_square_edge,
    forward_rule,
    grow_corners,
    shrink_corners,
    staircase_corners,
)


def _strip_steps(kind, small, big):
    try:
        if kind == NESTING:
            return horizontal_strip_steps(small, big)
        return vertical_strip_steps(small, big)
    except ValueError as e:
        raise LabelError(str(e)) from e


def _edge(kind, small, big, m):
    """Block edge from small to big: the strip first (nesting) or last (crossing), m stationary steps."""
    steps = _strip_steps(kind, small, big)
    if kind == NESTING:
        return steps + [big] * m
    return [small] * m + steps


def _units(kind, m, p, q):
    """Block positions (column, row from bottom) of the m unit entries."""
    if kind == NESTING:
        return {(q + t, p + t) for t in range(1, m + 1)}
    return {(t, m + 1 - t) for t in range(1, m + 1)}


def forward_block(kind, mu, rho, nu, m):
    """
    Top-right label of a cell with entry m.

    Args:
        kind (str): 'nesting' or 'crossing'
        mu (IntegerPartition): Top-left corner
        rho (IntegerPartition): Bottom-left corner
        nu (IntegerPartition): Bottom-right corner
        m (int): Entry

    Returns:
        IntegerPartition: Top-right corner
    """
    q, p = nu.size - rho.size, mu.size - rho.size
    units = _units(kind, m, p, q)
    grid = {}
    for a, label in enumerate(_edge(kind, rho, nu, m)):
        grid[(a, 0)] = label
    for b, label in enumerate(_edge(kind, rho, mu, m)):
        grid[(0, b)] = label
    width, height = q + m, p + m
    for b in range(1, height + 1):
        for a in range(1, width + 1):
            grid[(a, b)] = forward_rule(grid[(a - 1, b)], grid[(a - 1, b - 1)], grid[(a, b - 1)], int((a, b) in units))
    return grid[(width, height)]


def backward_block(kind, mu, nu, lam):
    """
    Bottom-left label and entry of a cell from its other three corners.

    Args:
        kind (str): 'nesting' or 'crossing'
        mu (IntegerPartition): Top-left corner
        nu (IntegerPartition): Bottom-right corner
        lam (IntegerPartition): Top-right corner

    Returns:
        tuple: (bottom-left corner, entry)

    Raises:
        LabelError: If no cell produces these labels
    """
    width, height = lam.size - mu.size, lam.size - nu.size
    if width < 0 or height < 0:
        raise LabelError(f"{lam} is smaller than {mu} or {nu}")
    grid = {}
    for a, label in enumerate(_strip_steps(kind, mu, lam)):
        grid[(a, height)] = label
    for b, label in enumerate(_strip_steps(kind, nu, lam)):
        grid[(width, b)] = label
    units = set()
    for b in range(height, 0, -1):
        for a in range(width, 0, -1):
            rho, entry = backward_rule(grid[(a - 1, b)], grid[(a, b - 1)], grid[(a, b)])
            grid[(a - 1, b - 1)] = rho
            if entry:
                units.add((a, b))
    m = len(units)
    q, p = width - m, height - m
    rho = grid[(0, 0)]
    if q < 0 or p < 0 or units != _units(kind, m, p, q):
        raise LabelError("Labels do not standardize to a single cell entry")
    bottom = [grid[(a, 0)] for a in range(width + 1)]
    left = [grid[(0, b)] for b in range(height + 1)]
    if bottom != _edge(kind, rho, nu, m) or left != _edge(kind, rho, mu, m):
        raise LabelError("Labels do not standardize to a single cell entry")
    return rho, m


def _check_symmetric(filling):
    polyomino = filling.polyomino
    values = filling.as_dict()
    for cell, value in values.items():
        if polyomino.is_square_cell(cell) and values.get(polyomino.partner(cell), 0) != value:
            return False
    return True


def _is_strip(kind, small, big):
    return is_horizontal_strip(small, big) if kind == NESTING else is_vertical_strip(small, big)


def is_strip_chain(labels, kind):
    """λ_0 = ∅, λ_1, ...: odd steps add a strip of the kind, even steps remove one."""
    previous = IntegerPartition()
    for index, label in enumerate(labels, start=1):
        small, big = (previous, label) if index % 2 else (label, previous)
        if not _is_strip(kind, small, big):
            return False
        previous = label
    return True


def semistandard_forward(filling):
    """
    Staircase labels of a filling with arbitrary non-negative entries.

    Args:
        filling (Filling): Filling whose lower square is mirror symmetric

    Returns:
        BorderLabels: Staircase and corner labels (strip chains)
    """
    if not _check_symmetric(filling):
        raise FillingError("The lower square of the filling is not mirror symmetric")
    polyomino = filling.polyomino
    kind, n = filling.kind, filling.n
    values = {(c, polyomino.row_position(row)): value for (c, row), value in filling.entries}
    corners = grow_corners(n, values, lambda mu, rho, nu, m: forward_block(kind, mu, rho, nu, m))
    return BorderLabels(kind, n, tuple(corners[c] for c in staircase_corners(n)), corners)


def semistandard_backward(labels, kind, n):
    """
    The symmetric filling with the given strip-chain staircase labels.

    Args:
        labels (sequence): λ_1, ..., λ_{2n-1}
        kind (str): 'nesting' or 'crossing'
        n (int): Rank

    Returns:
        Filling: Filling of the kind's polyomino

    Raises:
        LabelError: If the labels are not a strip chain of the kind
    """
    labels = tuple(IntegerPartition(label) for label in labels)
    if len(labels) != 2 * n - 1:
        raise LabelError(f"Expected {2 * n - 1} labels, got {len(labels)}")
    if not is_strip_chain(labels, kind):
        raise LabelError(f"Labels are not a {kind} strip chain")
    square_edge = (lambda top: top) if kind == NESTING else crossing_square_edge
    _, values = shrink_corners(n, labels, square_edge, lambda mu, nu, lam: backward_block(kind, mu, nu, lam))
    polyomino = Polyomino(kind, n)
    filling = make_filling(kind, n, {(c, polyomino.row_label(y)): v for (c, y), v in values.items()})
    if not _check_symmetric(filling):
        raise LabelError("Labels describe a filling whose square is not symmetric")
    return filling


def semistandard_swap(filling):
    """
    Nesting filling to crossing filling through conjugated semistandard labels.

    Args:
        filling (Filling): Symmetric nesting filling

    Returns:
        Filling: Symmetric crossing filling with the same entry sum
    """
    if filling.kind != NESTING:
        raise FillingError("semistandard_swap starts from a nesting filling")
    labels = semistandard_forward(filling)
    return semistandard_backward([conjugate(label) for label in labels.staircase], CROSSING, filling.n)
