"""
Growth Service - Fomin growth diagrams on nesting and crossing polyominoes
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Tuple

import networkx as nx

from app.models.errors import FillingError, LabelError, WrongTypeError
from app.models.integer_partition import (
    EMPTY,
    IntegerPartition,
    added_box,
    parse_partition,
    vertical_strip_steps,
)
from app.models.partition import CROSSING, NESTING, DIAGRAM_KINDS, Arc, arcs, blocks_from_arcs
from app.models.polyomino import Polyomino, make_filling, partition_filling_violations


@dataclass(frozen=True)
class BorderLabels:
    """
    Corner labels of a growth diagram.

    Corners are addressed as (x, y): x is a column boundary (0..n) and y the
    top boundary of row position y (2n is the bottom edge). The label of a
    corner describes the cells left of x and below y.
    """

    kind: str
    n: int
    staircase: Tuple[IntegerPartition, ...]
    corners: Dict[Tuple[int, int], IntegerPartition] = field(default_factory=dict, compare=False, hash=False)

    @property
    def top_edge(self):
        """Labels along the top of the lower square, left to right."""
        return tuple(self.corners[(x, self.n)] for x in range(self.n + 1))

    @property
    def right_edge(self):
        """Labels along the right edge of the square, bottom to top."""
        return tuple(self.corners[(self.n, 2 * self.n - x)] for x in range(self.n + 1))


def conjugate(label):
    return IntegerPartition(label).conjugate()


def staircase_corners(n):
    """Corners carrying λ_1, ..., λ_{2n-1}, top to bottom."""
    result = []
    for i in range(1, n):
        result.extend([(i, i), (i, i + 1)])
    result.append((n, n))
    return result


def _all_corners(n):
    return [(x, y) for x in range(n + 1) for y in range(max(x, 1), 2 * n + 1)]


def forward_rule(mu, rho, nu, entry):
    """
    Local forward rule for 0-1 fillings.

    Args:
        mu (IntegerPartition): Top-left corner
        rho (IntegerPartition): Bottom-left corner
        nu (IntegerPartition): Bottom-right corner
        entry (int): 0 or 1

    Returns:
        IntegerPartition: Top-right corner
    """
    if entry not in (0, 1):
        raise FillingError(f"Entry {entry} is not 0 or 1")
    if entry:
        if not mu == rho == nu:
            raise FillingError("A filled cell shares its row or column with another entry")
        return mu.add_box(0)
    if rho == mu:
        return nu
    if rho == nu:
        return mu
    if mu != nu:
        return mu.join(nu)
    row = added_box(rho, mu)
    if row is None:
        raise LabelError(f"{mu} is not {rho} plus one box")
    return mu.add_box(row + 1)


def backward_rule(mu, nu, lam):
    """
    Local backward rule for 0-1 fillings.

    Args:
        mu (IntegerPartition): Top-left corner
        nu (IntegerPartition): Bottom-right corner
        lam (IntegerPartition): Top-right corner

    Returns:
        tuple: (bottom-left corner, entry)
    """
    for side in (mu, nu):
        if side != lam and added_box(side, lam) is None:
            raise LabelError(f"{lam} is neither {side} nor {side} plus one box")
    if mu != nu:
        return mu.meet(nu), 0
    if lam == mu:
        return mu, 0
    row = added_box(mu, lam)
    if row == 0:
        return mu, 1
    return mu.remove_box(row - 1), 0


def grow_corners(n, values, rule):
    """
    Compute every corner label from the left and bottom edges (all ∅).

    Cells are processed bottom to top, left to right.

    Args:
        n (int): Rank
        values (dict): (column, row position) -> entry
        rule (callable): (mu, rho, nu, entry) -> top-right label

    Returns:
        dict: Corner -> label
    """
    corners = {(0, y): EMPTY for y in range(1, 2 * n + 1)}
    corners.update({(x, 2 * n): EMPTY for x in range(n + 1)})
    for y in range(2 * n - 1, 0, -1):
        for c in range(1, min(n, y) + 1):
            corners[(c, y)] = rule(
                corners[(c - 1, y)], corners[(c - 1, y + 1)], corners[(c, y + 1)], values.get((c, y), 0)
            )
    return corners


def shrink_corners(n, staircase, square_edge, rule):
    """
    Recover entries from the staircase labels.

    The upper rows are processed top-down, right to left; the right edge of
    the lower square is derived from its top edge by square_edge.

    Args:
        n (int): Rank
        staircase (sequence): λ_1, ..., λ_{2n-1}
        square_edge (callable): top edge T_0..T_n -> right edge R_0..R_n (bottom to top)
        rule (callable): (mu, nu, lam) -> (rho, entry)

    Returns:
        tuple: (corners dict, values dict keyed by (column, row position))

    Raises:
        LabelError: If the left or bottom edge does not come out empty
    """
    corners = dict(zip(staircase_corners(n), staircase))
    corners[(0, 1)] = EMPTY
    values = {}

    def step(c, y):
        rho, value = rule(corners[(c - 1, y)], corners[(c, y + 1)], corners[(c, y)])
        corners[(c - 1, y + 1)] = rho
        if value:
            values[(c, y)] = value

    for y in range(1, n):
        for c in range(y, 0, -1):
            step(c, y)
    top = [corners[(x, n)] for x in range(n + 1)]
    right = list(square_edge(top))
    if right[n] != top[n]:
        raise LabelError("Right edge of the square does not meet its top edge")
    for x, label in enumerate(right):
        corners[(n, 2 * n - x)] = label
    for y in range(n, 2 * n):
        for c in range(n, 0, -1):
            step(c, y)
    if any(corners[(0, y)] for y in range(1, 2 * n + 1)) or any(corners[(x, 2 * n)] for x in range(n + 1)):
        raise LabelError("Labels do not come from a filling: left or bottom edge is not empty")
    return corners, values


def _check_kind(kind):
    if kind not in DIAGRAM_KINDS:
        raise FillingError(f"Unknown polyomino kind: {kind}")


def _positions(filling):
    polyomino = filling.polyomino
    return {(c, polyomino.row_position(row)): value for (c, row), value in filling.entries}


def _filling_from_positions(kind, n, values):
    polyomino = Polyomino(kind, n)
    return make_filling(kind, n, {(c, polyomino.row_label(y)): v for (c, y), v in values.items()})


def _staircase(corners, n):
    return tuple(corners[corner] for corner in staircase_corners(n))


def partition_to_filling(partition, kind):
    """
    Place a one in every cell (i, j) with (i, j) an arc of the partition, i > 0.

    Args:
        partition (SetPartition): Type C partition
        kind (str): 'nesting' or 'crossing'

    Returns:
        Filling: The partition-filling
    """
    if partition.ctype != "C":
        raise WrongTypeError(f"Polyomino fillings encode type C partitions, got {partition.ctype}")
    _check_kind(kind)
    cells = {(arc.opener, arc.closer): 1 for arc in arcs(partition) if arc.opener > 0}
    return make_filling(kind, partition.n, cells)


def filling_to_partition(filling):
    """
    Read a type C partition off a partition-filling.

    Args:
        filling (Filling): A partition-filling

    Returns:
        SetPartition: The type C partition whose arcs are the filled cells

    Raises:
        FillingError: If the filling violates a partition-filling condition
    """
    problems = partition_filling_violations(filling)
    if problems:
        raise FillingError("Not a partition-filling: " + "; ".join(problems))
    arc_list = []
    for cell in filling.support():
        arc = Arc(*cell)
        arc_list.extend([arc, arc.negate()])
    return blocks_from_arcs("C", filling.n, arc_list)


def _longest_se(points):
    points = list(points)
    if not points:
        return 0
    graph = nx.DiGraph()
    graph.add_nodes_from(points)
    graph.add_edges_from((u, v) for u in points for v in points if v[0] > u[0] and v[1] < u[1])
    return nx.dag_longest_path_length(graph) + 1


def greene_shape(points):
    """
    Shape whose first k parts sum to the largest union of k NE chains.

    A set of points with distinct coordinates is a union of k NE chains iff
    its longest SE chain has at most k points.

    Args:
        points (list): Points (x, y) with pairwise distinct x and y

    Returns:
        IntegerPartition: The Greene shape
    """
    points = list(points)
    sums = [0]
    k = 0
    while sums[-1] < len(points):
        k += 1
        for size in range(len(points), sums[-1], -1):
            if any(_longest_se(subset) <= k for subset in combinations(points, size)):
                sums.append(size)
                break
        else:
            sums.append(sums[-1])
    return IntegerPartition(b - a for a, b in zip(sums, sums[1:]))


def greene_labels(filling):
    """
    Brute-force corner labels from chain unions; the oracle for forward_growth.

    Args:
        filling (Filling): A 0-1 filling with at most one entry per row and column

    Returns:
        BorderLabels: Labels of every corner
    """
    n = filling.n
    positions = [(c, y) for (c, y), value in _positions(filling).items() if value]
    corners = {}
    for x, y in _all_corners(n):
        region = [(c, -p) for c, p in positions if c <= x and p >= y]
        corners[(x, y)] = greene_shape(region)
    return BorderLabels(filling.kind, n, _staircase(corners, n), corners)


def forward_growth(filling):
    """
    Corner labels of a 0-1 filling computed with the local forward rules.

    Args:
        filling (Filling): A partition-filling (or any 0-1 filling with at most
            one entry per row and column)

    Returns:
        BorderLabels: Staircase and corner labels
    """
    if not filling.is_zero_one():
        raise FillingError("forward_growth needs a 0-1 filling")
    corners = grow_corners(filling.n, _positions(filling), forward_rule)
    return BorderLabels(filling.kind, filling.n, _staircase(corners, filling.n), corners)


def is_vacillating(labels):
    """λ_0 = ∅, λ_1, ...: odd steps add a box or stay, even steps remove one or stay."""
    previous = EMPTY
    for index, label in enumerate(labels, start=1):
        small, big = (previous, label) if index % 2 else (label, previous)
        if small != big and added_box(small, big) is None:
            return False
        previous = label
    return True


def satisfies_parity(label, kind):
    """Nesting: at most one column of odd length. Crossing: at most one odd part."""
    parts = label.conjugate() if kind == NESTING else label
    return sum(1 for part in parts if part % 2) <= 1


def crossing_square_edge(top):
    """
    Right edge of the crossing square from its top edge.

    The top edge is refined into a standard chain (vertical strips added top
    to bottom), evacuated, and coarsened with the column sizes read in
    reverse order. For 0-1 fillings this is evacuation with the stationary
    steps mirrored.

    Args:
        top (sequence): T_0 = ∅, ..., T_n

    Returns:
        list: R_0, ..., R_n bottom to top
    """
    n = len(top) - 1
    chain = [top[0]]
    sizes = []
    for x in range(1, n + 1):
        try:
            steps = vertical_strip_steps(top[x - 1], top[x])
        except ValueError as e:
            raise LabelError(str(e)) from e
        chain.extend(steps[1:])
        sizes.append(len(steps) - 1)
    evacuated = evacuate(chain)
    right = [EMPTY]
    total = 0
    for height in range(1, n + 1):
        total += sizes[n - height]
        right.append(evacuated[total])
    return right


def backward_growth(labels, kind, n):
    """
    The partition-filling with the given staircase labels.

    Args:
        labels (sequence): λ_1, ..., λ_{2n-1}
        kind (str): 'nesting' or 'crossing'
        n (int): Rank

    Returns:
        Filling: The unique partition-filling of the kind's polyomino

    Raises:
        LabelError: If the labels are not vacillating, violate the parity
            condition or do not describe a partition-filling
    """
    _check_kind(kind)
    labels = tuple(IntegerPartition(label) for label in labels)
    if len(labels) != 2 * n - 1:
        raise LabelError(f"Expected {2 * n - 1} labels, got {len(labels)}")
    if not is_vacillating(labels):
        raise LabelError("Label sequence is not vacillating")
    if not satisfies_parity(labels[-1], kind):
        raise LabelError(f"Final label {labels[-1]} violates the {kind} parity condition")
    square_edge = (lambda top: top) if kind == NESTING else crossing_square_edge
    _, values = shrink_corners(n, labels, square_edge, backward_rule)
    filling = _filling_from_positions(kind, n, values)
    problems = partition_filling_violations(filling)
    if problems:
        raise LabelError("Labels do not describe a partition-filling: " + "; ".join(problems))
    return filling


def _tableau(chain):
    """Standard tableau (cell -> entry) of a strictly growing box chain."""
    tableau = {}
    for k in range(1, len(chain)):
        row = added_box(chain[k - 1], chain[k])
        tableau[(row, chain[k - 1].part(row))] = k
    return tableau


def _evacuate_tableau(tableau):
    current = dict(tableau)
    result = {}
    for k in range(len(tableau), 0, -1):
        hole = (0, 0)
        del current[hole]
        while True:
            r, c = hole
            right, below = current.get((r, c + 1)), current.get((r + 1, c))
            if right is None and below is None:
                break
            target = (r, c + 1) if below is None or (right is not None and right < below) else (r + 1, c)
            current[hole] = current.pop(target)
            hole = target
        result[hole] = k
    return result


def evacuate(chain):
    """
    Schützenberger evacuation of a (partial) standard Young tableau.

    Stationary steps are removed, the tableau is evacuated and the
    stationary steps are put back in the same places.

    Args:
        chain (sequence): ∅ = C_0, C_1, ...; each step adds one box or stays

    Returns:
        list: The evacuated chain, same length and final shape
    """
    chain = [IntegerPartition(label) for label in chain]
    if not chain or chain[0] != EMPTY:
        raise LabelError("A tableau chain starts at ∅")
    padding = set()
    for index in range(1, len(chain)):
        if chain[index] == chain[index - 1]:
            padding.add(index)
        elif added_box(chain[index - 1], chain[index]) is None:
            raise LabelError(f"{chain[index]} is not {chain[index - 1]} plus one box")
    strict = [chain[0]] + [chain[i] for i in range(1, len(chain)) if i not in padding]
    evacuated = _evacuate_tableau(_tableau(strict))
    shapes = [EMPTY]
    for k in range(1, len(strict)):
        row = next(r for (r, c), entry in evacuated.items() if entry == k)
        shapes.append(shapes[-1].add_box(row))
    result = [EMPTY]
    remaining = iter(shapes[1:])
    for index in range(1, len(chain)):
        result.append(result[-1] if index in padding else next(remaining))
    return result


def maxswap_map(partition):
    """
    Interchange maximal crossing and maximal nesting cardinalities (type C).

    Nesting filling, forward growth, conjugated staircase, backward growth
    in the crossing polyomino.

    Args:
        partition (SetPartition): Type C partition

    Returns:
        SetPartition: Partition with the same openers and closers
    """
    labels = forward_growth(partition_to_filling(partition, NESTING))
    swapped = backward_growth([conjugate(label) for label in labels.staircase], CROSSING, partition.n)
    return filling_to_partition(swapped)


def maxswap_inverse(partition):
    """Inverse of maxswap_map: crossing filling back to the nesting side."""
    labels = forward_growth(partition_to_filling(partition, CROSSING))
    swapped = backward_growth([conjugate(label) for label in labels.staircase], NESTING, partition.n)
    return filling_to_partition(swapped)


def longest_chain(filling):
    """
    Longest chain of filled cells of a polyomino filling.

    Nesting polyominoes use north-east chains. Crossing polyominoes use
    south-east chains whose smallest enclosing rectangle lies inside the
    polyomino, i.e. the cell in the last column and the first row exists.

    Args:
        filling (Filling): The filling (entries are counted once)

    Returns:
        int: Number of cells in a longest chain
    """
    points = list(_positions(filling))
    if not points:
        return 0
    if filling.kind == NESTING:
        graph = nx.DiGraph()
        graph.add_nodes_from(points)
        graph.add_edges_from((u, v) for u in points for v in points if v[0] > u[0] and v[1] < u[1])
        return nx.dag_longest_path_length(graph) + 1
    best = 0
    for first in points:
        members = [first] + [p for p in points if p[0] > first[0] and p[1] > first[1] and p[0] <= first[1]]
        graph = nx.DiGraph()
        graph.add_nodes_from(members)
        graph.add_edges_from((u, v) for u in members for v in members if v[0] > u[0] and v[1] > u[1])
        best = max(best, nx.dag_longest_path_length(graph) + 1)
    return best


def _addable_rows(label):
    return [row for row in range(len(label) + 1) if label.can_add(row)]


def _removable_rows(label):
    return [row for row in range(len(label)) if label.part(row + 1) < label.part(row)]


def vacillating_sequences(kind, n):
    """
    Every vacillating sequence λ_1, ..., λ_{2n-1} meeting the kind's parity rule.

    Args:
        kind (str): 'nesting' or 'crossing'
        n (int): Rank

    Yields:
        tuple: Label sequences
    """
    _check_kind(kind)
    length = 2 * n - 1

    def extend(sequence):
        if len(sequence) == length:
            if satisfies_parity(sequence[-1], kind):
                yield tuple(sequence)
            return
        last = sequence[-1] if sequence else EMPTY
        if len(sequence) % 2 == 0:
            options = [last] + [last.add_box(row) for row in _addable_rows(last)]
        else:
            options = [last] + [last.remove_box(row) for row in _removable_rows(last)]
        for option in options:
            yield from extend(sequence + [option])

    yield from extend([])


def format_labels(labels):
    """Render labels as '1;1;2;2;2,1'."""
    return ";".join(str(label) for label in labels)


def parse_labels(text):
    """
    Parse ';'-separated labels.

    Args:
        text (str): Labels such as '1;1;2;2;21;11'

    Returns:
        tuple: IntegerPartitions
    """
    try:
        return tuple(parse_partition(part) for part in text.split(";"))
    except ValueError as e:
        raise LabelError(f"Malformed label text: {e}") from e
