"""
Triangulation Service - Maximal fillings, symmetric k-triangulations and fans of Dyck paths

The fillings in this module live on the upper half of a polyomino: every cell
with a positive row label plus the square cells on or above the symmetry
diagonal, one cell per pair of mirror cells.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Tuple

import networkx as nx

from app.models.errors import CapExceededError, FillingError
from app.models.partition import CROSSING, NESTING, crossing_key
from app.models.polyomino import Polyomino, make_filling

DEFAULT_FILLING_CAP = 5
DEFAULT_FAN_CAP = 6


@dataclass(frozen=True)
class DyckFan:
    """
    k pairwise disjoint lattice paths in the nesting polyomino.

    Path t starts in the top cell of column t and takes 2n-2t unit steps,
    'S' (down) or 'E' (towards the symmetry diagonal), never more E than S
    steps so far. It ends on the diagonal.
    """

    n: int
    paths: Tuple[str, ...]

    @property
    def k(self):
        return len(self.paths)

    def path_points(self, t):
        """Plane coordinates of the cells visited by path t (1-based)."""
        return _path_points(self.n, t, self.paths[t - 1])


def _path_points(n, t, steps):
    x, y = t, 2 * n - t
    points = [(x, y)]
    for step in steps:
        x, y = (x, y - 1) if step == "S" else (x + 1, y)
        points.append((x, y))
    return points


def _check_cap(n, cap, what):
    if n > cap:
        raise CapExceededError(f"rank {n} exceeds the {what} cap {cap}")


def _check_half(filling):
    allowed = set(filling.polyomino.half_cells())
    stray = [cell for cell in filling.support() if cell not in allowed]
    if stray:
        raise FillingError(f"Cells {stray} lie outside the upper half of the polyomino")


def _longest_ne(points):
    points = list(points)
    if not points:
        return 0
    graph = nx.DiGraph()
    graph.add_nodes_from(points)
    graph.add_edges_from((u, v) for u in points for v in points if v[0] > u[0] and v[1] > u[1])
    return nx.dag_longest_path_length(graph) + 1


def _chain_through(points, point):
    x, y = point
    below = [(px, py) for px, py in points if px < x and py < y]
    above = [(px, py) for px, py in points if px > x and py > y]
    return 1 + _longest_ne(below) + _longest_ne(above)


def _rotate(diagonal):
    return frozenset(-v for v in diagonal)


def _cross(first, second, n):
    a1, a2 = sorted(crossing_key(v, n) for v in first)
    b1, b2 = sorted(crossing_key(v, n) for v in second)
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


@lru_cache(maxsize=None)
def _crossing_graph(n):
    vertices = list(range(1, n + 1)) + [-v for v in range(1, n + 1)]
    diagonals = [frozenset(pair) for pair in combinations(vertices, 2)]
    graph = nx.Graph()
    graph.add_nodes_from(diagonals)
    graph.add_edges_from((d, e) for d, e in combinations(diagonals, 2) if _cross(d, e, n))
    return graph


def _clique_size(graph, nodes):
    nodes = list(nodes)
    if not nodes:
        return 0
    _, weight = nx.max_weight_clique(graph.subgraph(nodes), weight=None)
    return weight


def _close(diagonals):
    closed = set()
    for diagonal in diagonals:
        diagonal = frozenset(diagonal)
        closed.update([diagonal, _rotate(diagonal)])
    return closed


def _rank_of(diagonals):
    return max((abs(v) for diagonal in diagonals for v in diagonal), default=1)


def max_crossing_of_diagonals(diagonals, n=None):
    """
    Size of a largest set of pairwise crossing diagonals.

    The set is first closed under rotation by 180 degrees. Vertices
    1, ..., n, -1, ..., -n are placed around the polygon in this order.

    Args:
        diagonals (iterable): Pairs of distinct vertices
        n (int, optional): Rank; defaults to the largest vertex

    Returns:
        int: Maximal crossing
    """
    closed = _close(diagonals)
    n = n or _rank_of(closed)
    return _clique_size(_crossing_graph(n), closed)


def diagonal_set(filling):
    """
    Rotation-closed diagonals encoded by a crossing filling: cell (i, j) gives {i, j} and {-i, -j}.

    Args:
        filling (Filling): Filling of a crossing polyomino

    Returns:
        frozenset: Diagonals as frozensets of two vertices
    """
    if filling.kind != CROSSING:
        raise FillingError("Diagonal sets are read off crossing fillings")
    return frozenset(_close(filling.support()))


def _half_cell(diagonal, n):
    a, b = sorted(diagonal, key=lambda v: crossing_key(v, n))
    if a < 0:
        a, b = sorted((-a, -b), key=lambda v: crossing_key(v, n))
    if b < 0 and a < -b:
        a, b = -b, -a
    return a, b


def filling_from_diagonals(n, diagonals):
    """
    Upper-half crossing filling with a one for every rotation class of diagonals.

    Args:
        n (int): Rank
        diagonals (iterable): Pairs of distinct vertices in ±[n]

    Returns:
        Filling: The filling
    """
    cells = {}
    for diagonal in _close(diagonals):
        if len(diagonal) != 2 or any(not 1 <= abs(v) <= n for v in diagonal):
            raise FillingError(f"{sorted(diagonal)} is not a diagonal of the {2 * n}-gon")
        cells[_half_cell(diagonal, n)] = 1
    return make_filling(CROSSING, n, cells)


def nesting_chain(filling):
    """Longest north-east chain of filled cells (support only)."""
    polyomino = filling.polyomino
    return _longest_ne([polyomino.coordinates(cell) for cell in filling.support()])


def filling_statistic(filling):
    """Chain length (nesting) or maximal crossing of the diagonal set (crossing)."""
    if filling.kind == NESTING:
        return nesting_chain(filling)
    return max_crossing_of_diagonals(diagonal_set(filling), filling.n)


def _through_function(kind, n):
    """Largest configuration that contains a given cell, within a cell set."""
    polyomino = Polyomino(kind, n)
    if kind == NESTING:
        def through(cells, cell):
            points = [polyomino.coordinates(c) for c in cells if c != cell]
            return _chain_through(points, polyomino.coordinates(cell))
        return through

    graph = _crossing_graph(n)

    def through(cells, cell):
        diagonal = frozenset(cell)
        present = _close(list(cells) + [cell])
        neighbours = [d for d in graph.neighbors(diagonal) if d in present]
        return 1 + _clique_size(graph, neighbours)
    return through


def _statistic_of_cells(kind, n, cells):
    return filling_statistic(make_filling(kind, n, {cell: 1 for cell in cells}))


def is_maximal_filling(filling, k):
    """
    True iff the statistic equals k and filling any empty half cell raises it.

    Args:
        filling (Filling): 0-1 filling supported on the upper half
        k (int): Target chain length or maximal crossing

    Returns:
        bool: Maximality
    """
    _check_half(filling)
    if filling_statistic(filling) != k:
        return False
    support = set(filling.support())
    through = _through_function(filling.kind, filling.n)
    return all(
        through(support, cell) > k for cell in filling.polyomino.half_cells() if cell not in support
    )


def _maximal_cell_sets(kind, n, k):
    """Backtracking over the cells that can take part in a configuration larger than k."""
    items = list(Polyomino(kind, n).half_cells())
    through = _through_function(kind, n)
    forced = frozenset(cell for cell in items if through(items, cell) <= k)
    free = [cell for cell in items if cell not in forced]

    def search(index, chosen, excluded):
        if index == len(free):
            if all(through(chosen, cell) > k for cell in excluded) and _statistic_of_cells(kind, n, chosen) == k:
                yield chosen
            return
        cell = free[index]
        if through(chosen, cell) <= k:
            yield from search(index + 1, chosen | {cell}, excluded)
        if through(chosen | set(free[index + 1:]), cell) > k:
            yield from search(index + 1, chosen, excluded + [cell])

    yield from search(0, forced, [])


def enumerate_maximal_fillings(kind, n, k, cap=DEFAULT_FILLING_CAP):
    """
    All maximal upper-half fillings of the kind with statistic k.

    Args:
        kind (str): 'nesting' or 'crossing'
        n (int): Rank
        k (int): Chain length or maximal crossing
        cap (int): Largest rank accepted

    Yields:
        Filling: Maximal fillings
    """
    _check_cap(n, cap, "filling")
    for cells in _maximal_cell_sets(kind, n, k):
        yield make_filling(kind, n, {cell: 1 for cell in cells})


def enumerate_triangulations(n, k, cap=DEFAULT_FILLING_CAP):
    """Symmetric k-triangulations of the 2n-gon as rotation-closed diagonal sets."""
    for filling in enumerate_maximal_fillings(CROSSING, n, k, cap):
        yield diagonal_set(filling)


def count_k_triangulations(n, k, cap=DEFAULT_FILLING_CAP):
    return sum(1 for _ in enumerate_triangulations(n, k, cap))


def count_maximal_fillings(n, k, cap=DEFAULT_FILLING_CAP):
    """Maximal nesting fillings with longest chain k."""
    return sum(1 for _ in enumerate_maximal_fillings(NESTING, n, k, cap))


def _paths(n, t):
    length = 2 * n - 2 * t

    def extend(steps, south, east):
        if len(steps) == length:
            yield steps
            return
        yield from extend(steps + "S", south + 1, east)
        if east + 1 <= south:
            yield from extend(steps + "E", south, east + 1)

    return list(extend("", 0, 0))


def enumerate_fans(n, k, cap=DEFAULT_FAN_CAP):
    """
    All symmetric fans of k non-intersecting Dyck paths.

    Args:
        n (int): Rank
        k (int): Number of paths, 0 <= k <= n
        cap (int): Largest rank accepted

    Yields:
        DyckFan: Fans in lexicographic order of their paths
    """
    _check_cap(n, cap, "fan")
    if not 0 <= k <= n:
        return

    def extend(paths, occupied):
        t = len(paths) + 1
        if t > k:
            yield DyckFan(n, tuple(paths))
            return
        for steps in _paths(n, t):
            points = set(_path_points(n, t, steps))
            if points & occupied:
                continue
            yield from extend(paths + [steps], occupied | points)

    yield from extend([], set())


def count_symmetric_fans(n, k, cap=DEFAULT_FAN_CAP):
    return sum(1 for _ in enumerate_fans(n, k, cap))


def fan_to_filling(fan):
    """
    Put a one in every cell a path of the fan visits.

    Args:
        fan (DyckFan): The fan

    Returns:
        Filling: Upper-half nesting filling
    """
    polyomino = Polyomino(NESTING, fan.n)
    cells = {}
    for t in range(1, fan.k + 1):
        for x, y in fan.path_points(t):
            cells[polyomino.cell_at(x, y)] = 1
    return make_filling(NESTING, fan.n, cells)


def filling_to_fan(filling):
    """
    Decode a maximal nesting filling into its fan.

    Paths are read one after the other, each stepping down whenever the
    cell below is filled and still unused.

    Args:
        filling (Filling): Maximal upper-half nesting filling

    Returns:
        DyckFan: The fan whose cells are the filled cells

    Raises:
        FillingError: If the filling is not maximal or not covered by a fan
    """
    if filling.kind != NESTING:
        raise FillingError("Fans live in nesting polyominoes")
    n = filling.n
    k = nesting_chain(filling)
    if not filling.is_zero_one() or not is_maximal_filling(filling, k):
        raise FillingError("Filling is not maximal")
    polyomino = filling.polyomino
    unused = {polyomino.coordinates(cell) for cell in filling.support()}
    paths = []
    for t in range(1, k + 1):
        x, y = t, 2 * n - t
        if (x, y) not in unused:
            raise FillingError(f"Top cell of column {t} is empty")
        unused.discard((x, y))
        steps, south, east = "", 0, 0
        while len(steps) < 2 * n - 2 * t:
            if (x, y - 1) in unused:
                y, south, steps = y - 1, south + 1, steps + "S"
            elif (x + 1, y) in unused and east + 1 <= south:
                x, east, steps = x + 1, east + 1, steps + "E"
            else:
                raise FillingError(f"Path {t} is blocked at cell {polyomino.cell_at(x, y)}")
            unused.discard((x, y))
        paths.append(steps)
    if unused:
        raise FillingError("Filled cells are not covered by the fan")
    return DyckFan(n, tuple(paths))


def compositions(m, l):
    """Ordered ways of writing m as l positive parts."""
    if l == 0:
        if m == 0:
            yield ()
        return
    for first in range(1, m - l + 2):
        for rest in compositions(m - first, l - 1):
            yield (first,) + rest


def replace_multiplicities(filling, composition):
    """
    Replace the non-zero entries of a filling, in cell order, by the parts of a composition.

    Args:
        filling (Filling): Filling with l non-zero entries
        composition (sequence): l positive integers

    Returns:
        Filling: Filling with the same support
    """
    support = filling.support()
    if len(support) != len(composition) or any(part < 1 for part in composition):
        raise FillingError(f"Composition {tuple(composition)} does not fit {len(support)} filled cells")
    return make_filling(filling.kind, filling.n, dict(zip(support, composition)))


def nml_counts(n, m, l, kind, k, cap=DEFAULT_FILLING_CAP):
    """
    Number of upper-half fillings with entry sum m, l non-zero entries and statistic k.

    The statistic of an arbitrary filling is that of its support, so every
    support is counted once per composition of m into l parts.

    Args:
        n (int): Rank
        m (int): Entry sum
        l (int): Number of non-zero entries
        kind (str): 'nesting' or 'crossing'
        k (int): Chain length or maximal crossing
        cap (int): Largest rank accepted

    Returns:
        int: The count
    """
    _check_cap(n, cap, "filling")
    ways = sum(1 for _ in compositions(m, l))
    if not ways:
        return 0
    cells = Polyomino(kind, n).half_cells()
    supports = sum(1 for support in combinations(cells, l) if _statistic_of_cells(kind, n, support) == k)
    return supports * ways


def crossing_witness(n):
    """
    Two diagonals that do not cross although the first crosses the rotation of the second.

    Args:
        n (int): Rank

    Returns:
        tuple: (first, second) as sorted vertex tuples
    """
    graph = _crossing_graph(n)
    for first, second in combinations(sorted(graph.nodes, key=sorted), 2):
        if not graph.has_edge(first, second) and graph.has_edge(first, _rotate(second)):
            return tuple(sorted(first)), tuple(sorted(second))
    raise ValueError(f"No such pair of diagonals for n = {n}")
