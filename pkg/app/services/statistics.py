"""
Statistics Service - Crossings, nestings and their maximal cardinalities
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Tuple

import networkx as nx

from app.models.partition import (
    CROSSING,
    NESTING,
    Arc,
    arcs,
    closers,
    crossing_key,
    format_partition,
    nesting_key,
    openers,
)

CSV_COLUMNS = ("type", "n", "partition", "crossings", "nestings", "maxcross", "maxnest", "op", "cl")


@dataclass(frozen=True)
class PairStatistics:
    crossing_pairs: FrozenSet[Tuple[Arc, Arc]]
    nesting_pairs: FrozenSet[Tuple[Arc, Arc]]
    per_arc_crossings: Dict[Arc, int] = field(default_factory=dict)


def is_mirror(arc):
    """
    Mirror arcs run from a positive opener to a negative closer of smaller
    absolute value. Arcs opening at 0 are mirror, arcs closing at 0 are not.
    """
    if arc.opener == 0:
        return True
    return arc.opener > 0 and arc.closer < 0 and -arc.closer < arc.opener


def _runs_to_negative(arc):
    return arc.opener >= 0 and arc.closer <= 0


def _excluded_in_b(first, second):
    return (
        _runs_to_negative(first)
        and _runs_to_negative(second)
        and (is_mirror(first) or is_mirror(second))
    )


def _span(arc, key):
    a, b = key(arc.opener), key(arc.closer)
    return (a, b) if a < b else (b, a)


def _interleave(first, second):
    (a1, a2), (b1, b2) = first, second
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def _contain(first, second):
    (a1, a2), (b1, b2) = first, second
    return a1 < b1 < b2 < a2 or b1 < a1 < a2 < b2


def _pair_set(partition, kind, positive_only):
    n = partition.n
    if kind == CROSSING:
        key = lambda x: crossing_key(x, n)
        related = _interleave
    else:
        key = lambda x: nesting_key(x, n)
        related = _contain
    arc_list = [arc for arc in arcs(partition, kind) if not positive_only or arc.opener > 0]
    spans = {arc: _span(arc, key) for arc in arc_list}
    pairs = set()
    for index, first in enumerate(arc_list):
        for second in arc_list[index + 1:]:
            if not related(spans[first], spans[second]):
                continue
            if partition.ctype == "B" and _excluded_in_b(first, second):
                continue
            pairs.add((first, second))
    return frozenset(pairs)


def crossing_pairs(partition, positive_only=False):
    """
    Pairs of arcs that cross in the crossing diagram.

    Two arcs cross when their endpoints interleave strictly in the crossing
    order. For type B, pairs of arcs that both run from a positive opener to
    a negative closer are dropped when one of them is a mirror arc.

    Args:
        partition (SetPartition): The partition
        positive_only (bool): Only consider arcs with a positive opener

    Returns:
        frozenset: Pairs (first, second) with first the earlier arc
    """
    return _pair_set(partition, CROSSING, positive_only)


def nesting_pairs(partition, positive_only=False):
    """
    Pairs of arcs that nest in the nesting diagram (type B diagrams include 0).

    Args:
        partition (SetPartition): The partition
        positive_only (bool): Only consider arcs with a positive opener

    Returns:
        frozenset: Pairs (outer, inner)
    """
    return _pair_set(partition, NESTING, positive_only)


def crossings(partition, positive_only=False):
    return len(crossing_pairs(partition, positive_only))


def nestings(partition, positive_only=False):
    return len(nesting_pairs(partition, positive_only))


def arc_crossing_count(partition, arc, later_only=False):
    """
    Number of arcs crossing the given arc.

    Args:
        partition (SetPartition): The partition
        arc (Arc or tuple): An arc of the crossing diagram
        later_only (bool): Only count arcs opening inside the arc and closing
            beyond it in the crossing order

    Returns:
        int: Number of crossing arcs

    Raises:
        ValueError: If the arc does not belong to the partition
    """
    arc = Arc(*arc)
    if arc not in arcs(partition, CROSSING):
        raise ValueError(f"Arc {arc} is not an arc of {format_partition(partition)}")
    count = 0
    for first, second in crossing_pairs(partition):
        if arc not in (first, second):
            continue
        other = second if first == arc else first
        if later_only:
            key = lambda x: crossing_key(x, partition.n)
            start, end = _span(arc, key)
            if not start < _span(other, key)[0] < end:
                continue
        count += 1
    return count


def pair_statistics(partition, positive_only=False):
    """Collect both pair sets and the per-arc crossing counts."""
    crossing = crossing_pairs(partition, positive_only)
    per_arc = {arc: 0 for arc in arcs(partition, CROSSING)}
    for first, second in crossing:
        per_arc[first] += 1
        per_arc[second] += 1
    return PairStatistics(crossing, nesting_pairs(partition, positive_only), per_arc)


def _max_clique(nodes, pairs):
    if not nodes:
        return ()
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from(pairs)
    clique, _ = nx.max_weight_clique(graph, weight=None)
    return tuple(sorted(clique))


def max_crossing_arcs(partition):
    """A largest set of mutually crossing arcs."""
    return _max_clique(arcs(partition, CROSSING), crossing_pairs(partition))


def max_nesting_arcs(partition):
    """A largest set of mutually nesting arcs."""
    return _max_clique(arcs(partition, NESTING), nesting_pairs(partition))


def max_crossing_card(partition):
    return len(max_crossing_arcs(partition))


def max_nesting_card(partition):
    return len(max_nesting_arcs(partition))


def _touches(arc, x):
    return x in (arc.opener, arc.closer)


def _central_arcs(partition):
    n = partition.n
    return sorted(
        (arc for arc in arcs(partition, CROSSING)
         if arc.opener > 0 and arc.closer < 0 and not _touches(arc, n) and not _touches(arc, -n)),
        key=lambda arc: arc.opener,
    )


def _zero_block_condition(partition):
    zero = partition.zero_block
    return zero is None or partition.n in zero


def _d_noncrossing(partition):
    n = partition.n
    if not _zero_block_condition(partition):
        return False
    central = _central_arcs(partition)
    k = len(central)
    upper = {arc for index, arc in enumerate(central, start=1) if index > k / 2}
    lower = {arc for index, arc in enumerate(central, start=1) if index <= k / 2}

    def allowed(first, second):
        for a, b in ((first, second), (second, first)):
            if _touches(a, n) and _touches(b, -n):
                return True
            if _touches(a, n) and b in upper:
                return True
            if _touches(a, -n) and b in lower:
                return True
        return False

    pairs = crossing_pairs(partition)
    if not all(allowed(first, second) for first, second in pairs):
        return False
    crossed = {frozenset(pair) for pair in pairs}
    for arc in arcs(partition, CROSSING):
        required = set()
        if _touches(arc, n):
            required |= upper
        if _touches(arc, -n):
            required |= lower
        if any(frozenset((arc, other)) not in crossed for other in required):
            return False
    return True


def _d_nonnesting(partition):
    n = partition.n
    if not _zero_block_condition(partition):
        return False
    arc_set = set(arcs(partition, NESTING))
    n_openers = [arc.opener for arc in arc_set if arc.closer == n and arc.opener > 0]

    def exempt(outer, inner):
        i, j = outer.opener, inner.opener
        if outer.closer == -n and inner.closer == n and 0 < i < j < n:
            return True
        if outer.opener == n and inner.opener == -n and 0 < -outer.closer < -inner.closer < n:
            return True
        if inner == Arc(n, -n) and 0 < outer.opener < n and 0 < -outer.closer < n:
            smallest = min(outer.opener, -outer.closer)
            return any(k < smallest for k in n_openers)
        return False

    return all(exempt(outer, inner) for outer, inner in nesting_pairs(partition))


def is_noncrossing(partition):
    """
    Non-crossing test; type D uses the zero-block condition and the
    n / -n crossing exceptions instead of an empty crossing set.

    Args:
        partition (SetPartition): The partition

    Returns:
        bool: True if the partition is non-crossing
    """
    if partition.ctype == "D":
        return _d_noncrossing(partition)
    return not crossing_pairs(partition)


def is_nonnesting(partition):
    """Non-nesting test, with the type D exceptions."""
    if partition.ctype == "D":
        return _d_nonnesting(partition)
    return not nesting_pairs(partition)


def stats_row(partition, partition_id=None):
    """
    Statistics record in the fixed CSV column order.

    Args:
        partition (SetPartition): The partition
        partition_id (str, optional): Identifier; defaults to the set notation

    Returns:
        list: Values for CSV_COLUMNS
    """
    return [
        partition.ctype,
        partition.n,
        partition_id if partition_id is not None else format_partition(partition),
        crossings(partition),
        nestings(partition),
        max_crossing_card(partition),
        max_nesting_card(partition),
        " ".join(str(x) for x in sorted(openers(partition))),
        " ".join(str(x) for x in sorted(closers(partition))),
    ]
