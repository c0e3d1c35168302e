"""
Swap Service - Bijections exchanging crossings and nestings, and the
non-crossing / non-nesting representatives of opener-closer configurations
"""

from app.models.errors import ConfigurationError, WrongTypeError
from app.models.partition import (
    CROSSING,
    Arc,
    arcs,
    blocks_from_arcs,
    closers,
    is_config,
    openers,
    swap_extreme,
)
from app.services.statistics import arc_crossing_count


def _match_closers(opener_set, closer_set, n, choose):
    """
    Walk through 1..n, connecting every closer to an active opener below it.

    Args:
        opener_set (set): Openers
        closer_set (set): Closers to connect
        n (int): Rank
        choose (callable): (closer, sorted candidate openers) -> chosen opener

    Returns:
        tuple: (arcs, remaining active openers in ascending order)
    """
    active = []
    new_arcs = []
    for t in range(1, n + 1):
        if t in closer_set:
            candidates = sorted(active)
            if not candidates:
                raise ConfigurationError(f"No active opener left for closer {t}")
            opener = choose(t, candidates)
            active.remove(opener)
            new_arcs.append(Arc(opener, t))
        if t in opener_set:
            active.append(t)
    return new_arcs, sorted(active)


def _with_negatives(arc_list):
    result = set()
    for arc in arc_list:
        result.add(Arc(*arc))
        result.add(Arc(*arc).negate())
    return sorted(result)


def _central_arcs(partition):
    return sorted(
        (arc for arc in arcs(partition, CROSSING) if arc.opener > 0 and arc.closer < 0),
        key=lambda arc: arc.opener,
    )


def _relabel(central, targets):
    """Move central arcs on openers 1..k onto the given target openers."""
    lookup = {index: target for index, target in enumerate(targets, start=1)}
    return [Arc(lookup[arc.opener], -lookup[-arc.closer]) for arc in central]


def _standardize(central):
    """Relabel central arcs order-isomorphically onto openers 1..k."""
    rank = {arc.opener: index for index, arc in enumerate(central, start=1)}
    return [Arc(rank[arc.opener], -rank[-arc.closer]) for arc in central]


def _decreasing(targets):
    k = len(targets)
    return [Arc(targets[l], -targets[k - 1 - l]) for l in range(k)]


def _later_crossings(partition):
    def choose(closer, candidates):
        arc = next(a for a in arcs(partition, CROSSING) if a.closer == closer)
        c = arc_crossing_count(partition, arc, later_only=True)
        if c >= len(candidates):
            raise ConfigurationError(f"Closer {closer} has only {len(candidates)} active openers, needs {c + 1}")
        return candidates[c]
    return choose


def swap_map(partition):
    """
    Exchange the number of crossings and nestings (types A and C).

    Positive closers are processed in increasing order; a closer j is joined
    to the (c+1)-st smallest active opener below it, where c counts the arcs
    that open inside the arc closing at j and close beyond it. For type C the
    negatives are added and the remaining openers inherit the matching of
    the positive-to-negative arcs.

    Args:
        partition (SetPartition): Type A or C partition

    Returns:
        SetPartition: Partition with the same openers and closers, crossings
            and nestings interchanged

    Raises:
        WrongTypeError: For types B and D
    """
    if partition.ctype not in ("A", "C"):
        raise WrongTypeError(f"swap_map handles types A and C, got {partition.ctype}")
    n = partition.n
    new_arcs, remaining = _match_closers(
        openers(partition), closers(partition), n, _later_crossings(partition)
    )
    if partition.ctype == "A":
        return blocks_from_arcs("A", n, new_arcs)
    central = _relabel(_standardize(_central_arcs(partition)), remaining)
    return blocks_from_arcs("C", n, _with_negatives(new_arcs) + central)


def zero_block_transform(central_arcs):
    """
    Replace the zero arc (o_1, 0) of a type B central structure.

    The arcs are the zero arc followed by the arcs (o_i, c_i) with
    o_i < |c_i|, closers listed by decreasing absolute value. With j minimal
    such that o_j > |c_(j+1)| (or j = m), the arcs become (o_i, c_(i+1)) for
    i < j, (o_j, -o_j), and stay unchanged for i > j.

    Args:
        central_arcs (iterable): Arcs (opener, closer); at most one closes at 0

    Returns:
        tuple: Transformed arcs, none touching 0
    """
    central_arcs = [Arc(*arc) for arc in central_arcs]
    zero = [arc for arc in central_arcs if arc.closer == 0]
    others = [arc for arc in central_arcs if arc.closer != 0]
    if not zero:
        return tuple(central_arcs)
    if len(zero) > 1:
        raise ValueError("More than one arc closes at 0")
    for arc in others:
        if arc.opener <= 0 or arc.closer >= 0 or arc.opener > -arc.closer:
            raise ValueError(f"Arc {arc} is not a non-mirror central arc")
    ordered = zero + sorted(others, key=lambda arc: arc.closer)
    m = len(ordered)
    j = next((i for i in range(m - 1) if ordered[i].opener > -ordered[i + 1].closer), m - 1)
    result = []
    for i, arc in enumerate(ordered):
        if i < j:
            result.append(Arc(arc.opener, ordered[i + 1].closer))
        elif i == j:
            result.append(Arc(arc.opener, -arc.opener))
        else:
            result.append(arc)
    return tuple(result)


def swap_map_B(partition):
    """
    Map the nestings of a type B partition to crossings.

    The positive closers are connected as in swap_map. The central arcs are
    relabelled onto 1..k, passed through zero_block_transform and moved onto
    the remaining active openers.

    Args:
        partition (SetPartition): Type B partition

    Returns:
        SetPartition: Type B partition with the same openers and closers whose
            crossings equal the nestings of the input
    """
    if partition.ctype != "B":
        raise WrongTypeError(f"swap_map_B handles type B, got {partition.ctype}")
    n = partition.n
    new_arcs, remaining = _match_closers(
        openers(partition), closers(partition), n, _later_crossings(partition)
    )
    standard = _standardize(_central_arcs(partition))
    reduced = []
    for arc in standard:
        if arc.opener == -arc.closer:
            reduced.append(Arc(arc.opener, 0))
        elif arc.opener < -arc.closer:
            reduced.append(arc)
    transformed = _with_negatives(zero_block_transform(reduced))
    return blocks_from_arcs("B", n, _with_negatives(new_arcs) + _relabel(transformed, remaining))


def _first(_, candidates):
    return candidates[0]


def _last(_, candidates):
    return candidates[-1]


def _check_config(ctype, opener_set, closer_set, n):
    if ctype not in ("A", "B", "C", "D"):
        raise WrongTypeError(f"Unknown type {ctype}")
    if not is_config(opener_set, closer_set, ctype, n):
        raise ConfigurationError(
            f"({sorted(opener_set)}, {sorted(closer_set)}) is not an opener-closer configuration of {ctype}{n}"
        )


def _from_config(ctype, n, opener_set, closer_set, choose, central):
    new_arcs, remaining = _match_closers(opener_set, closer_set, n, choose)
    if ctype == "A":
        return blocks_from_arcs("A", n, new_arcs)
    return blocks_from_arcs(ctype, n, _with_negatives(new_arcs) + central(remaining))


def _b_nonnesting_central(targets):
    k = len(targets)
    if k % 2 == 0:
        return _decreasing(targets)
    # zero block on the smallest opener, the rest paired so that all cross
    result = [Arc(targets[0], -targets[0])]
    result.extend(Arc(targets[l], -targets[k - l]) for l in range(1, k))
    return result


def _d_noncrossing(n, opener_set, closer_set):
    new_arcs, remaining = _match_closers(opener_set, closer_set - {n}, n, _last)
    below = [o for o in remaining if o < n]
    r = len(below)
    n_opens, n_closes = n in opener_set, n in closer_set

    def build(extra, used):
        rest = [o for o in below if o not in used]
        return blocks_from_arcs("D", n, _with_negatives(new_arcs + extra) + _decreasing(rest))

    if not n_opens and not n_closes:
        return {build([], ())} if r % 2 == 0 else set()
    if n_closes and not n_opens:
        if r % 2 == 0:
            return set()
        m = below[r // 2]
        return {build([Arc(m, n)], (m,))}
    if n_opens and not n_closes:
        if r % 2 == 0:
            return set()
        m = below[r // 2]
        return {build([Arc(n, -m), Arc(m, -n)], (m,))}
    if r % 2 == 1:
        m = below[r // 2]
        return {build([Arc(m, n), Arc(n, -n)], (m,))}
    m1, m2 = below[r // 2 - 1], below[r // 2]
    first = build([Arc(m1, n), Arc(n, -m2)], (m1, m2))
    return {first, swap_extreme(first)}


def _d_nonnesting(n, opener_set, closer_set):
    both = n in opener_set and n in closer_set
    if (len(opener_set) - len(closer_set)) % 2 == 0:
        first = _from_config("D", n, opener_set, closer_set, _first, _decreasing)
        return {first, swap_extreme(first)} if both else {first}
    if not both:
        return set()
    new_arcs, remaining = _match_closers(opener_set, closer_set, n, _first)
    rest = [o for o in remaining if o != n]
    return {blocks_from_arcs("D", n, _with_negatives(new_arcs + [Arc(n, -n)]) + _decreasing(rest))}


def nc_from_config(ctype, opener_set, closer_set, n):
    """
    All non-crossing partitions with the given openers and closers.

    Each closer is joined to the largest active opener below it; the
    remaining openers are matched to negatives by the order-reversing
    matching. Type D follows the middle-opener rules for n.

    Args:
        ctype (str): One of A, B, C, D
        opener_set (iterable): Openers
        closer_set (iterable): Closers
        n (int): Rank

    Returns:
        frozenset: One partition for A/B/C; zero, one or two for D

    Raises:
        ConfigurationError: If (O, C) is not an opener-closer configuration
    """
    opener_set, closer_set = set(opener_set), set(closer_set)
    _check_config(ctype, opener_set, closer_set, n)
    if ctype == "D":
        return frozenset(_d_noncrossing(n, opener_set, closer_set))
    return frozenset({_from_config(ctype, n, opener_set, closer_set, _last, _decreasing)})


def nn_from_config(ctype, opener_set, closer_set, n):
    """
    All non-nesting partitions with the given openers and closers.

    Args:
        ctype (str): One of A, B, C, D
        opener_set (iterable): Openers
        closer_set (iterable): Closers
        n (int): Rank

    Returns:
        frozenset: One partition for A/B/C; zero, one or two for D
    """
    opener_set, closer_set = set(opener_set), set(closer_set)
    _check_config(ctype, opener_set, closer_set, n)
    if ctype == "D":
        return frozenset(_d_nonnesting(n, opener_set, closer_set))
    central = _b_nonnesting_central if ctype == "B" else _decreasing
    return frozenset({_from_config(ctype, n, opener_set, closer_set, _first, central)})
