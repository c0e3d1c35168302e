"""
Partition - Set partitions of the classical types A, B, C and D
"""

import json
import re
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import FrozenSet, NamedTuple, Tuple

import networkx as nx

from app.models.errors import CapExceededError, PartitionError, WrongTypeError

TYPES = ("A", "B", "C", "D")
SIGNED_TYPES = ("B", "C", "D")

NESTING = "nesting"
CROSSING = "crossing"
DIAGRAM_KINDS = (NESTING, CROSSING)

DEFAULT_CAP = 6


def nesting_key(x, n):
    """
    Position of an element in the nesting order 1<…<n<0<−n<…<−1.

    The element 0 only shows up in type B nesting diagrams; leaving it out
    gives the type C order, and type A only ever sees the positive part.

    Args:
        x (int): Ground element (0 allowed)
        n (int): Rank

    Returns:
        int: Sort key
    """
    if x > 0:
        return x
    if x == 0:
        return n + 1
    return 2 * n + 2 + x


def crossing_key(x, n):
    """
    Position of an element in the crossing order 1<…<n<−1<…<−n.

    Args:
        x (int): Non-zero ground element
        n (int): Rank

    Returns:
        int: Sort key
    """
    return x if x > 0 else n - x


def order_key(kind, n):
    """Return the sort key function for a diagram kind."""
    if kind == NESTING:
        return lambda x: nesting_key(x, n)
    if kind == CROSSING:
        return lambda x: crossing_key(x, n)
    raise ValueError(f"Unknown diagram kind: {kind}")


def ground_set(ctype, n):
    """
    Ground set of a partition of the given type, listed in nesting order.

    Args:
        ctype (str): One of A, B, C, D
        n (int): Rank

    Returns:
        tuple: Ground elements
    """
    positives = tuple(range(1, n + 1))
    if ctype == "A":
        return positives
    return positives + tuple(-i for i in range(n, 0, -1))


class Arc(NamedTuple):
    """Pair of consecutive block elements, opener first in the nesting order."""

    opener: int
    closer: int

    def negate(self):
        return Arc(-self.closer, -self.opener)

    def __str__(self):
        return f"({self.opener},{self.closer})"


class OpenerCloserConfig(NamedTuple):
    openers: FrozenSet[int]
    closers: FrozenSet[int]


@dataclass(frozen=True)
class SetPartition:
    """
    Immutable set partition of type A, B, C or D in canonical form.

    Blocks list their elements in nesting order and are sorted by their
    first element, so two partitions compare equal iff they are equal as
    set partitions.
    """

    ctype: str
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def zero_block(self):
        """The block equal to its own negative, or None."""
        for block in self.blocks:
            if block[0] > 0 and -block[0] in block:
                return block
        return None

    def block_of(self, x):
        for block in self.blocks:
            if x in block:
                return block
        raise KeyError(x)

    def __str__(self):
        return format_partition(self)


def _canonical_blocks(blocks, n):
    key = lambda x: nesting_key(x, n)
    ordered = [tuple(sorted(block, key=key)) for block in blocks]
    ordered.sort(key=lambda block: key(block[0]))
    return tuple(ordered)


def make_partition(ctype, n, blocks):
    """
    Validate raw block data and build a canonical SetPartition.

    Args:
        ctype (str): One of A, B, C, D
        n (int): Rank, at least 1
        blocks (iterable): Iterable of iterables of non-zero integers

    Returns:
        SetPartition: The validated partition

    Raises:
        PartitionError: If the data violates one of the partition invariants
    """
    if ctype not in TYPES:
        raise PartitionError("type", f"unknown type {ctype!r}")
    if not isinstance(n, int) or n < 1:
        raise PartitionError("rank", f"rank must be a positive integer, got {n!r}")

    raw = [frozenset(int(x) for x in block) for block in blocks]
    if any(not block for block in raw):
        raise PartitionError("non-empty", "blocks must be non-empty")

    ground = set(ground_set(ctype, n))
    seen = set()
    for block in raw:
        stray = block - ground
        if stray:
            raise PartitionError(
                "ground-set", f"elements {sorted(stray)} are outside the ground set of {ctype}{n}"
            )
        overlap = block & seen
        if overlap:
            raise PartitionError("disjoint", f"elements {sorted(overlap)} appear in more than one block")
        seen |= block
    missing = ground - seen
    if missing:
        raise PartitionError("cover", f"elements {sorted(missing)} are not covered")

    if ctype in SIGNED_TYPES:
        block_set = set(raw)
        for block in raw:
            if frozenset(-x for x in block) not in block_set:
                raise PartitionError("symmetry", f"negative of block {sorted(block)} is not a block")
        zero_blocks = [block for block in raw if all(-x in block for x in block)]
        if len(zero_blocks) > 1:
            raise PartitionError("single-zero-block", "more than one block equals its own negative")
        if ctype == "D" and zero_blocks and len(zero_blocks[0]) == 2:
            raise PartitionError("d-zero-pair", "a type D zero block must not be a single pair {i,-i}")

    return SetPartition(ctype, n, _canonical_blocks(raw, n))


def arcs(partition, kind=NESTING):
    """
    Arcs of the nesting or crossing diagram of a partition.

    In a type B nesting diagram the zero block is augmented by 0 before
    consecutive elements are joined; crossing diagrams never contain 0.

    Args:
        partition (SetPartition): The partition
        kind (str): 'nesting' or 'crossing'

    Returns:
        tuple: Arcs sorted by opener in the nesting order
    """
    if kind not in DIAGRAM_KINDS:
        raise ValueError(f"Unknown diagram kind: {kind}")
    n = partition.n
    key = lambda x: nesting_key(x, n)
    result = []
    zero = partition.zero_block
    for block in partition.blocks:
        elements = block
        if partition.ctype == "B" and kind == NESTING and block is zero:
            elements = tuple(sorted(block + (0,), key=key))
        result.extend(Arc(a, b) for a, b in zip(elements, elements[1:]))
    result.sort(key=lambda arc: (key(arc.opener), key(arc.closer)))
    return tuple(result)


def openers(partition):
    """
    Openers of a partition.

    Type A: non-maximal block elements. Signed types: positive elements that
    are not the last of their block in the nesting order.

    Args:
        partition (SetPartition): The partition

    Returns:
        frozenset: Openers
    """
    return frozenset(x for block in partition.blocks for x in block[:-1] if x > 0)


def closers(partition):
    """Positive non-minimal block elements (all non-minimal ones for type A)."""
    return frozenset(x for block in partition.blocks for x in block[1:] if x > 0)


def config_of(partition):
    return OpenerCloserConfig(openers(partition), closers(partition))


def is_config(opener_set, closer_set, ctype, n):
    """
    Check the staircase inequality |O ∩ [k]| ≥ |C ∩ [k+1]| for k < n.

    Args:
        opener_set (iterable): Candidate openers
        closer_set (iterable): Candidate closers
        ctype (str): Type; A additionally needs |O| = |C|
        n (int): Rank

    Returns:
        bool: True if (O, C) is an opener-closer configuration
    """
    opener_set, closer_set = set(opener_set), set(closer_set)
    universe = set(range(1, n + 1))
    if not opener_set <= universe or not closer_set <= universe:
        return False
    if ctype == "A" and len(opener_set) != len(closer_set):
        return False
    for k in range(n):
        below = sum(1 for o in opener_set if o <= k)
        if below < sum(1 for c in closer_set if c <= k + 1):
            return False
    return True


def enumerate_configs(ctype, n):
    """All opener-closer configurations of rank n, openers and closers as frozensets."""
    universe = range(1, n + 1)
    subsets = [frozenset(s) for size in range(n + 1) for s in combinations(universe, size)]
    for opener_set in subsets:
        for closer_set in subsets:
            if is_config(opener_set, closer_set, ctype, n):
                yield OpenerCloserConfig(opener_set, closer_set)


def swap_extreme(partition):
    """
    Interchange n and -n in every block of a type D partition.

    Args:
        partition (SetPartition): Type D partition

    Returns:
        SetPartition: The partition with n and -n exchanged
    """
    if partition.ctype != "D":
        raise WrongTypeError(f"swap_extreme needs a type D partition, got {partition.ctype}")
    n = partition.n
    swap = {n: -n, -n: n}
    return make_partition("D", n, [[swap.get(x, x) for x in block] for block in partition.blocks])


def _restricted_growth(elements):
    """Yield all set partitions of a sequence as lists of lists (RGS order)."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for groups in _restricted_growth(rest):
        yield [[first]] + groups
        for index in range(len(groups)):
            yield groups[:index] + [[first] + groups[index]] + groups[index + 1:]


def enumerate_partitions(ctype, n, cap=DEFAULT_CAP):
    """
    Stream every partition of the given type and rank exactly once.

    Signed partitions are generated from a zero-block support, a partition of
    the remaining positives into block pairs and a sign pattern fixed to +
    on each pair's smallest element.

    Args:
        ctype (str): One of A, B, C, D
        n (int): Rank
        cap (int): Largest rank accepted

    Yields:
        SetPartition: Partitions in a deterministic order

    Raises:
        CapExceededError: If n exceeds cap
    """
    if ctype not in TYPES:
        raise PartitionError("type", f"unknown type {ctype!r}")
    if n > cap:
        raise CapExceededError(f"rank {n} exceeds the enumeration cap {cap}")
    positives = list(range(1, n + 1))
    if ctype == "A":
        for groups in _restricted_growth(positives):
            yield make_partition("A", n, groups)
        return

    for size in range(n + 1):
        if ctype == "D" and size == 1:
            continue
        for zero_support in combinations(positives, size):
            rest = [x for x in positives if x not in zero_support]
            zero = [list(zero_support) + [-x for x in zero_support]] if zero_support else []
            for groups in _restricted_growth(rest):
                free = [x for group in groups for x in group[1:]]
                for signs in product((1, -1), repeat=len(free)):
                    sign_of = dict(zip(free, signs))
                    blocks = list(zero)
                    for group in groups:
                        block = [group[0]] + [sign_of[x] * x for x in group[1:]]
                        blocks.append(block)
                        blocks.append([-x for x in block])
                    yield make_partition(ctype, n, blocks)


def _stirling2(m, j):
    if m == j:
        return 1
    if j == 0 or j > m:
        return 0
    return j * _stirling2(m - 1, j) + _stirling2(m - 1, j - 1)


def _pair_block_count(m):
    return sum(_stirling2(m, j) * 2 ** (m - j) for j in range(m + 1))


def count_partitions(ctype, n):
    """
    Closed count of partitions, independent of enumerate_partitions.

    Args:
        ctype (str): One of A, B, C, D
        n (int): Rank

    Returns:
        int: Number of partitions of type ctype and rank n
    """
    if ctype == "A":
        return sum(_stirling2(n, j) for j in range(n + 1))
    total = sum(comb(n, k) * _pair_block_count(n - k) for k in range(n + 1))
    if ctype == "D":
        total -= n * _pair_block_count(n - 1)
    return total


def format_partition(partition):
    """Render as {{1,7,9},{2,5,6},{3,4},{8}}."""
    inner = ",".join("{" + ",".join(str(x) for x in block) + "}" for block in partition.blocks)
    return "{" + inner + "}"


def to_json(partition):
    """Serialize to the byte-stable JSON record."""
    record = {"type": partition.ctype, "n": partition.n, "blocks": [list(b) for b in partition.blocks]}
    return json.dumps(record, separators=(",", ":"))


def from_json(text):
    """
    Parse a JSON partition record.

    Args:
        text (str): JSON text with keys type, n and blocks

    Returns:
        SetPartition: The validated partition
    """
    try:
        record = json.loads(text)
        return make_partition(record["type"], record["n"], record["blocks"])
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise PartitionError("record", f"malformed partition record: {e}") from e


def blocks_from_arcs(ctype, n, arc_list):
    """
    Assemble a partition from its arcs (consecutive pairs, 0 allowed for B).

    Args:
        ctype (str): Partition type
        n (int): Rank
        arc_list (Sequence[Arc]): Arcs of the partition

    Returns:
        SetPartition: The partition whose blocks are the connected components
    """
    graph = nx.Graph()
    graph.add_nodes_from(ground_set(ctype, n))
    graph.add_edges_from(arc_list)
    blocks = [[x for x in component if x != 0] for component in nx.connected_components(graph)]
    return make_partition(ctype, n, [block for block in blocks if block])


def all_singletons(ctype, n):
    return make_partition(ctype, n, [[x] for x in ground_set(ctype, n)])


def random_partition(ctype, n, rng):
    """
    Draw a partition of the given type; every partition has positive probability.

    Args:
        ctype (str): One of A, B, C, D
        n (int): Rank
        rng (random.Random): Source of randomness

    Returns:
        SetPartition: A random partition
    """
    positives = list(range(1, n + 1))
    if ctype == "A":
        zero_support = []
    else:
        zero_support = [x for x in positives if rng.random() < 1 / 3]
        if ctype == "D" and len(zero_support) == 1:
            zero_support = []
    groups = []
    for x in positives:
        if x in zero_support:
            continue
        index = rng.randrange(len(groups) + 1)
        if index == len(groups):
            groups.append([x])
        else:
            sign = 1 if ctype == "A" else rng.choice((1, -1))
            groups[index].append(sign * x)
    if ctype == "A":
        return make_partition("A", n, groups)
    blocks = [zero_support + [-x for x in zero_support]] if zero_support else []
    for group in groups:
        blocks.append(group)
        blocks.append([-x for x in group])
    return make_partition(ctype, n, blocks)


def parse_set_notation(text, ctype=None, n=None):
    """
    Parse "{{1,7,9},{2,5,6},{3,4},{8}}" or a JSON partition record.

    Missing singletons are added, so "{{1,-3},{3,-1}}" is accepted for C3.

    Args:
        text (str): Set notation or JSON
        ctype (str, optional): Type; C if a negative element occurs, A otherwise
        n (int, optional): Rank; defaults to the largest absolute value

    Returns:
        SetPartition: The validated partition
    """
    text = text.strip()
    if text.startswith("{\"") or text.startswith("{ \""):
        return from_json(text)
    inner = text[1:-1] if text.startswith("{{") else text
    blocks = []
    for match in re.findall(r"\{([^{}]*)\}", inner):
        try:
            blocks.append([int(part) for part in match.split(",") if part.strip()])
        except ValueError as e:
            raise PartitionError("record", f"malformed block {{{match}}}") from e
    blocks = [block for block in blocks if block]
    values = [x for block in blocks for x in block]
    if ctype is None:
        ctype = "C" if any(x < 0 for x in values) else "A"
    if n is None:
        n = max((abs(x) for x in values), default=1)
    seen = set(values)
    blocks.extend([x] for x in ground_set(ctype, n) if x not in seen)
    return make_partition(ctype, n, blocks)
