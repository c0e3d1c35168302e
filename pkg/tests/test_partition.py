import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models.errors import CapExceededError, PartitionError, WrongTypeError
from app.models.partition import (
    CROSSING,
    NESTING,
    TYPES,
    Arc,
    all_singletons,
    arcs,
    blocks_from_arcs,
    closers,
    count_partitions,
    crossing_key,
    enumerate_configs,
    enumerate_partitions,
    format_partition,
    from_json,
    is_config,
    make_partition,
    nesting_key,
    openers,
    parse_set_notation,
    random_partition,
    swap_extreme,
    to_json,
)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_type_a_counts_are_bell_numbers(n, expected):
    assert sum(1 for _ in enumerate_partitions("A", n)) == expected
    assert count_partitions("A", n) == expected


@pytest.mark.parametrize("ctype", ["B", "C"])
@pytest.mark.parametrize("n, expected", [(1, 2), (2, 6), (3, 24), (4, 116), (5, 648)])
def test_type_b_and_c_counts(ctype, n, expected):
    assert sum(1 for _ in enumerate_partitions(ctype, n)) == expected
    assert count_partitions(ctype, n) == expected


@pytest.mark.parametrize("n, expected", [(2, 4), (3, 15)])
def test_type_d_counts(n, expected):
    assert sum(1 for _ in enumerate_partitions("D", n)) == expected
    assert count_partitions("D", n) == expected


@pytest.mark.parametrize("ctype", TYPES)
def test_enumeration_has_no_duplicates(ctype):
    partitions = list(enumerate_partitions(ctype, 4))
    assert len(set(partitions)) == len(partitions)


def test_enumeration_respects_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_partitions("A", 7, cap=6))


def test_orders():
    assert sorted([-1, 0, 1, -2, 2], key=lambda x: nesting_key(x, 2)) == [1, 2, 0, -2, -1]
    assert sorted([-1, 1, -2, 2], key=lambda x: crossing_key(x, 2)) == [1, 2, -1, -2]


@pytest.mark.parametrize(
    "ctype, n, blocks, invariant",
    [
        ("A", 3, [[1, 2]], "cover"),
        ("A", 3, [[1, 2], [2, 3]], "disjoint"),
        ("A", 2, [[1, 2, 3]], "ground-set"),
        ("C", 2, [[1, -2], [-1], [2]], "symmetry"),
        ("C", 2, [[1, -1], [2, -2]], "single-zero-block"),
        ("D", 2, [[1, -1], [2], [-2]], "d-zero-pair"),
        ("E", 2, [[1, 2]], "type"),
    ],
)
def test_invalid_partitions_name_the_invariant(ctype, n, blocks, invariant):
    with pytest.raises(PartitionError) as info:
        make_partition(ctype, n, blocks)
    assert info.value.invariant == invariant


def test_figure_one_openers_closers_and_arcs(figure_one):
    assert openers(figure_one) == {1, 2, 3, 5, 7}
    assert closers(figure_one) == {4, 5, 6, 7, 9}
    assert len(arcs(figure_one)) == 5
    assert format_partition(figure_one) == "{{1,7,9},{2,5,6},{3,4},{8}}"


def test_blocks_from_arcs_rebuilds_the_partition(figure_one, figure_four, figure_five_a):
    assert blocks_from_arcs("A", 9, arcs(figure_one)) == figure_one
    assert blocks_from_arcs("C", 5, arcs(figure_four, CROSSING)) == figure_four
    assert blocks_from_arcs("B", 5, arcs(figure_five_a, NESTING)) == figure_five_a


def test_type_b_nesting_diagram_passes_through_zero(figure_five_a):
    nesting = arcs(figure_five_a, NESTING)
    assert Arc(4, 0) in nesting
    assert Arc(0, -4) in nesting
    assert all(0 not in arc for arc in arcs(figure_five_a, CROSSING))


def test_json_record(figure_four):
    text = to_json(figure_four)
    assert text.startswith('{"type":"C","n":5,"blocks":')
    assert from_json(text) == figure_four


def test_malformed_json_record():
    with pytest.raises(PartitionError):
        from_json('{"type": "A"}')


def test_set_notation_adds_singletons(figure_one):
    assert parse_set_notation("{{1,7,9},{2,5,6},{3,4}}", n=9) == figure_one
    partition = parse_set_notation("{{1,-3},{3,-1}}")
    assert (partition.ctype, partition.n) == ("C", 3)
    assert (2,) in partition.blocks and (-2,) in partition.blocks


def test_set_notation_of_all_singletons():
    assert parse_set_notation("{}", "B", 2) == all_singletons("B", 2)


def test_is_config():
    assert is_config({1}, {2}, "A", 2)
    assert not is_config({1}, {1}, "A", 2)
    assert not is_config({1, 2}, {2}, "A", 2)
    assert is_config({1, 2}, {2}, "C", 2)


def test_configs_of_c2():
    assert len(list(enumerate_configs("C", 2))) == 6


def test_swap_extreme_exchanges_n_and_minus_n():
    partition = make_partition("D", 3, [[1, 3, -2], [-1, -3, 2]])
    swapped = swap_extreme(partition)
    assert swapped.block_of(1) == swapped.block_of(-3)
    assert swap_extreme(swapped) == partition


def test_swap_extreme_needs_type_d(figure_four):
    with pytest.raises(WrongTypeError):
        swap_extreme(figure_four)


@given(st.sampled_from(TYPES), st.integers(min_value=1, max_value=6), st.randoms())
@settings(max_examples=200)
def test_random_partitions_are_valid(ctype, n, rng):
    partition = random_partition(ctype, n, rng)
    assert (partition.ctype, partition.n) == (ctype, n)
    assert make_partition(ctype, n, partition.blocks) == partition
