import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models.errors import FillingError, LabelError, WrongTypeError
from app.models.integer_partition import EMPTY, IntegerPartition
from app.models.partition import CROSSING, NESTING, config_of, enumerate_partitions, random_partition
from app.models.polyomino import is_partition_filling, make_filling
from app.services.growth import (
    backward_growth,
    backward_rule,
    conjugate,
    evacuate,
    filling_to_partition,
    format_labels,
    forward_growth,
    forward_rule,
    greene_labels,
    is_vacillating,
    longest_chain,
    maxswap_inverse,
    maxswap_map,
    parse_labels,
    partition_to_filling,
    satisfies_parity,
    vacillating_sequences,
)
from app.services.statistics import max_crossing_card, max_nesting_card

from tests.conftest import signed

FIGURE_THREE_A = "1;1;2;2;21;11;21;11;11"
FIGURE_THREE_B = "1;1;11;11;21;2;21;2;2"


def test_figure_three_labels(figure_three_a):
    filling = partition_to_filling(figure_three_a, NESTING)
    assert len(filling.entries) == 4
    labels = forward_growth(filling)
    assert labels.staircase == parse_labels(FIGURE_THREE_A)
    assert tuple(conjugate(label) for label in labels.staircase) == parse_labels(FIGURE_THREE_B)


def test_figure_three_partner(figure_three_a):
    partner = signed("C", 5, [[1, 4, -2], [3, 5]])
    assert maxswap_map(figure_three_a) == partner
    assert forward_growth(partition_to_filling(partner, CROSSING)).staircase == parse_labels(FIGURE_THREE_B)
    assert maxswap_inverse(partner) == figure_three_a


def test_maxswap_example_and_non_involution():
    first = signed("C", 4, [[1, -3], [2, 4]])
    second = signed("C", 4, [[1, 4], [2, -3]])
    assert maxswap_map(first) == second
    assert maxswap_inverse(second) == first
    assert maxswap_map(second) == signed("C", 4, [[1, -2], [3, 4]])
    assert maxswap_map(second) != first


@pytest.mark.parametrize("n", [1, 2, 3])
def test_forward_growth_matches_greene_oracle(n):
    for partition in enumerate_partitions("C", n):
        for kind in (NESTING, CROSSING):
            filling = partition_to_filling(partition, kind)
            assert forward_growth(filling).corners == greene_labels(filling).corners


@pytest.mark.parametrize("n", [1, 2, 3])
def test_backward_growth_inverts_forward_growth(n):
    for partition in enumerate_partitions("C", n):
        for kind in (NESTING, CROSSING):
            filling = partition_to_filling(partition, kind)
            recovered = backward_growth(forward_growth(filling).staircase, kind, n)
            assert recovered == filling
            assert filling_to_partition(recovered) == partition


@given(st.integers(min_value=1, max_value=6), st.randoms())
@settings(max_examples=100, deadline=None)
def test_maxswap_turns_maximal_nestings_into_maximal_crossings(n, rng):
    partition = random_partition("C", n, rng)
    image = maxswap_map(partition)
    assert config_of(image) == config_of(partition)
    assert max_crossing_card(image) == max_nesting_card(partition)
    assert max_nesting_card(maxswap_inverse(partition)) == max_crossing_card(partition)
    assert maxswap_inverse(image) == partition


def test_maxswap_does_not_exchange_both_cardinalities():
    partition = signed("C", 4, [[1, -3], [2, 4]])
    image = maxswap_map(partition)
    assert (max_crossing_card(partition), max_nesting_card(partition)) == (2, 2)
    assert (max_crossing_card(image), max_nesting_card(image)) == (2, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_longest_chains_are_maximal_cardinalities(n):
    for partition in enumerate_partitions("C", n):
        assert longest_chain(partition_to_filling(partition, NESTING)) == max_nesting_card(partition)
        assert longest_chain(partition_to_filling(partition, CROSSING)) == max_crossing_card(partition)


@pytest.mark.parametrize("kind", [NESTING, CROSSING])
@pytest.mark.parametrize("n, expected", [(1, 2), (2, 6)])
def test_vacillating_sequence_counts(kind, n, expected):
    assert sum(1 for _ in vacillating_sequences(kind, n)) == expected


@pytest.mark.parametrize("kind", [NESTING, CROSSING])
def test_forward_labels_are_vacillating_sequences(kind):
    sequences = set(vacillating_sequences(kind, 3))
    for partition in enumerate_partitions("C", 3):
        assert forward_growth(partition_to_filling(partition, kind)).staircase in sequences


def test_evacuation():
    chain = [EMPTY, IntegerPartition((1,)), IntegerPartition((2,)), IntegerPartition((2, 1))]
    assert evacuate(chain) == [EMPTY, IntegerPartition((1,)), IntegerPartition((1, 1)), IntegerPartition((2, 1))]
    assert evacuate(evacuate(chain)) == chain


def test_evacuation_keeps_stationary_steps():
    chain = [EMPTY, EMPTY, IntegerPartition((1,)), IntegerPartition((1,))]
    assert evacuate(chain) == chain


def test_evacuation_rejects_bad_chains():
    with pytest.raises(LabelError):
        evacuate([IntegerPartition((1,))])
    with pytest.raises(LabelError):
        evacuate([EMPTY, IntegerPartition((2,))])


def test_local_rules():
    one = IntegerPartition((1,))
    assert forward_rule(EMPTY, EMPTY, EMPTY, 1) == one
    assert forward_rule(one, one, one, 0) == one
    assert forward_rule(one, one, one, 1) == IntegerPartition((2,))
    assert forward_rule(one, EMPTY, one, 0) == IntegerPartition((1, 1))
    assert backward_rule(one, one, IntegerPartition((1, 1))) == (EMPTY, 0)
    assert backward_rule(EMPTY, EMPTY, one) == (EMPTY, 1)
    with pytest.raises(FillingError):
        forward_rule(one, EMPTY, one, 1)


def test_backward_growth_rejects_bad_labels():
    with pytest.raises(LabelError):
        backward_growth(parse_labels("1;1"), NESTING, 2)
    with pytest.raises(LabelError):
        backward_growth(parse_labels("2;1;0"), NESTING, 2)


def test_parity():
    assert satisfies_parity(IntegerPartition((1, 1)), NESTING)
    assert not satisfies_parity(IntegerPartition((2,)), NESTING)
    assert satisfies_parity(IntegerPartition((2, 1)), CROSSING)
    assert not satisfies_parity(IntegerPartition((1, 1)), CROSSING)


def test_is_vacillating():
    assert is_vacillating(parse_labels(FIGURE_THREE_A))
    assert not is_vacillating(parse_labels("1;2"))


def test_partition_to_filling_needs_type_c(figure_one):
    with pytest.raises(WrongTypeError):
        partition_to_filling(figure_one, NESTING)


def test_filling_to_partition_rejects_non_partition_fillings():
    filling = make_filling(NESTING, 2, {(1, 2): 1, (1, -1): 1})
    assert not is_partition_filling(filling)
    with pytest.raises(FillingError):
        filling_to_partition(filling)


def test_label_text():
    assert format_labels(parse_labels(FIGURE_THREE_A)) == "1;1;2;2;2,1;1,1;2,1;1,1;1,1"
