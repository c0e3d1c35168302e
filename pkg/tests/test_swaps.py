import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models.errors import ConfigurationError, WrongTypeError
from app.models.partition import Arc, config_of, enumerate_partitions, make_partition, random_partition, swap_extreme
from app.services.statistics import crossings, is_noncrossing, is_nonnesting, nestings
from app.services.swaps import nc_from_config, nn_from_config, swap_map, swap_map_B, zero_block_transform

from tests.conftest import signed


def test_swap_map_on_figure_one(figure_one):
    image = swap_map(figure_one)
    assert image == make_partition("A", 9, [[1, 4], [2, 5, 7, 9], [3, 6], [8]])
    assert (crossings(image), nestings(image)) == (4, 0)


def test_swap_map_on_figure_four(figure_four):
    image = swap_map(figure_four)
    assert image == signed("C", 5, [[1, 2, -5], [3, 4, -3, -4]])
    assert config_of(image) == config_of(figure_four)
    assert (crossings(image), nestings(image)) == (0, 2)


def test_swap_map_rejects_type_b(figure_five_a):
    with pytest.raises(WrongTypeError):
        swap_map(figure_five_a)


def test_swap_map_b_on_figure_five(figure_five_a, figure_five_b):
    assert swap_map_B(figure_five_a) == figure_five_b


def test_swap_map_b_rejects_type_c(figure_four):
    with pytest.raises(WrongTypeError):
        swap_map_B(figure_four)


def test_zero_block_transform():
    assert set(zero_block_transform([(3, 0), (1, -2)])) == {Arc(3, -3), Arc(1, -2)}
    assert zero_block_transform([(1, -2)]) == (Arc(1, -2),)


def test_zero_block_transform_rejects_two_zero_arcs():
    with pytest.raises(ValueError):
        zero_block_transform([(1, 0), (2, 0)])


def test_type_b_representatives():
    (nonnesting,) = nn_from_config("B", {1, 2, 3}, set(), 3)
    (noncrossing,) = nc_from_config("B", {1, 2, 3}, set(), 3)
    assert nonnesting == make_partition("B", 3, [[1, -1], [2, -3], [3, -2]])
    assert noncrossing == make_partition("B", 3, [[2, -2], [1, -3], [3, -1]])
    assert is_nonnesting(nonnesting) and is_noncrossing(noncrossing)


def test_type_d_noncrossing_pair():
    partition = signed("D", 3, [[1, 3, -2]])
    assert nc_from_config("D", {1, 2, 3}, {3}, 3) == frozenset({partition, swap_extreme(partition)})


def test_type_a_fibers_have_single_representatives(figure_one):
    config = config_of(figure_one)
    (noncrossing,) = nc_from_config("A", config.openers, config.closers, 9)
    (nonnesting,) = nn_from_config("A", config.openers, config.closers, 9)
    assert noncrossing == figure_one
    assert swap_map(noncrossing) == nonnesting


def test_invalid_configuration():
    with pytest.raises(ConfigurationError):
        nc_from_config("A", {1}, {1}, 2)
    with pytest.raises(WrongTypeError):
        nn_from_config("E", set(), set(), 2)


@given(st.sampled_from(["A", "C"]), st.integers(min_value=1, max_value=5), st.randoms())
@settings(max_examples=150, deadline=None)
def test_swap_map_exchanges_statistics(ctype, n, rng):
    partition = random_partition(ctype, n, rng)
    image = swap_map(partition)
    assert config_of(image) == config_of(partition)
    assert (crossings(image), nestings(image)) == (nestings(partition), crossings(partition))


@given(st.integers(min_value=1, max_value=5), st.randoms())
@settings(max_examples=150, deadline=None)
def test_swap_map_b_turns_nestings_into_crossings(n, rng):
    partition = random_partition("B", n, rng)
    image = swap_map_B(partition)
    assert config_of(image) == config_of(partition)
    assert crossings(image) == nestings(partition)


@pytest.mark.parametrize(
    "ctype, n, swap",
    [("A", 4, swap_map), ("A", 5, swap_map), ("C", 3, swap_map), ("C", 4, swap_map), ("B", 3, swap_map_B), ("B", 4, swap_map_B)],
)
def test_swap_maps_are_injective_on_each_fiber(ctype, n, swap):
    images = {}
    for partition in enumerate_partitions(ctype, n):
        image = swap(partition)
        fiber = images.setdefault(config_of(partition), {})
        assert image not in fiber, f"{partition} and {fiber.get(image)} share the image {image}"
        fiber[image] = partition
