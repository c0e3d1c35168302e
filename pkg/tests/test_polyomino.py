import pytest

from app.models.errors import FillingError
from app.models.partition import CROSSING, NESTING
from app.models.polyomino import (
    Polyomino,
    from_text,
    is_partition_filling,
    make_filling,
    partition_filling_violations,
    to_text,
)


def test_rows_follow_the_kind_order():
    assert Polyomino(NESTING, 3).rows == (2, 3, -3, -2, -1)
    assert Polyomino(CROSSING, 3).rows == (2, 3, -1, -2, -3)


def test_column_heights():
    polyomino = Polyomino(NESTING, 3)
    heights = [sum(1 for cell in polyomino.cells() if cell[0] == column) for column in (1, 2, 3)]
    assert heights == [5, 4, 3]


def test_mirror_cells():
    polyomino = Polyomino(NESTING, 3)
    assert polyomino.partner((1, -3)) == (3, -1)
    assert polyomino.partner((1, 2)) == (1, 2)
    assert polyomino.on_diagonal((2, -2))


def test_half_cells():
    assert Polyomino(NESTING, 2).half_cells() == ((1, 2), (1, -2), (1, -1), (2, -2))
    assert Polyomino(CROSSING, 2).half_cells() == ((1, 2), (1, -1), (2, -1), (2, -2))


def test_coordinates_round_trip():
    polyomino = Polyomino(CROSSING, 3)
    for cell in polyomino.cells():
        assert polyomino.cell_at(*polyomino.coordinates(cell)) == cell


def test_rejects_cells_outside_the_staircase():
    with pytest.raises(FillingError):
        make_filling(NESTING, 2, {(2, 2): 1})
    with pytest.raises(FillingError):
        make_filling(NESTING, 2, {(1, 2): -1})
    with pytest.raises(FillingError):
        Polyomino("diagonal", 2)


def test_partition_filling_conditions():
    assert is_partition_filling(make_filling(NESTING, 2, {(1, -2): 1, (2, -1): 1}))
    problems = partition_filling_violations(make_filling(NESTING, 2, {(1, -2): 2}))
    assert "entries must be 0 or 1" in problems
    assert any("mirror" in problem for problem in problems)
    two_diagonal = make_filling(NESTING, 2, {(1, -1): 1, (2, -2): 1})
    assert partition_filling_violations(two_diagonal) == ["more than one entry on the diagonal"]


def test_text_format():
    filling = make_filling(CROSSING, 2, {(1, 2): 3, (2, -2): 1})
    text = to_text(filling)
    assert text == "crossing 2\n1,2,3\n2,-2,1\n"
    assert from_text(text) == filling


def test_malformed_text():
    with pytest.raises(FillingError):
        from_text("")
    with pytest.raises(FillingError):
        from_text("nesting 2\n1,2\n")
