from collections import Counter

import pytest

from app.models.errors import CapExceededError, UnknownSuiteError, WrongTypeError
from app.models.partition import parse_set_notation
from app.services.verification import (
    FIBER_COLUMNS,
    NEGATIVE_CONTROL_EXPECTED,
    SUITES,
    distribution_table,
    negative_control,
    run_suites,
    verify_suite,
)


WIDE = {"enumeration_cap": 8}


@pytest.mark.parametrize(
    "name, ctype, n",
    [
        ("swap-A", None, 7),
        ("swap-C", None, 4),
        ("swap-B", None, 4),
        ("unique-ncnn", "A", 7),
        ("unique-ncnn", "B", 4),
        ("unique-ncnn", "C", 4),
        ("d-symmetry", None, 4),
        ("maxswap", None, 4),
        ("growth-roundtrip", None, 4),
        ("greene-oracle", None, 4),
        ("lemma-chains", None, 4),
        ("fans-triangulations", None, 5),
        ("nml", None, 3),
        ("evacuation", None, 6),
    ],
)
def test_suites_pass_at_full_rank(name, ctype, n):
    report = verify_suite(name, ctype, n, settings=WIDE)
    assert report.passed, report.failures[:3]
    assert report.cases > 0


def test_noncrossing_type_a_inputs_keep_their_maximal_nesting():
    report = verify_suite("swap-A", n=8, settings=WIDE)
    assert report.passed, report.failures[:3]
    assert report.cases == 4140


@pytest.mark.parametrize("n, total", [(3, 14), (4, 50)])
def test_type_d_fibers(n, total):
    report = verify_suite("d-fibers", n=n)
    assert report.passed
    assert f"non-crossing {total}, non-nesting {total}" in report.notes


def test_maxswap_is_not_an_involution():
    report = verify_suite("maxswap", n=4)
    assert report.passed
    assert any(note.startswith("not an involution") for note in report.notes)
    assert any(note.startswith("maxnest not exchanged") for note in report.notes)


def test_fan_counts_are_noted():
    report = verify_suite("fans-triangulations", n=3)
    assert report.notes[:4] == ["k=0: 1", "k=1: 6", "k=2: 3", "k=3: 1"]
    assert report.notes[-1].startswith("crossing witness")


def test_negative_control():
    stats, found = negative_control()
    assert stats == (1, 6)
    assert len(found) == 4
    assert set(found) == {parse_set_notation(text, "A", 8) for text in NEGATIVE_CONTROL_EXPECTED}
    report = verify_suite("negative-control")
    assert report.passed
    assert report.notes == list(NEGATIVE_CONTROL_EXPECTED)
    assert "{{1,4,7},{3,5,8},{2,6}}" in report.notes
    assert (report.ctype, report.n) == ("A", 8)


def test_suite_errors():
    with pytest.raises(UnknownSuiteError):
        verify_suite("no-such-suite")
    with pytest.raises(WrongTypeError):
        verify_suite("swap-A", "C", 3)
    with pytest.raises(CapExceededError):
        verify_suite("swap-A", n=7)
    with pytest.raises(CapExceededError):
        verify_suite("swap-C", n=3, settings={"enumeration_cap": 2})


def test_every_suite_has_a_default_type():
    for name, (default_type, accepted, _, _) in SUITES.items():
        assert default_type in accepted, name


def test_greene_oracle_samples_when_enumeration_is_too_large():
    report = verify_suite("greene-oracle", n=3, settings={"random_cases": 5, "seed": 1})
    assert report.passed
    assert report.cases == 10


def test_distribution_table_of_a4():
    table = distribution_table("A", 4)
    assert table.total == 15
    for key, counter in table.rows.items():
        pairs = Counter()
        for (cr, ne, _, _), count in counter.items():
            pairs[(cr, ne)] += count
        assert all(pairs[(ne, cr)] == count for (cr, ne), count in pairs.items()), key


def test_distribution_table_shapes():
    assert len(distribution_table("C", 1).rows) == 2
    assert distribution_table("D", 2).total == 4
    csv = distribution_table("A", 3).to_csv()
    assert csv.splitlines()[0] == ",".join(FIBER_COLUMNS)
    assert len(csv.splitlines()) == 1 + len(distribution_table("A", 3).records())


def test_run_suites_sorts_reports():
    tasks = [("swap-C", None, 2), ("swap-A", None, 3), ("swap-A", None, 2)]
    reports = run_suites(tasks)
    assert [(r.suite, r.ctype, r.n) for r in reports] == [("swap-A", "A", 2), ("swap-A", "A", 3), ("swap-C", "C", 2)]
    assert all(r.passed for r in reports)


def test_run_suites_in_worker_processes():
    tasks = [("swap-B", None, 2), ("d-symmetry", None, 2)]
    reports = run_suites(tasks, jobs=2)
    assert [r.suite for r in reports] == ["d-symmetry", "swap-B"]
    assert all(r.passed for r in reports)


def test_run_suites_rejects_unknown_names():
    with pytest.raises(UnknownSuiteError):
        run_suites([("swap-A", None, 2), ("nope", None, 2)])


def test_report_dict():
    record = verify_suite("swap-A", n=2).to_dict()
    assert record["suite"] == "swap-A"
    assert record["passed"] is True
    assert record["failures"] == []
