"""
Verification Service - Exhaustive checks of the bijections, fiber tables and the negative control
"""

import csv
import io
import random
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Dict, List, Tuple

from app.models.errors import CapExceededError, UnknownSuiteError, WrongTypeError
from app.models.integer_partition import EMPTY
from app.models.partition import (
    CROSSING,
    DEFAULT_CAP,
    NESTING,
    config_of,
    count_partitions,
    enumerate_configs,
    enumerate_partitions,
    format_partition,
    make_partition,
    parse_set_notation,
    random_partition,
    swap_extreme,
    to_json,
)
from app.models.polyomino import make_filling
from app.services.growth import (
    backward_growth,
    evacuate,
    filling_to_partition,
    forward_growth,
    greene_labels,
    longest_chain,
    maxswap_inverse,
    maxswap_map,
    partition_to_filling,
)
from app.services.semistandard import semistandard_backward, semistandard_forward, semistandard_swap
from app.services.statistics import (
    crossings,
    is_noncrossing,
    is_nonnesting,
    max_crossing_card,
    max_nesting_card,
    nestings,
)
from app.services.swaps import nc_from_config, nn_from_config, swap_map, swap_map_B
from app.services.triangulations import (
    DEFAULT_FAN_CAP,
    DEFAULT_FILLING_CAP,
    count_k_triangulations,
    count_maximal_fillings,
    count_symmetric_fans,
    crossing_witness,
    enumerate_fans,
    fan_to_filling,
    filling_to_fan,
    is_maximal_filling,
    nml_counts,
)

DEFAULT_SETTINGS = {
    "enumeration_cap": DEFAULT_CAP,
    "filling_cap": DEFAULT_FILLING_CAP,
    "fan_cap": DEFAULT_FAN_CAP,
    "random_cases": 10000,
    "seed": 0,
    "jobs": 1,
}

FIBER_COLUMNS = ("op", "cl", "crossings", "nestings", "maxcross", "maxnest", "count")

NEGATIVE_CONTROL_PARTITION = ((1, 7), (2, 8), (3, 4, 5, 6))
NEGATIVE_CONTROL_EXPECTED = (
    "{{1,4,6},{2,5,8},{3,7}}",
    "{{1,4,7},{3,5,8},{2,6}}",
    "{{1,4,8},{2,5,7},{3,6}}",
    "{{1,5,8},{2,4,7},{3,6}}",
)

NML_MAX_SUM = 4


@dataclass(frozen=True)
class Failure:
    """A counterexample: the input as replayable text plus what was expected and found."""

    input: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    suite: str
    ctype: str
    n: int
    cases: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def sort_key(self):
        return (self.suite, self.ctype, self.n)

    def to_dict(self):
        return {
            "suite": self.suite,
            "type": self.ctype,
            "n": self.n,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [vars(failure) for failure in self.failures],
            "notes": list(self.notes),
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class FiberTable:
    """
    Joint distribution of (crossings, nestings, maxcross, maxnest) per opener-closer fiber.

    Rows are keyed by (openers, closers), both as sorted tuples.
    """

    ctype: str
    n: int
    rows: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Counter] = field(default_factory=dict)

    @property
    def total(self):
        return sum(sum(counter.values()) for counter in self.rows.values())

    def row_total(self, key):
        return sum(self.rows[key].values())

    def records(self):
        """Flat records in FIBER_COLUMNS order, sorted by fiber then statistics."""
        result = []
        for (op, cl) in sorted(self.rows):
            counter = self.rows[(op, cl)]
            for stats in sorted(counter):
                result.append([" ".join(map(str, op)), " ".join(map(str, cl)), *stats, counter[stats]])
        return result

    def to_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(FIBER_COLUMNS)
        writer.writerows(self.records())
        return buffer.getvalue()


def _settings(settings):
    merged = dict(DEFAULT_SETTINGS)
    merged.update(settings or {})
    return merged


def _fiber_key(partition):
    config = config_of(partition)
    return tuple(sorted(config.openers)), tuple(sorted(config.closers))


def distribution_table(ctype, n, cap=DEFAULT_CAP):
    """
    Build the fiber table of all partitions of a type and rank.

    Args:
        ctype (str): One of A, B, C, D
        n (int): Rank
        cap (int): Enumeration cap

    Returns:
        FiberTable: The table
    """
    rows = defaultdict(Counter)
    for partition in enumerate_partitions(ctype, n, cap):
        stats = (
            crossings(partition),
            nestings(partition),
            max_crossing_card(partition),
            max_nesting_card(partition),
        )
        rows[_fiber_key(partition)][stats] += 1
    return FiberTable(ctype, n, dict(rows))


def _failure(partition, expected, actual):
    return Failure(to_json(partition), str(expected), str(actual))


def _check_swap(report, ctype, n, settings):
    for partition in enumerate_partitions(ctype, n, settings["enumeration_cap"]):
        report.cases += 1
        image = swap_map(partition)
        if config_of(image) != config_of(partition):
            report.failures.append(_failure(partition, "same openers and closers", format_partition(image)))
            continue
        expected = (nestings(partition), crossings(partition))
        actual = (crossings(image), nestings(image))
        if expected != actual:
            report.failures.append(_failure(partition, expected, actual))
        if ctype == "C":
            expected = (nestings(partition, True), crossings(partition, True))
            actual = (crossings(image, True), nestings(image, True))
            if expected != actual:
                report.failures.append(_failure(partition, f"positive openers {expected}", actual))
        if ctype == "A" and is_noncrossing(partition):
            expected = (nestings(partition), max_nesting_card(partition))
            actual = (crossings(image), max_crossing_card(image))
            if not is_nonnesting(image) or expected != actual:
                report.failures.append(_failure(partition, f"non-nesting with {expected}", actual))


def _check_swap_b(report, ctype, n, settings):
    for partition in enumerate_partitions("B", n, settings["enumeration_cap"]):
        report.cases += 1
        image = swap_map_B(partition)
        if config_of(image) != config_of(partition):
            report.failures.append(_failure(partition, "same openers and closers", format_partition(image)))
        elif crossings(image) != nestings(partition):
            report.failures.append(_failure(partition, nestings(partition), crossings(image)))


def _fibers(ctype, n, cap):
    noncrossing, nonnesting = defaultdict(set), defaultdict(set)
    for partition in enumerate_partitions(ctype, n, cap):
        key = config_of(partition)
        if is_noncrossing(partition):
            noncrossing[key].add(partition)
        if is_nonnesting(partition):
            nonnesting[key].add(partition)
    return noncrossing, nonnesting


def _check_unique(report, ctype, n, settings):
    noncrossing, nonnesting = _fibers(ctype, n, settings["enumeration_cap"])
    for config in enumerate_configs(ctype, n):
        report.cases += 1
        label = f'{{"type":"{ctype}","n":{n},"op":{sorted(config.openers)},"cl":{sorted(config.closers)}}}'
        nc, nn = noncrossing[config], nonnesting[config]
        if len(nc) != 1 or len(nn) != 1:
            report.failures.append(Failure(label, "one non-crossing and one non-nesting", f"{len(nc)} and {len(nn)}"))
            continue
        if nc != set(nc_from_config(ctype, config.openers, config.closers, n)):
            report.failures.append(Failure(label, "nc_from_config", format_partition(next(iter(nc)))))
        if nn != set(nn_from_config(ctype, config.openers, config.closers, n)):
            report.failures.append(Failure(label, "nn_from_config", format_partition(next(iter(nn)))))
        if ctype in ("A", "C"):
            (first,), (second,) = nc, nn
            if swap_map(first) != second:
                report.failures.append(_failure(first, format_partition(second), format_partition(swap_map(first))))


def _d_catalan(n):
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


def _check_d_fibers(report, ctype, n, settings):
    noncrossing, nonnesting = _fibers("D", n, settings["enumeration_cap"])
    for config in enumerate_configs("D", n):
        report.cases += 1
        label = f'{{"type":"D","n":{n},"op":{sorted(config.openers)},"cl":{sorted(config.closers)}}}'
        for name, found, built in (
            ("non-crossing", noncrossing[config], nc_from_config("D", config.openers, config.closers, n)),
            ("non-nesting", nonnesting[config], nn_from_config("D", config.openers, config.closers, n)),
        ):
            if len(found) > 2:
                report.failures.append(Failure(label, f"at most two {name}", len(found)))
            if found != set(built):
                report.failures.append(
                    Failure(label, sorted(map(format_partition, found)), sorted(map(format_partition, built)))
                )
    totals = (sum(map(len, noncrossing.values())), sum(map(len, nonnesting.values())))
    report.notes.append(f"non-crossing {totals[0]}, non-nesting {totals[1]}")
    if totals != (_d_catalan(n), _d_catalan(n)):
        report.failures.append(Failure(f"D{n}", (_d_catalan(n), _d_catalan(n)), totals))


def _check_d_symmetry(report, ctype, n, settings):
    for partition in enumerate_partitions("D", n, settings["enumeration_cap"]):
        report.cases += 1
        image = swap_extreme(partition)
        expected = (is_noncrossing(partition), is_nonnesting(partition))
        actual = (is_noncrossing(image), is_nonnesting(image))
        if expected != actual:
            report.failures.append(_failure(partition, expected, actual))


def _check_maxswap(report, ctype, n, settings):
    involution_witness = exchange_witness = None
    for partition in enumerate_partitions("C", n, settings["enumeration_cap"]):
        report.cases += 1
        image = maxswap_map(partition)
        if config_of(image) != config_of(partition):
            report.failures.append(_failure(partition, "same openers and closers", format_partition(image)))
            continue
        if max_crossing_card(image) != max_nesting_card(partition):
            report.failures.append(_failure(partition, f"maxcross {max_nesting_card(partition)}", max_crossing_card(image)))
        preimage = maxswap_inverse(partition)
        if max_nesting_card(preimage) != max_crossing_card(partition):
            report.failures.append(_failure(partition, f"maxnest of preimage {max_crossing_card(partition)}", max_nesting_card(preimage)))
        if maxswap_inverse(image) != partition:
            report.failures.append(_failure(partition, "maxswap_inverse returns the input", format_partition(image)))
        if involution_witness is None and maxswap_map(image) != partition:
            involution_witness = partition
        if exchange_witness is None and max_nesting_card(image) != max_crossing_card(partition):
            exchange_witness = partition
    if involution_witness is not None:
        report.notes.append(
            f"not an involution: {format_partition(involution_witness)} -> {format_partition(maxswap_map(involution_witness))}"
        )
    if exchange_witness is not None:
        image = maxswap_map(exchange_witness)
        report.notes.append(
            f"maxnest not exchanged: {format_partition(exchange_witness)} has maxcross "
            f"{max_crossing_card(exchange_witness)}, its image has maxnest {max_nesting_card(image)}"
        )


def _check_growth_roundtrip(report, ctype, n, settings):
    for partition in enumerate_partitions("C", n, settings["enumeration_cap"]):
        for kind in (NESTING, CROSSING):
            report.cases += 1
            filling = partition_to_filling(partition, kind)
            labels = forward_growth(filling)
            recovered = backward_growth(labels.staircase, kind, n)
            if recovered != filling:
                report.failures.append(_failure(partition, f"{kind} filling", recovered.entries))
            elif filling_to_partition(recovered) != partition:
                report.failures.append(_failure(partition, "same partition", format_partition(filling_to_partition(recovered))))


def _oracle_inputs(n, settings):
    limit = settings["random_cases"]
    if count_partitions("C", n) <= limit:
        return list(enumerate_partitions("C", n, settings["enumeration_cap"]))
    rng = random.Random(settings["seed"])
    return [random_partition("C", n, rng) for _ in range(limit)]


def _check_greene(report, ctype, n, settings):
    for partition in _oracle_inputs(n, settings):
        for kind in (NESTING, CROSSING):
            report.cases += 1
            filling = partition_to_filling(partition, kind)
            grown, oracle = forward_growth(filling), greene_labels(filling)
            if grown.corners != oracle.corners:
                bad = sorted(c for c in oracle.corners if grown.corners[c] != oracle.corners[c])
                report.failures.append(_failure(partition, f"{kind} Greene labels", f"differ at {bad}"))


def _check_lemma_chains(report, ctype, n, settings):
    for partition in enumerate_partitions("C", n, settings["enumeration_cap"]):
        report.cases += 1
        expected = (max_nesting_card(partition), max_crossing_card(partition))
        actual = (
            longest_chain(partition_to_filling(partition, NESTING)),
            longest_chain(partition_to_filling(partition, CROSSING)),
        )
        if expected != actual:
            report.failures.append(_failure(partition, expected, actual))


def _check_fans(report, ctype, n, settings):
    cap = settings["filling_cap"]
    for k in range(n + 1):
        report.cases += 1
        counts = (
            count_k_triangulations(n, k, cap),
            count_symmetric_fans(n, k, settings["fan_cap"]),
            count_maximal_fillings(n, k, cap),
        )
        report.notes.append(f"k={k}: {counts[0]}")
        if len(set(counts)) != 1:
            report.failures.append(Failure(f"n={n}, k={k}", "equal counts", counts))
        for fan in enumerate_fans(n, k, settings["fan_cap"]):
            report.cases += 1
            filling = fan_to_filling(fan)
            if not is_maximal_filling(filling, k) or filling_to_fan(filling) != fan:
                report.failures.append(Failure(str(fan.paths), "maximal filling decoding to the fan", filling.entries))
    if n >= 3:
        report.notes.append(f"crossing witness: {crossing_witness(n)}")


def _symmetric_multiplicities(filling, values):
    polyomino = filling.polyomino
    classes = sorted({min(cell, polyomino.partner(cell)) for cell in filling.support()})
    entries = {}
    for cell, value in zip(classes, values):
        entries[cell] = value
        entries[polyomino.partner(cell)] = value
    return make_filling(filling.kind, filling.n, entries), len(classes)


def _check_nml(report, ctype, n, settings):
    cap = settings["filling_cap"]
    for m in range(1, NML_MAX_SUM + 1):
        for l in range(1, m + 1):
            for k in range(n + 1):
                report.cases += 1
                nesting = nml_counts(n, m, l, NESTING, k, cap)
                crossing = nml_counts(n, m, l, CROSSING, k, cap)
                if nesting != crossing:
                    report.failures.append(Failure(f"n={n}, m={m}, l={l}, k={k}", nesting, crossing))
    for partition in enumerate_partitions("C", n, settings["enumeration_cap"]):
        base = partition_to_filling(partition, NESTING)
        _, size = _symmetric_multiplicities(base, ())
        for values in product((1, 2), repeat=size):
            report.cases += 1
            filling, _ = _symmetric_multiplicities(base, values)
            labels = semistandard_forward(filling)
            if semistandard_backward(labels.staircase, NESTING, n) != filling:
                report.failures.append(_failure(partition, f"semistandard round trip {values}", labels.staircase))
            elif semistandard_swap(filling).total() != filling.total():
                report.failures.append(_failure(partition, f"entry sum {filling.total()}", semistandard_swap(filling).total()))


def negative_control():
    """
    Statistics of the A_8 example and the partitions with six crossings and one nesting.

    Returns:
        tuple: ((crossings, nestings) of the example, partitions found in enumeration order)
    """
    example = make_partition("A", 8, NEGATIVE_CONTROL_PARTITION)
    found = tuple(
        partition
        for partition in enumerate_partitions("A", 8, cap=8)
        if crossings(partition) == 6 and nestings(partition) == 1
    )
    return (crossings(example), nestings(example)), found


def _check_negative_control(report, ctype, n, settings):
    report.n = 8
    stats, found = negative_control()
    report.cases = 2
    if stats != (1, 6):
        report.failures.append(Failure(format_partition(make_partition("A", 8, NEGATIVE_CONTROL_PARTITION)), (1, 6), stats))
    expected = {parse_set_notation(text, "A", 8) for text in NEGATIVE_CONTROL_EXPECTED}
    if len(found) != len(expected) or set(found) != expected:
        report.failures.append(
            Failure("A8 with 6 crossings and 1 nesting", list(NEGATIVE_CONTROL_EXPECTED), sorted(map(format_partition, found)))
        )
        return
    report.notes.extend(NEGATIVE_CONTROL_EXPECTED)


def _chains(length):
    def extend(chain):
        if len(chain) == length + 1:
            yield chain
            return
        last = chain[-1]
        yield from extend(chain + [last])
        for row in range(len(last) + 1):
            if last.can_add(row):
                yield from extend(chain + [last.add_box(row)])

    yield from extend([EMPTY])


def _check_evacuation(report, ctype, n, settings):
    for length in range(n + 1):
        for chain in _chains(length):
            report.cases += 1
            once = evacuate(chain)
            if once[-1] != chain[-1] or evacuate(once) != chain:
                report.failures.append(Failure(";".join(map(str, chain)), "involution", ";".join(map(str, once))))


# name -> (default type, accepted types, cap setting, check)
SUITES = {
    "swap-A": ("A", ("A",), "enumeration_cap", _check_swap),
    "swap-C": ("C", ("C",), "enumeration_cap", _check_swap),
    "swap-B": ("B", ("B",), "enumeration_cap", _check_swap_b),
    "unique-ncnn": ("A", ("A", "B", "C"), "enumeration_cap", _check_unique),
    "d-fibers": ("D", ("D",), "enumeration_cap", _check_d_fibers),
    "d-symmetry": ("D", ("D",), "enumeration_cap", _check_d_symmetry),
    "maxswap": ("C", ("C",), "enumeration_cap", _check_maxswap),
    "growth-roundtrip": ("C", ("C",), "enumeration_cap", _check_growth_roundtrip),
    "greene-oracle": ("C", ("C",), "enumeration_cap", _check_greene),
    "lemma-chains": ("C", ("C",), "enumeration_cap", _check_lemma_chains),
    "fans-triangulations": ("C", ("C",), "filling_cap", _check_fans),
    "nml": ("C", ("C",), "filling_cap", _check_nml),
    "negative-control": ("A", ("A",), None, _check_negative_control),
    "evacuation": ("A", ("A", "B", "C", "D"), "enumeration_cap", _check_evacuation),
}


def verify_suite(name, ctype=None, n=3, settings=None):
    """
    Run one verification suite.

    Args:
        name (str): Suite name, a key of SUITES
        ctype (str, optional): Type; defaults to the suite's own type
        n (int): Rank
        settings (dict, optional): Caps, random case count and seed

    Returns:
        VerificationReport: Cases checked and failures found

    Raises:
        UnknownSuiteError: If the suite does not exist
        WrongTypeError: If the suite does not apply to the type
        CapExceededError: If n exceeds the suite's cap
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")
    default_type, accepted, cap_key, check = SUITES[name]
    ctype = ctype or default_type
    if ctype not in accepted:
        raise WrongTypeError(f"Suite {name} runs on types {', '.join(accepted)}, got {ctype}")
    settings = _settings(settings)
    if cap_key is not None and n > settings[cap_key]:
        raise CapExceededError(f"rank {n} exceeds {cap_key} {settings[cap_key]}")
    report = VerificationReport(name, ctype, n)
    start = time.perf_counter()
    check(report, ctype, n, settings)
    report.elapsed = time.perf_counter() - start
    return report


def _run_task(task):
    name, ctype, n, settings = task
    return verify_suite(name, ctype, n, settings)


def run_suites(tasks, jobs=1, settings=None):
    """
    Run several (suite, type, rank) tasks, optionally in worker processes.

    Args:
        tasks (iterable): (name, type or None, rank) triples
        jobs (int): Number of worker processes
        settings (dict, optional): Shared settings

    Returns:
        list: VerificationReports sorted by suite, type and rank
    """
    work = [(name, ctype, n, settings) for name, ctype, n in tasks]
    for name, ctype, n, _ in work:
        if name not in SUITES:
            raise UnknownSuiteError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if jobs <= 1 or len(work) <= 1:
        reports = [_run_task(task) for task in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            reports = list(executor.map(_run_task, work))
    return sorted(reports, key=VerificationReport.sort_key)
