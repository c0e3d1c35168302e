"""
Output - Rich tables and machine readable emitters shared by the CLI and the menu
"""

import csv
import io
import json

from rich.console import Console
from rich.table import Table

from app.models.partition import format_partition
from app.services.statistics import CSV_COLUMNS, is_noncrossing, is_nonnesting, stats_row
from app.services.verification import FIBER_COLUMNS

console = Console()


def emit(text):
    """Print machine readable text without rich markup or wrapping."""
    console.print(text, markup=False, highlight=False, soft_wrap=True, end="")


def csv_text(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def json_text(value):
    return json.dumps(value, indent=2) + "\n"


def format_stats_table(partitions, title="Partition Statistics"):
    """
    Format partition statistics as a rich table.

    Args:
        partitions (iterable): SetPartitions
        title (str): Table title

    Returns:
        Table: Formatted rich table
    """
    table = Table(title=title)
    table.add_column("Partition", style="cyan")
    table.add_column("cr", justify="center", style="green")
    table.add_column("ne", justify="center", style="green")
    table.add_column("maxcr", justify="center", style="magenta")
    table.add_column("maxne", justify="center", style="magenta")
    table.add_column("Openers", style="dim")
    table.add_column("Closers", style="dim")
    table.add_column("NC/NN", justify="center")

    for partition in partitions:
        row = stats_row(partition)
        flags = ("NC" if is_noncrossing(partition) else "") + ("/NN" if is_nonnesting(partition) else "")
        table.add_row(row[2], *(str(value) for value in row[3:7]), row[7], row[8], flags.lstrip("/"))
    return table


def stats_records(partitions):
    return [stats_row(partition) for partition in partitions]


def stats_json(partitions):
    return [dict(zip(CSV_COLUMNS, row)) for row in stats_records(partitions)]


def format_fiber_table(fiber_table):
    """Rich view of a FiberTable, one line per fiber and statistics tuple."""
    table = Table(title=f"Fibers of {fiber_table.ctype}{fiber_table.n} ({fiber_table.total} partitions)")
    for column in FIBER_COLUMNS:
        table.add_column(column, justify="center" if column not in ("op", "cl") else "left")
    for record in fiber_table.records():
        table.add_row(*(str(value) for value in record))
    return table


def format_report_table(reports):
    """
    Format verification reports as a rich table.

    Args:
        reports (list): VerificationReports

    Returns:
        Table: Formatted rich table
    """
    table = Table(title="Verification")
    table.add_column("Suite", style="cyan")
    table.add_column("Type", justify="center")
    table.add_column("n", justify="center")
    table.add_column("Cases", justify="right")
    table.add_column("Result", justify="center")
    table.add_column("Seconds", justify="right", style="dim")
    table.add_column("Notes", style="dim")

    for report in reports:
        result = "[green]pass[/green]" if report.passed else f"[red]{len(report.failures)} failed[/red]"
        table.add_row(
            report.suite,
            report.ctype,
            str(report.n),
            str(report.cases),
            result,
            f"{report.elapsed:.2f}",
            "; ".join(report.notes),
        )
    return table


def print_failures(reports):
    """Print the first counterexample of every failing report as replayable JSON."""
    for report in reports:
        if report.failures:
            failure = report.failures[0]
            console.print(f"[red]{report.suite} {report.ctype}{report.n}:[/red] expected {failure.expected}, got {failure.actual}")
            emit(failure.input + "\n")


def describe(partition):
    return f"{format_partition(partition)}  ({partition.ctype}{partition.n})"
