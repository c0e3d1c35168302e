#!/usr/bin/env python3
"""
Crossings and Nestings CLI

This application works with set partitions of the classical types A, B, C and D:
1. Enumerating partitions and their crossing / nesting statistics
2. Applying the bijections that interchange crossings and nestings
3. Running exhaustive verification suites
4. Counting triangulations, fans of Dyck paths and maximal fillings
5. Rendering arc diagrams and polyomino fillings
"""

import argparse
import sys
from pathlib import Path

import questionary
from rich.console import Console

from app.models.errors import LabelError, WrongTypeError
from app.models.partition import (
    DIAGRAM_KINDS,
    NESTING,
    TYPES,
    enumerate_configs,
    enumerate_partitions,
    format_partition,
    from_json,
    parse_set_notation,
    swap_extreme,
    to_json,
)
from app.models.polyomino import from_text
from app.services.growth import (
    backward_growth,
    is_vacillating,
    maxswap_inverse,
    maxswap_map,
    parse_labels,
    partition_to_filling,
)
from app.services.semistandard import semistandard_backward
from app.services.statistics import CSV_COLUMNS, is_noncrossing, is_nonnesting
from app.services.swaps import nc_from_config, nn_from_config, swap_map, swap_map_B
from app.services.triangulations import count_k_triangulations, count_maximal_fillings, count_symmetric_fans
from app.services.verification import FIBER_COLUMNS, SUITES, distribution_table, run_suites
from app.utils.config_manager import SETTING_LABELS, ConfigManager
from app.utils.menu_manager import COUNT_OBJECTS, MAP_NAMES, hub_menu
from app.utils.output import (
    csv_text,
    describe,
    emit,
    format_fiber_table,
    format_report_table,
    format_stats_table,
    json_text,
    print_failures,
    stats_json,
    stats_records,
)
from app.utils.render import FORMATS, render_filling, render_partition

console = Console()

DEFAULT_TYPE = "A"
DEFAULT_RANK = 3

MAP_ALIASES = {"swapB": "swap-B"}


def _global_flags(with_defaults):
    """Flags accepted before and after the subcommand; only the top level sets defaults."""
    default = (lambda value: value) if with_defaults else (lambda value: argparse.SUPPRESS)
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--type", dest="ctype", choices=TYPES, default=default(None),
                        help="classical type (default A, or the suite's own type)")
    parser.add_argument("--rank", "-n", type=int, default=default(None), help="rank n")
    parser.add_argument("--format", dest="fmt", choices=("json", "csv", "table"), default=default("table"),
                        help="output format")
    parser.add_argument("--cap", type=int, default=default(None), help="override the enumeration caps")
    parser.add_argument("--jobs", type=int, default=default(None), help="worker processes for verify")
    parser.add_argument("--config", default=default(None), help="configuration file")
    return parser


def build_parser():
    """
    Build the argument parser with all subcommands.

    Returns:
        argparse.ArgumentParser: The parser
    """
    common = _global_flags(with_defaults=False)
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Crossings and nestings of set partitions of classical types",
        parents=[_global_flags(with_defaults=True)],
    )
    sub = parser.add_subparsers(dest="command")

    sub.add_parser("enumerate", parents=[common], help="list every partition of a type and rank")

    stats = sub.add_parser("stats", parents=[common], help="crossing and nesting statistics")
    stats.add_argument("partition", nargs="?", help="partition in set notation or JSON; all partitions if omitted")

    mapping = sub.add_parser("map", parents=[common], help="apply a bijection or build NC/NN representatives")
    mapping.add_argument("name", nargs="?", help=f"bijection or constructor: {', '.join(MAP_NAMES)}")
    mapping.add_argument("partition", nargs="?")
    mapping.add_argument("--bijection", choices=sorted(set(MAP_NAMES) | set(MAP_ALIASES)), help="same as the name argument")
    mapping.add_argument("--in", dest="source", help="read the partition from a JSON record file")
    mapping.add_argument("--out", dest="target", help="write the results as JSON records to a file")
    mapping.add_argument("--op", default="", help="openers for nc / nn, comma separated")
    mapping.add_argument("--cl", default="", help="closers for nc / nn, comma separated")

    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suites", nargs="*", help=f"suites (default: all of {', '.join(SUITES)})")

    count = sub.add_parser("count", parents=[common], help="count partitions, configurations, fans, ...")
    count.add_argument("--object", dest="obj", choices=COUNT_OBJECTS, default="partitions")
    count.add_argument("--k", type=int, default=1, help="chain length / maximal crossing / number of paths")
    count.add_argument("--table", action="store_true", help="print the count for every k")

    sub.add_parser("table", parents=[common], help="opener-closer fiber table")

    render = sub.add_parser("render", parents=[common], help="draw an arc diagram or a polyomino filling")
    render.add_argument("partition", nargs="?")
    render.add_argument("--filling", help="file in the sparse filling text format")
    render.add_argument("--labels", help="';'-separated staircase labels, e.g. 1;0;1")
    render.add_argument("--kind", choices=DIAGRAM_KINDS, default=NESTING)
    render.add_argument("--as", dest="style", choices=FORMATS, default="ascii")
    render.add_argument("--polyomino", action="store_true", help="draw the partition's polyomino filling")
    render.add_argument("--output", "-o", help="write to a file instead of the terminal")
    return parser


def _settings(args, config_manager):
    overrides = {"jobs": args.jobs}
    if args.cap is not None:
        overrides.update(enumeration_cap=args.cap, filling_cap=args.cap, fan_cap=args.cap)
    return config_manager.get_settings(overrides)


def _ctype(args):
    return args.ctype or DEFAULT_TYPE


def _rank(args):
    return args.rank if args.rank is not None else DEFAULT_RANK


def _read_partition(args):
    if not args.partition:
        raise ValueError("A partition is required")
    return parse_set_notation(args.partition, args.ctype, args.rank)


def _int_set(text):
    try:
        return {int(part) for part in text.replace(" ", ",").split(",") if part}
    except ValueError:
        raise ValueError(f"Not a list of integers: {text!r}")


def _print_partitions(partitions, fmt, title):
    if fmt == "json":
        emit("".join(to_json(partition) + "\n" for partition in partitions))
    elif fmt == "csv":
        emit(csv_text(CSV_COLUMNS, stats_records(partitions)))
    else:
        console.print(format_stats_table(partitions, title=title))


def cmd_enumerate(args, settings):
    ctype, n = _ctype(args), _rank(args)
    partitions = list(enumerate_partitions(ctype, n, settings["enumeration_cap"]))
    _print_partitions(partitions, args.fmt, f"{ctype}{n}: {len(partitions)} partitions")
    return 0


def cmd_stats(args, settings):
    if args.partition:
        partitions = [_read_partition(args)]
    else:
        partitions = list(enumerate_partitions(_ctype(args), _rank(args), settings["enumeration_cap"]))
    if args.fmt == "json":
        emit(json_text(stats_json(partitions)))
    else:
        _print_partitions(partitions, args.fmt, "Partition Statistics")
    return 0


MAPS = {
    "swap": swap_map,
    "swap-B": swap_map_B,
    "maxswap": maxswap_map,
    "maxswap-inverse": maxswap_inverse,
    "swap-extreme": swap_extreme,
}


def _map_request(args):
    """Resolve the bijection name and the partition text of a map command."""
    name, partition = args.name, args.partition
    if args.bijection:
        if name is not None and partition is None:
            name, partition = None, name
        if name is not None and MAP_ALIASES.get(name, name) != MAP_ALIASES.get(args.bijection, args.bijection):
            raise ValueError(f"Conflicting bijections: {name} and {args.bijection}")
        name = args.bijection
    if name is None:
        raise ValueError("A bijection is required")
    name = MAP_ALIASES.get(name, name)
    if name not in MAP_NAMES:
        raise ValueError(f"Unknown bijection {name!r}; choose from {', '.join(MAP_NAMES)}")
    return name, partition


def _map_input(args, partition_text):
    if args.source:
        if partition_text:
            raise ValueError("Give the partition either inline or with --in, not both")
        return from_json(Path(args.source).read_text().strip())
    if not partition_text:
        raise ValueError("A partition is required")
    return parse_set_notation(partition_text, args.ctype, args.rank)


def cmd_map(args, settings):
    name, partition_text = _map_request(args)
    if name in ("nc", "nn"):
        build = nc_from_config if name == "nc" else nn_from_config
        ctype = _ctype(args)
        openers, closers = _int_set(args.op), _int_set(args.cl)
        n = args.rank if args.rank is not None else max(openers | closers | {1})
        results = sorted(build(ctype, openers, closers, n), key=format_partition)
    else:
        partition = _map_input(args, partition_text)
        results = [MAPS[name](partition)]
        if args.fmt == "table":
            console.print(f"[cyan]{name}[/cyan] {describe(partition)}")
    if args.target:
        Path(args.target).write_text("".join(to_json(result) + "\n" for result in results))
        if args.fmt == "table":
            console.print(f"[green]Wrote {len(results)} partition(s) to {args.target}[/green]")
        return 0
    if args.fmt == "table" and not results:
        console.print("[yellow]No partition has these openers and closers.[/yellow]")
        return 0
    _print_partitions(results, args.fmt, f"{name} result")
    return 0


def cmd_verify(args, settings):
    names = args.suites
    if not names:
        names = [name for name, spec in SUITES.items() if args.ctype is None or args.ctype in spec[1]]
    tasks = [(name, args.ctype, _rank(args)) for name in names]
    if args.fmt == "table":
        console.print(f"[cyan]Running {len(tasks)} suite(s) with {settings['jobs']} worker(s)...[/cyan]")
    reports = run_suites(tasks, jobs=settings["jobs"], settings=settings)
    if args.fmt == "json":
        emit(json_text([report.to_dict() for report in reports]))
    elif args.fmt == "csv":
        rows = [[r.suite, r.ctype, r.n, r.cases, len(r.failures), int(r.passed)] for r in reports]
        emit(csv_text(("suite", "type", "n", "cases", "failures", "passed"), rows))
    else:
        console.print(format_report_table(reports))
        print_failures(reports)
        if all(report.passed for report in reports):
            console.print("[green]All suites passed.[/green]")
    return 0 if all(report.passed for report in reports) else 1


def _count(obj, ctype, n, k, settings):
    if obj == "partitions":
        return sum(1 for _ in enumerate_partitions(ctype, n, settings["enumeration_cap"]))
    if obj == "configs":
        return sum(1 for _ in enumerate_configs(ctype, n))
    if obj in ("noncrossing", "nonnesting"):
        test = is_noncrossing if obj == "noncrossing" else is_nonnesting
        return sum(1 for p in enumerate_partitions(ctype, n, settings["enumeration_cap"]) if test(p))
    if ctype != "C":
        raise WrongTypeError(f"{obj} are counted for type C, got {ctype}")
    if obj == "triangulations":
        return count_k_triangulations(n, k, settings["filling_cap"])
    if obj == "fans":
        return count_symmetric_fans(n, k, settings["fan_cap"])
    return count_maximal_fillings(n, k, settings["filling_cap"])


def cmd_count(args, settings):
    n = _rank(args)
    ctype = args.ctype or ("C" if args.obj in ("triangulations", "fans", "maximal-fillings") else DEFAULT_TYPE)
    if not args.table:
        emit(f"{_count(args.obj, ctype, n, args.k, settings)}\n")
        return 0
    rows = [[k, _count(args.obj, ctype, n, k, settings)] for k in range(n + 1)]
    if args.fmt == "json":
        emit(json_text({str(k): value for k, value in rows}))
    else:
        emit(csv_text(("k", "count"), rows))
    return 0


def cmd_table(args, settings):
    table = distribution_table(_ctype(args), _rank(args), settings["enumeration_cap"])
    if args.fmt == "csv":
        emit(table.to_csv())
    elif args.fmt == "json":
        emit(json_text([dict(zip(FIBER_COLUMNS, record)) for record in table.records()]))
    else:
        console.print(format_fiber_table(table))
    return 0


def _filling_from_labels(text, kind):
    labels = parse_labels(text)
    if len(labels) % 2 == 0:
        raise LabelError(f"Expected an odd number of staircase labels, got {len(labels)}")
    n = (len(labels) + 1) // 2
    if is_vacillating(labels):
        return backward_growth(labels, kind, n)
    return semistandard_backward(labels, kind, n)


def cmd_render(args, settings):
    if args.labels:
        document = render_filling(_filling_from_labels(args.labels, args.kind), args.style)
    elif args.filling:
        document = render_filling(from_text(Path(args.filling).read_text()), args.style)
    else:
        partition = _read_partition(args)
        if args.polyomino:
            document = render_filling(partition_to_filling(partition, args.kind), args.style)
        else:
            document = render_partition(partition, args.kind, args.style)
    if args.output:
        Path(args.output).write_text(document)
        console.print(f"[green]Wrote {args.output}[/green]")
    else:
        emit(document)
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "stats": cmd_stats,
    "map": cmd_map,
    "verify": cmd_verify,
    "count": cmd_count,
    "table": cmd_table,
    "render": cmd_render,
}


def run(argv, config_manager=None):
    """
    Parse and execute one command line.

    Args:
        argv (list): Arguments without the program name
        config_manager (ConfigManager, optional): Configuration source

    Returns:
        int: Exit code (0 success, 1 failed verification, 2 invalid input)
    """
    args = build_parser().parse_args(argv)
    if args.command is None:
        build_parser().print_help()
        return 2
    config_manager = config_manager or ConfigManager(args.config)
    try:
        return COMMANDS[args.command](args, _settings(args, config_manager))
    except ValueError as e:
        console.print(f"[red]Error: {str(e)}[/red]")
        return 2


def configure_settings(config_manager):
    """
    Configure application settings.

    Args:
        config_manager (ConfigManager): The configuration manager
    """
    settings = config_manager.get_settings()

    console.print("\n[bold]Current Settings:[/bold]")
    for key, label in SETTING_LABELS.items():
        console.print(f"{label}: {settings[key]}")

    choice = questionary.select(
        "Which setting would you like to change?",
        choices=list(SETTING_LABELS.values()) + ["Back to Main Menu"]
    ).ask()

    if choice in (None, "Back to Main Menu"):
        return

    key = next(key for key, label in SETTING_LABELS.items() if label == choice)
    new_value = questionary.text(
        f"Enter new value for {choice}:",
        default=str(settings[key]),
        validate=lambda text: text.strip().isdigit() or "Enter a non-negative integer"
    ).ask()
    if new_value is None:
        return

    try:
        config_manager.set_setting(key, new_value.strip())
        console.print("[green]Configuration updated successfully![/green]")
    except ValueError as e:
        console.print(f"[red]Error: {str(e)}[/red]")


def interactive(config_manager):
    """Hub menu loop used when the program starts without arguments."""
    while True:
        selection = hub_menu()
        if selection == "exit":
            console.print("[blue]Goodbye![/blue]")
            return 0
        if selection == "settings":
            configure_settings(config_manager)
        elif selection:
            run(selection, config_manager)


def main(argv=None):
    """
    Main function: run a subcommand, or the hub menu when no arguments are given.
    """
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        return interactive(ConfigManager())
    return run(argv)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        console.print("\n[yellow]Program interrupted.[/yellow]")
        sys.exit(0)
    except Exception as e:
        console.print(f"[red]Unexpected error: {str(e)}[/red]")
        sys.exit(1)
