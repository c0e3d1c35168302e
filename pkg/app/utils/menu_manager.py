"""
Menu Manager - Interactive prompts that assemble command lines for the hub menu
"""

import questionary
from rich.console import Console
from rich.panel import Panel

from app.models.partition import DIAGRAM_KINDS, TYPES
from app.services.verification import SUITES
from app.utils.render import FORMATS

console = Console()

MAP_NAMES = ("swap", "swap-B", "maxswap", "maxswap-inverse", "swap-extreme", "nc", "nn")
COUNT_OBJECTS = ("partitions", "configs", "noncrossing", "nonnesting", "triangulations", "fans", "maximal-fillings")
OUTPUT_FORMATS = ("table", "csv", "json")


def _is_rank(text):
    return text.isdigit() and int(text) >= 1 or "Enter a positive integer"


def ask_type_and_rank(default_type="A", default_rank="3"):
    """
    Ask for a classical type and a rank.

    Args:
        default_type (str): Preselected type
        default_rank (str): Preset rank

    Returns:
        list: ['--type', X, '--rank', n], or None if cancelled
    """
    ctype = questionary.select("Type:", choices=list(TYPES), default=default_type).ask()
    if ctype is None:
        return None
    rank = questionary.text("Rank:", default=default_rank, validate=_is_rank).ask()
    if not rank:
        return None
    return ["--type", ctype, "--rank", rank]


def ask_format():
    fmt = questionary.select("Output format:", choices=list(OUTPUT_FORMATS)).ask()
    return ["--format", fmt] if fmt else None


def ask_partition():
    """Ask for a partition in set notation; blank means cancel."""
    text = questionary.text("Partition (e.g. {{1,7,9},{2,5,6},{3,4},{8}}):").ask()
    if not text:
        console.print("[yellow]Partition cannot be empty.[/yellow]")
        return None
    return text


def enumerate_menu():
    """Prompts for the enumerate command."""
    flags = ask_type_and_rank()
    fmt = flags and ask_format()
    return ["enumerate"] + flags + fmt if fmt else None


def stats_menu():
    """Prompts for the stats command; an empty partition lists the whole rank."""
    flags = ask_type_and_rank()
    if flags is None:
        return None
    text = questionary.text("Partition (leave empty for all partitions of this rank):").ask()
    if text is None:
        return None
    return ["stats"] + flags + ([text] if text else [])


def map_menu():
    """Prompts for the map command."""
    name = questionary.select("Map:", choices=list(MAP_NAMES) + ["Cancel"]).ask()
    if name in (None, "Cancel"):
        return None
    flags = ask_type_and_rank(default_type="B" if name == "swap-B" else "D" if name == "swap-extreme" else "C")
    if flags is None:
        return None
    if name in ("nc", "nn"):
        opener_text = questionary.text("Openers (comma separated):").ask()
        closer_text = questionary.text("Closers (comma separated):").ask()
        if opener_text is None or closer_text is None:
            return None
        return ["map", name] + flags + ["--op", opener_text, "--cl", closer_text]
    text = ask_partition()
    return ["map", name] + flags + [text] if text else None


def verify_menu():
    """Prompts for the verify command."""
    suites = questionary.checkbox("Suites:", choices=list(SUITES)).ask()
    if not suites:
        console.print("[yellow]No suites selected.[/yellow]")
        return None
    rank = questionary.text("Rank:", default="3", validate=_is_rank).ask()
    if not rank:
        return None
    return ["verify"] + suites + ["--rank", rank]


def count_menu():
    """Prompts for the count command."""
    obj = questionary.select("Count:", choices=list(COUNT_OBJECTS)).ask()
    if obj is None:
        return None
    flags = ask_type_and_rank(default_type="C")
    if flags is None:
        return None
    argv = ["count", "--object", obj] + flags
    if obj in ("triangulations", "fans", "maximal-fillings"):
        argv.append("--table")
    return argv


def table_menu():
    """Prompts for the fiber table command."""
    flags = ask_type_and_rank()
    fmt = flags and ask_format()
    return ["table"] + flags + fmt if fmt else None


def render_menu():
    """Prompts for the render command."""
    text = ask_partition()
    if not text:
        return None
    flags = ask_type_and_rank(default_type="C")
    if flags is None:
        return None
    kind = questionary.select("Diagram:", choices=list(DIAGRAM_KINDS)).ask()
    polyomino = questionary.confirm("Draw the polyomino filling instead of the arc diagram?", default=False).ask()
    style = questionary.select("Draw as:", choices=list(FORMATS), default="ascii").ask()
    if kind is None or polyomino is None or style is None:
        return None
    argv = ["render", text] + flags + ["--kind", kind, "--as", style]
    return argv + ["--polyomino"] if polyomino else argv


HUB_CHOICES = {
    "Enumerate partitions": enumerate_menu,
    "Partition statistics": stats_menu,
    "Apply a map": map_menu,
    "Run verification suites": verify_menu,
    "Count objects": count_menu,
    "Fiber table": table_menu,
    "Render a diagram": render_menu,
}


def hub_menu():
    """
    Show the hub menu once.

    Returns:
        object: An argv list for the chosen command, 'settings', 'exit',
            or None if the prompt was cancelled
    """
    console.print(Panel.fit(
        "[bold blue]Crossings and Nestings[/bold blue]\n"
        "Set partitions of types A, B, C and D",
        border_style="blue"
    ))
    choice = questionary.select(
        "What would you like to do?",
        choices=list(HUB_CHOICES) + ["Configure settings", "Exit"]
    ).ask()
    if choice is None or choice == "Exit":
        return "exit"
    if choice == "Configure settings":
        return "settings"
    return HUB_CHOICES[choice]()
