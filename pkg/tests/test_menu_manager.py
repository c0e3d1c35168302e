import pytest

from app.utils import menu_manager


class Answer:
    def __init__(self, value):
        self.value = value

    def ask(self):
        return self.value


@pytest.fixture
def answers(monkeypatch):
    """Feed queued answers to every questionary prompt the menus use."""
    queue = []

    def prompt(*args, **kwargs):
        return Answer(queue.pop(0))

    for name in ("select", "text", "checkbox", "confirm"):
        monkeypatch.setattr(menu_manager.questionary, name, prompt)
    return queue


def test_enumerate_menu(answers):
    answers.extend(["B", "4", "csv"])
    assert menu_manager.enumerate_menu() == ["enumerate", "--type", "B", "--rank", "4", "--format", "csv"]


def test_cancelled_prompt_returns_none(answers):
    answers.extend([None])
    assert menu_manager.table_menu() is None


def test_map_menu_for_representatives(answers):
    answers.extend(["nn", "B", "3", "1,2,3", ""])
    assert menu_manager.map_menu() == ["map", "nn", "--type", "B", "--rank", "3", "--op", "1,2,3", "--cl", ""]


def test_verify_menu(answers):
    answers.extend([["swap-A", "maxswap"], "4"])
    assert menu_manager.verify_menu() == ["verify", "swap-A", "maxswap", "--rank", "4"]


def test_count_menu_adds_table_for_fans(answers):
    answers.extend(["fans", "C", "3"])
    assert menu_manager.count_menu() == ["count", "--object", "fans", "--type", "C", "--rank", "3", "--table"]


def test_render_menu(answers):
    answers.extend(["{{1,3},{2,4}}", "A", "4", "crossing", True, "svg"])
    assert menu_manager.render_menu() == [
        "render", "{{1,3},{2,4}}", "--type", "A", "--rank", "4", "--kind", "crossing", "--as", "svg", "--polyomino"
    ]


def test_hub_menu(answers):
    answers.extend(["Configure settings"])
    assert menu_manager.hub_menu() == "settings"
    answers.extend([None])
    assert menu_manager.hub_menu() == "exit"
    answers.extend(["Partition statistics", "A", "3", ""])
    assert menu_manager.hub_menu() == ["stats", "--type", "A", "--rank", "3"]
