import json

import pytest

from app.models.partition import format_partition, from_json, make_partition, to_json
from app.services.growth import format_labels, forward_growth, partition_to_filling
from app.services.swaps import swap_map_B
from main import build_parser, run


def test_count_partitions(config_manager, capsys):
    assert run(["count", "--type", "C", "--rank", "3"], config_manager) == 0
    assert capsys.readouterr().out == "24\n"


def test_global_flags_before_the_subcommand(config_manager, capsys):
    assert run(["--type", "C", "-n", "3", "count"], config_manager) == 0
    assert capsys.readouterr().out == "24\n"


def test_parser_defaults():
    args = build_parser().parse_args(["count"])
    assert (args.ctype, args.rank, args.fmt) == (None, None, "table")
    args = build_parser().parse_args(["--format", "csv", "count", "--rank", "2"])
    assert (args.fmt, args.rank) == ("csv", 2)


def test_count_fans(config_manager, capsys):
    assert run(["count", "--object", "fans", "--rank", "3", "--k", "2"], config_manager) == 0
    assert capsys.readouterr().out == "3\n"


def test_count_table(config_manager, capsys):
    assert run(["count", "--object", "triangulations", "--rank", "2", "--table", "--format", "csv"], config_manager) == 0
    assert capsys.readouterr().out.splitlines()[:3] == ["k,count", "0,1", "1,2"]


def test_count_fans_needs_type_c(config_manager, capsys):
    assert run(["count", "--object", "fans", "--type", "A"], config_manager) == 2
    assert "Error:" in capsys.readouterr().out


def test_verify_json(config_manager, capsys):
    assert run(["verify", "swap-A", "--rank", "3", "--format", "json"], config_manager) == 0
    (record,) = json.loads(capsys.readouterr().out)
    assert record["suite"] == "swap-A"
    assert record["passed"] is True


def test_verify_table(config_manager, capsys):
    assert run(["verify", "swap-B", "d-symmetry", "--rank", "2"], config_manager) == 0
    assert "All suites passed." in capsys.readouterr().out


def test_verify_unknown_suite(config_manager, capsys):
    assert run(["verify", "nope"], config_manager) == 2
    assert "Unknown suite" in capsys.readouterr().out


def test_stats_csv(config_manager, capsys):
    assert run(["stats", "{{1,7},{2,8},{3,4,5,6}}", "--format", "csv"], config_manager) == 0
    header, row = capsys.readouterr().out.splitlines()
    assert header.startswith("type,n,")
    assert row.startswith("A,8,")
    assert ",1,6,2,2," in row


def test_stats_json(config_manager, capsys):
    assert run(["stats", "--type", "B", "--rank", "2", "--format", "json"], config_manager) == 0
    assert len(json.loads(capsys.readouterr().out)) == 6


def test_map_nonnesting_representative(config_manager, capsys):
    argv = ["map", "nn", "--type", "B", "--op", "1,2,3", "--cl", "", "--format", "json"]
    assert run(argv, config_manager) == 0
    (line,) = capsys.readouterr().out.splitlines()
    assert from_json(line) == make_partition("B", 3, [[1, -1], [2, -3], [3, -2]])


def test_map_swap(config_manager, capsys):
    assert run(["map", "swap", "{{1,7,9},{2,5,6},{3,4},{8}}", "--format", "json"], config_manager) == 0
    line = capsys.readouterr().out.strip()
    assert from_json(line) == make_partition("A", 9, [[1, 4], [2, 5, 7, 9], [3, 6], [8]])


def test_map_needs_a_partition(config_manager, capsys):
    assert run(["map", "swap"], config_manager) == 2
    assert "A partition is required" in capsys.readouterr().out


def test_enumerate_above_the_cap(config_manager, capsys):
    assert run(["enumerate", "--rank", "9"], config_manager) == 2
    assert "Error:" in capsys.readouterr().out


def test_cap_from_the_config_file(config_manager, capsys):
    config_manager.set_setting("enumeration_cap", 2)
    assert run(["count", "--rank", "3"], config_manager) == 2
    capsys.readouterr()
    assert run(["count", "--rank", "3", "--cap", "3"], config_manager) == 0
    assert capsys.readouterr().out == "5\n"


def test_enumerate_json(config_manager, capsys):
    assert run(["enumerate", "--type", "D", "--rank", "2", "--format", "json"], config_manager) == 0
    assert len(capsys.readouterr().out.splitlines()) == 4


def test_table_csv(config_manager, capsys):
    assert run(["table", "--rank", "3", "--format", "csv"], config_manager) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "op,cl,crossings,nestings,maxcross,maxnest,count"
    assert sum(int(line.rsplit(",", 1)[1]) for line in lines[1:]) == 5


def test_render_svg(config_manager, capsys):
    assert run(["render", "{{1,3},{2,4}}", "--as", "svg"], config_manager) == 0
    document = capsys.readouterr().out
    assert document.startswith("<svg")
    assert document.count("<path") == 2


def test_render_to_a_file(config_manager, capsys, tmp_path):
    target = tmp_path / "diagram.tex"
    argv = ["render", "{{1,-3},{-1,3},{2,4,5},{-2,-4,-5}}", "--rank", "5", "--polyomino", "--as", "tikz", "-o", str(target)]
    assert run(argv, config_manager) == 0
    assert target.read_text().startswith(r"\begin{tikzpicture}")


def test_render_filling_file(config_manager, capsys, tmp_path):
    source = tmp_path / "filling.txt"
    source.write_text("nesting 1\n1,-1,2\n")
    assert run(["render", "--filling", str(source)], config_manager) == 0
    assert "[2]" in capsys.readouterr().out


def test_no_command_prints_help(config_manager, capsys):
    assert run([], config_manager) == 2
    assert "usage:" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["count", "--type", "E"], ["render", "{{1,2}}", "--as", "png"]])
def test_argparse_rejects_bad_choices(argv, config_manager):
    with pytest.raises(SystemExit):
        run(argv, config_manager)


def test_map_bijection_between_json_files(config_manager, capsys, tmp_path, figure_five_a):
    source, target = tmp_path / "partition.json", tmp_path / "image.json"
    source.write_text(to_json(figure_five_a) + "\n")
    assert run(["map", "--bijection", "swapB", "--in", str(source), "--out", str(target)], config_manager) == 0
    assert target.read_text() == to_json(swap_map_B(figure_five_a)) + "\n"
    assert "Wrote 1 partition(s)" in capsys.readouterr().out


def test_map_bijection_with_inline_partition(config_manager, capsys):
    argv = ["map", "--bijection", "swap", "{{1,7,9},{2,5,6},{3,4},{8}}", "--format", "json"]
    assert run(argv, config_manager) == 0
    assert from_json(capsys.readouterr().out.strip()) == make_partition("A", 9, [[1, 4], [2, 5, 7, 9], [3, 6], [8]])


@pytest.mark.parametrize(
    "argv, message",
    [
        (["map", "swap", "{{1,2}}", "--bijection", "maxswap"], "Conflicting bijections"),
        (["map", "unknown", "{{1,2}}"], "Unknown bijection"),
        (["map", "{{1,2}}"], "Unknown bijection"),
        (["map"], "A bijection is required"),
    ],
)
def test_map_rejects_bad_requests(argv, message, config_manager, capsys):
    assert run(argv, config_manager) == 2
    assert message in capsys.readouterr().out


def test_map_input_inline_and_from_file(config_manager, capsys, tmp_path, figure_one):
    source = tmp_path / "partition.json"
    source.write_text(to_json(figure_one))
    argv = ["map", "swap", format_partition(figure_one), "--in", str(source)]
    assert run(argv, config_manager) == 2
    assert "either inline or with --in" in capsys.readouterr().out


def test_render_from_staircase_labels(config_manager, capsys, figure_three_a):
    labels = format_labels(forward_growth(partition_to_filling(figure_three_a, "nesting")).staircase)
    assert run(["render", "--labels", labels], config_manager) == 0
    from_labels = capsys.readouterr().out
    assert run(["render", format_partition(figure_three_a), "--rank", "5", "--polyomino"], config_manager) == 0
    assert from_labels == capsys.readouterr().out
    assert f"corner labels: {labels}" in from_labels


def test_render_from_arbitrary_entry_labels(config_manager, capsys):
    assert run(["render", "--labels", "2"], config_manager) == 0
    assert "[2]" in capsys.readouterr().out


def test_render_rejects_an_even_number_of_labels(config_manager, capsys):
    assert run(["render", "--labels", "1;0"], config_manager) == 2
    assert "odd number of staircase labels" in capsys.readouterr().out
