import json
import random

import pytest
from click.testing import CliRunner

from tropwitt.cli import main
from tropwitt.enriched import MetricSpace, WittSpace, theta_space
from tropwitt.generate import random_point_eval_space
from tropwitt.partitions import Partition
from tropwitt.quantale import ZERO, LValue
from tropwitt.symfunc import SymFunc, monomial
from tropwitt.witt import WittElem, theta


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def m21(tmp_path):
    return write(tmp_path, "m21.json", monomial(Partition([2, 1]), 8).to_json())


def test_witt_theta_matches_documented_output(runner):
    result = runner.invoke(main, ["witt", "theta", "--r", "3/2", "--degree", "4"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["degree_bound"] == 4
    assert data["values"]["1"] == "3/2"
    assert data["values"]["2"] == "3"
    assert data["values"]["3"] == "9/2"
    assert data["values"]["4"] == "6"
    assert all(
        v == "inf"
        for key, v in data["values"].items()
        if key not in ("1", "2", "3", "4")
    )


def test_witt_theta_output_keys_ordered_by_size_then_lex(runner):
    result = runner.invoke(main, ["witt", "theta", "--r", "1", "--degree", "3"])
    keys = list(json.loads(result.output)["values"])
    assert keys == ["1", "1,1", "2", "1,1,1", "2,1", "3"]


def test_sym_coprod_add_four_terms(runner, tmp_path):
    result = runner.invoke(main, ["sym", "coprod-add", "--input", m21(tmp_path)])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["coeffs"] == {"2,1|": 1, "2|1": 1, "1|2": 1, "|2,1": 1}


def test_sym_mul_and_strict(runner, tmp_path):
    f = write(tmp_path, "f.json", monomial(Partition([2]), 3).to_json())
    result = runner.invoke(main, ["sym", "mul", "--input", f, "--other", f])
    assert result.exit_code == 0
    assert json.loads(result.output)["coeffs"] == {}
    result = runner.invoke(
        main, ["sym", "mul", "--input", f, "--other", f, "--strict"]
    )
    assert result.exit_code == 1
    assert json.loads(result.output)["error"]["kind"] == "validation"


def test_sym_plethysm(runner, tmp_path):
    f = write(tmp_path, "f.json", monomial(Partition([2]), 8).to_json())
    g = write(tmp_path, "g.json", monomial(Partition([3]), 8).to_json())
    result = runner.invoke(main, ["sym", "plethysm", "--input", f, "--other", g])
    assert result.exit_code == 0
    assert json.loads(result.output)["coeffs"] == {"6": 1}


def test_sym_bases(runner):
    result = runner.invoke(main, ["sym", "bases", "--n", "2", "--degree", "6"])
    data = json.loads(result.output)
    assert data["elementary"]["coeffs"] == {"1,1": 1}
    assert data["complete"]["coeffs"] == {"1,1": 1, "2": 1}


def test_witt_add_mul_validate(runner, tmp_path):
    a = write(tmp_path, "a.json", theta(LValue(1), 4).to_json())
    b = write(tmp_path, "b.json", theta(LValue(2), 4).to_json())
    result = runner.invoke(main, ["witt", "mul", "--input", a, "--other", b])
    assert result.exit_code == 0
    assert json.loads(result.output) == theta(LValue(3), 4).to_json()

    result = runner.invoke(main, ["witt", "add", "--input", a, "--other", b])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["values"]["1"] == "1"
    assert data["values"]["2,1"] == "4"

    result = runner.invoke(main, ["witt", "validate", "--input", a])
    assert result.exit_code == 0
    assert json.loads(result.output)["ok"] is True


def test_witt_validate_rejects_invalid(runner, tmp_path):
    bad_elem = WittElem(4, {Partition([1]): LValue(1), Partition([2]): LValue(5)})
    bad = write(tmp_path, "bad.json", bad_elem.to_json())
    result = runner.invoke(main, ["witt", "validate", "--input", bad])
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report["ok"] is False
    assert report["violations"]

    # other commands refuse the file unless --unchecked
    result = runner.invoke(main, ["witt", "tau", "--input", bad])
    assert result.exit_code == 1
    result = runner.invoke(main, ["witt", "tau", "--input", bad, "--unchecked"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"value": "1"}


def test_witt_eval_and_in_l(runner, tmp_path):
    a = write(tmp_path, "a.json", theta(LValue(2), 4).to_json())
    h2 = write(tmp_path, "h2.json", SymFunc(
        {Partition([2]): 1, Partition([1, 1]): 1}, 4
    ).to_json())
    result = runner.invoke(main, ["witt", "eval", "--input", a, "--sym", h2])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"value": "4"}
    result = runner.invoke(main, ["witt", "in-l", "--input", a])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"lipschitz": True}


def metric_fixture(tmp_path):
    space = MetricSpace(
        ["a", "b"],
        {
            ("a", "a"): ZERO,
            ("b", "b"): ZERO,
            ("a", "b"): LValue(1),
            ("b", "a"): LValue(2),
        },
    )
    return space, write(tmp_path, "metric.json", space.to_json())


def test_cat_theta_tau_round_trip(runner, tmp_path):
    space, path = metric_fixture(tmp_path)
    result = runner.invoke(main, ["cat", "theta", "--input", path, "--degree", "4"])
    assert result.exit_code == 0
    witt_json = json.loads(result.output)
    assert WittSpace.from_json(witt_json) == theta_space(space, 4)

    back = write(tmp_path, "witt_space.json", witt_json)
    result = runner.invoke(main, ["cat", "tau", "--input", back])
    assert result.exit_code == 0
    assert MetricSpace.from_json(json.loads(result.output)) == space


def test_cat_validate_both_kinds(runner, tmp_path):
    space, path = metric_fixture(tmp_path)
    result = runner.invoke(main, ["cat", "validate", "--input", path])
    assert result.exit_code == 0

    w = theta_space(space, 4)
    wpath = write(tmp_path, "w.json", w.to_json())
    result = runner.invoke(main, ["cat", "validate", "--input", wpath])
    assert result.exit_code == 0

    bad = MetricSpace(
        ["a", "b"],
        {
            ("a", "a"): LValue(1),
            ("b", "b"): ZERO,
            ("a", "b"): LValue(1),
            ("b", "a"): LValue(2),
        },
    )
    bad_path = write(tmp_path, "bad.json", bad.to_json())
    result = runner.invoke(main, ["cat", "validate", "--input", bad_path])
    assert result.exit_code == 1


def test_cat_slice(runner, tmp_path):
    space, path = metric_fixture(tmp_path)
    wpath = write(tmp_path, "w.json", theta_space(space, 4).to_json())
    result = runner.invoke(
        main, ["cat", "slice", "--input", wpath, "--lambda", "2"]
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["partition"] == [2]
    assert data["table"]["a|b"] == "2"
    assert data["table"]["b|a"] == "4"

    result = runner.invoke(main, ["cat", "slice", "--input", wpath, "--h", "2"])
    assert result.exit_code == 0
    assert json.loads(result.output)["table"]["a|b"] == "2"

    result = runner.invoke(
        main,
        ["cat", "slice", "--input", wpath, "--lambda", "2", "--h", "2"],
    )
    assert result.exit_code == 2


def test_cat_act(runner, tmp_path):
    space, _ = metric_fixture(tmp_path)
    wpath = write(tmp_path, "w.json", theta_space(space, 8).to_json())
    g = write(tmp_path, "g.json", monomial(Partition([2]), 8).to_json())
    f = write(tmp_path, "f.json", monomial(Partition([3]), 8).to_json())
    result = runner.invoke(
        main, ["cat", "act", "--input", wpath, "--g", g, "--f", f]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["table"]["a|b"] == "6"


def test_plancherel_cli(runner, tmp_path):
    result = runner.invoke(main, ["plancherel", "measure", "--n", "3"])
    assert result.exit_code == 0
    assert json.loads(result.output)["measure"] == {
        "1,1,1": "1/6",
        "2,1": "2/3",
        "3": "1/6",
    }

    result = runner.invoke(
        main, ["plancherel", "sample", "--steps", "5", "--seed", "42"]
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["seed"] == 42
    assert [sum(s) for s in data["steps"]] == [1, 2, 3, 4, 5]

    space, _ = metric_fixture(tmp_path)
    wpath = write(tmp_path, "w.json", theta_space(space, 6).to_json())
    result = runner.invoke(
        main,
        ["plancherel", "observe", "--cat", wpath, "--steps", "4", "--seed", "7"],
    )
    assert result.exit_code == 0
    steps = json.loads(result.output)["steps"]
    assert len(steps) == 4
    for step in steps:
        assert step["is_metric"] == (len(step["partition"]) == 1)


def test_suite_run_module_filter(runner):
    result = runner.invoke(main, ["suite", "run", "--module", "quantale"])
    assert result.exit_code == 0
    assert "PASS residuation" in result.output

    result = runner.invoke(main, ["suite", "run", "--module", "nonexistent"])
    assert result.exit_code == 2


def test_malformed_inputs_exit_two(runner, tmp_path):
    garbled = tmp_path / "bad.json"
    garbled.write_text("{not json")
    result = runner.invoke(main, ["sym", "coprod-add", "--input", str(garbled)])
    assert result.exit_code == 2
    assert json.loads(result.output)["error"]["kind"] == "parse"

    missing = str(tmp_path / "nope.json")
    result = runner.invoke(main, ["sym", "coprod-add", "--input", missing])
    assert result.exit_code == 2
    assert json.loads(result.output)["error"]["kind"] == "io"

    wrong_shape = write(tmp_path, "shape.json", {"degree_bound": 4})
    result = runner.invoke(main, ["sym", "coprod-add", "--input", wrong_shape])
    assert result.exit_code == 2
    assert json.loads(result.output)["error"]["kind"] == "format"


def test_output_flag_writes_file(runner, tmp_path):
    out = tmp_path / "out.json"
    result = runner.invoke(
        main, ["witt", "theta", "--r", "2", "--degree", "3", "--output", str(out)]
    )
    assert result.exit_code == 0
    assert json.loads(out.read_text())["values"]["2"] == "4"


def test_round_trip_through_cli_files(runner, tmp_path):
    rng = random.Random(61)
    w = random_point_eval_space(rng, ("a", "b"), 4)
    path = write(tmp_path, "w.json", w.to_json())
    result = runner.invoke(main, ["cat", "validate", "--input", path])
    assert result.exit_code == 0
    assert WittSpace.from_json(w.to_json()) == w
