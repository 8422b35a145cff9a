import io
import json

import pytest

from greengrade.cli import main
from greengrade.tree import random_tree, star_tree

from conftest import DATA


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_walk_format():
    code, text = run("walk", str(DATA / "example6.json"))
    assert code == 0
    assert text.splitlines()[5] == "6\tS6\t3\t5"
    assert text.splitlines()[0] == "1\tS1\t1\t-"


def test_grade_dot_has_eight_labelled_arrows():
    code, text = run("grade", str(DATA / "example6.json"), "--dot")
    arrows = [l for l in text.splitlines() if '" -> "' in l]
    assert code == 0 and len(arrows) == 8
    assert sum("penwidth=2" in l for l in arrows) == 3


def test_grade_json_and_latex():
    code, text = run("grade", str(DATA / "example11.json"), "--json")
    doc = json.loads(text)
    assert code == 0 and len(doc["arrows"]) == 17 and "relations" in doc
    assert run("grade", str(DATA / "example6.json"), "--latex")[1].startswith("\\begin{tabular}")


def test_output_is_deterministic():
    args = ("cartan", str(DATA / "example11.json"), "--paths", "--det")
    assert run(*args) == run(*args)


def test_cartan_det():
    code, text = run("cartan", str(DATA / "example4_gamma.json"), "--det")
    assert code == 0 and text.endswith("det = 1 + q^4 + q^8 + q^12 + q^16\n")


def test_verify_one_edge_tree(tmp_path):
    p = tmp_path / "star_1_1.json"
    p.write_text(star_tree(1, 1).to_json())
    code, text = run("verify", str(p))
    assert code == 0 and "FAIL" not in text


def test_verify_random_tree(tmp_path):
    import random
    p = tmp_path / "random_9_m2.json"
    p.write_text(random_tree(random.Random(9), 9, 2).to_json())
    code, text = run("verify", str(p))
    assert code == 0, text


def test_a0_and_trivext():
    code, text = run("a0", str(DATA / "example11.json"), "--recover", "--cartan", "--gldim")
    assert code == 0 and "PASS recovery" in text
    code, text = run("trivext", str(DATA / "example6.json"))
    assert code == 2


def test_shifts_and_morita(tmp_path):
    code, text = run("shifts", str(DATA / "example4_gamma.json"), "--vector", "3,7,1,0")
    assert code == 0 and "1->4\t1\t4" in text
    other = tmp_path / "delta.json"
    other.write_text(json.dumps({"1->4": 4, "4->3": 0, "3->1": 0, "1->2": 0, "2->1": 4}))
    code, text = run("morita", str(DATA / "example4_gamma.json"), "--other", str(other))
    assert code == 0 and "n = 0,4,-2,-3" in text
    other.write_text(json.dumps({"1->4": 5, "4->3": 0, "3->1": 0, "1->2": 0, "2->1": 4}))
    assert run("morita", str(DATA / "example4_gamma.json"), "--other", str(other))[0] == 1


def test_hm_commands():
    assert run("hm", "--m", "2", "mul", "2,1", "3,5") == (0, "(6, 23)\n")
    assert run("hm", "--m", "2", "inv", "2,3")[1] == "(1/2, -3/8)\n"
    assert run("hm", "--m", "2", "decompose", "2,6")[1] == "torus (2, 0)\nunipotent (1, 3)\n"
    assert run("hm", "--m", "3", "inv", "1,2")[0] == 2


def test_usage_and_parse_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run("walk", str(bad))[0] == 2
    assert "malformed" in capsys.readouterr().err
    assert run("walk", str(tmp_path / "missing.json"))[0] == 2
    assert run("shifts", str(DATA / "example6.json"), "--vector", "1,2")[0] == 2


def test_random_prints_seed(capsys):
    code, text = run("random", "--e", "5", "--m", "2", "--seed", "17")
    assert code == 0 and json.loads(text)["multiplicity"] == 2
    assert "seed 17" in capsys.readouterr().err
