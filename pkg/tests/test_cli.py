import io
import json
from pathlib import Path

from coadjoint.cli import parse_graph_name, render_bipoly, run
from coadjoint.graphs import complete_graph
from coadjoint.tutte import tutte_subset

GOLDEN = Path(__file__).parent / "golden"


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_poly_named_graph():
    code, text = invoke("poly", "--kind", "coadjoint", "--graph", "K4")
    assert code == 0
    assert text == "x^4-6x^3+7x^2-2x\n"


def test_poly_graph_names():
    assert parse_graph_name("k3,3").edge_count() == 9
    assert parse_graph_name("P5").edge_count() == 4
    assert parse_graph_name("c6").edge_count() == 6
    assert parse_graph_name("E3").edge_count() == 0


def test_poly_graph6_input():
    code, text = invoke("poly", "--kind", "chromatic", "--graph6", "Bw")
    assert code == 0
    assert text == "x^3-3x^2+2x\n"


def test_poly_json_schema():
    code, text = invoke("poly", "--kind", "coadjoint", "--graph", "K3", "--format", "json")
    assert code == 0
    record = json.loads(text)
    assert record == {"graph": "Bw", "kind": "coadjoint", "var": "x", "coeffs": ["0", "1", "-3", "1"]}


def test_poly_tutte_and_z():
    code, text = invoke("poly", "--kind", "tutte", "--graph", "K3")
    assert code == 0
    assert text.strip() == render_bipoly(tutte_subset(complete_graph(3)))
    code, text = invoke("poly", "--kind", "z", "--graph", "K2")
    assert code == 0
    assert text == "q^2-2q\n"


def test_table_kn_matches_golden():
    code, text = invoke("table", "kn", "--max", "8")
    assert code == 0
    assert text == (GOLDEN / "kn_table.txt").read_text()


def test_table_knn_matches_golden():
    code, text = invoke("table", "knn", "--max", "5")
    assert code == 0
    assert text == (GOLDEN / "knn_table.txt").read_text()


def test_table_csv_and_json():
    code, text = invoke("table", "kn", "--max", "2", "--format", "csv")
    assert code == 0
    assert text.splitlines() == ["K_1,0,1", "K_2,0,-1,1"]
    code, text = invoke("table", "kn", "--max", "2", "--format", "json")
    payload = json.loads(text)
    assert payload[1]["coeffs"] == ["0", "-1", "1"]
    assert payload[1]["kind"] == "coadjoint"


def test_check_suite_passes_and_is_deterministic():
    code1, text1 = invoke("check", "egf")
    code2, text2 = invoke("check", "egf")
    assert code1 == code2 == 0
    assert text1 == text2
    assert "PASS" in text1


def test_check_small_recursion():
    code, text = invoke("check", "recursion", "--max-n", "3")
    assert code == 0
    assert text.endswith("1/1 checks passed\n")


def test_zigzag_output():
    code, text = invoke("zigzag", "--max", "7")
    assert code == 0
    assert text.splitlines()[-1] == "E_7 = 272"


def test_egf_output():
    code, text = invoke("egf", "--order", "2")
    assert code == 0
    assert text.splitlines() == ["p_0(x)=1", "p_1(x)=x", "p_2(x)=x^2+x"]


def test_sokal_k_output():
    code, text = invoke("sokal-k")
    assert code == 0
    assert abs(float(text) - 7.963907) < 1e-5


def test_roots_output():
    code, text = invoke("roots", "--graph", "K4")
    assert code == 0
    assert len(text.splitlines()) == 4


def test_usage_errors_exit_2():
    assert invoke("poly", "--kind", "coadjoint", "--graph", "Q7")[0] == 2
    assert invoke("poly", "--kind", "coadjoint", "--graph6", "!!!")[0] == 2
    assert invoke("poly", "--kind", "nosuch", "--graph", "K3")[0] == 2
    assert invoke("nosuchcommand")[0] == 2
    assert invoke("poly", "--kind", "coadjoint", "--graph", "K40")[0] == 2


def test_stdin_batch(monkeypatch):
    import sys

    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\nA_\n"))
    code, text = invoke("poly", "--kind", "matching", "--stdin")
    assert code == 0
    assert text.splitlines() == ["x^3-3x^2", "x^2-x"]
