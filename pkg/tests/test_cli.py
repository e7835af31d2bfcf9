import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from skeinfill import documents, filling
from skeinfill.cli import EXIT_INVARIANT, EXIT_PARSE, EXIT_PRECONDITION, main
from skeinfill.coeff import QA, QAm2
from skeinfill.qtorus import SymmetricElement

from cli_cases import CASES, SVG_CASES

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


@pytest.fixture(autouse=True)
def _at_root(monkeypatch):
    monkeypatch.chdir(ROOT)


def run(name, tmp_path):
    argv = [a.replace("{tmp}", str(tmp_path)) for a in CASES[name]]
    out = tmp_path / f"{name}.json"
    assert main(argv + ["--out", str(out)]) == 0
    return out.read_bytes()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, tmp_path):
    assert run(name, tmp_path) == (GOLDEN / f"{name}.json").read_bytes()
    if name in SVG_CASES:
        assert (tmp_path / SVG_CASES[name]).read_bytes() == (GOLDEN / SVG_CASES[name]).read_bytes()


def load(name):
    return json.loads((GOLDEN / f"{name}.json").read_text(encoding="utf-8"))


def test_mul_content():
    doc = load("mul_e10_e01")
    assert doc == {"terms": [{"coeff": "A^-1", "p": 1, "q": -1}, {"coeff": "A", "p": 1, "q": 1}]}


def test_mul_unit(tmp_path):
    unit = tmp_path / "unit.json"
    unit.write_text(json.dumps({"terms": [{"p": 0, "q": 0, "coeff": "1/2"}]}))
    out = tmp_path / "o.json"
    assert main(["mul", str(unit), "data/etilde_sample.json", "--out", str(out)]) == 0
    x = documents.symmetric_from_doc(json.loads(out.read_text()), QA)
    y = documents.symmetric_from_doc(json.loads(Path("data/etilde_sample.json").read_text()), QA)
    assert x == y


def test_annihilate_content():
    ann = load("annihilate_companion")["annihilators"][0]
    assert ann["peripheral"] == [{"a": "-m", "l_degree": 0}, {"a": "1", "l_degree": 2}]
    assert ann["slopes"] == ["-1/2", "1/2"]
    assert ann["monomial_vertices"] is True
    zero = load("annihilate_zero_generator")["annihilators"]
    assert [a["generator_is_zero"] for a in zero] == [False, False, True]


def test_fill_content():
    doc = load("fill_hexagon")
    assert doc["total_bound"] == 11 and doc["excluded"] is False
    assert doc["certificates"]["verified"] is True
    assert load("fill_segment_excluded")["excluded"] is True
    two = load("fill_two_relations")
    assert two["total_bound"] == sum(g["bound"] for g in two["generators"])


def test_report_content():
    doc = load("report_unknot_like")
    assert doc["excluded_slopes"] == ["-1", "1"]
    samples = {s["slope"]: s["total_bound"] for s in doc["bound_function"]["samples"]}
    assert samples["inf"] == 5 and samples["0"] == 5
    assert load("report_localized")["module"] == "localized"


@pytest.mark.parametrize("name", ["mul_e10_e01", "phi_inv_sample", "annihilate_companion"])
def test_roundtrip(name):
    doc = load(name)
    if name.startswith("annihilate"):
        doc = doc["annihilators"][0]["relation"]
        R = documents.relation_from_doc(doc, QA)
        assert documents.relation_to_doc(R) == doc
    elif name.startswith("phi_inv"):
        x = documents.skein_from_doc(doc, QA)
        assert documents.skein_to_doc(x) == doc
    else:
        x = documents.symmetric_from_doc(doc, QA)
        assert documents.element_to_doc(x) == doc


def test_localized_roundtrip():
    ann = load("annihilate_localized")["annihilators"][0]
    R = documents.relation_from_doc(ann["relation"], QAm2)
    assert documents.relation_to_doc(R) == ann["relation"]
    Q = documents.peripheral_from_doc(ann["peripheral"], QAm2)
    assert documents.peripheral_to_doc(Q) == ann["peripheral"]


def test_parse_error_exit(capsys):
    assert main(["mul", "data/bad_coeff.json", "data/e01.json"]) == EXIT_PARSE
    err = capsys.readouterr().err
    assert "line 1, column" in err


def test_bad_json_exit(tmp_path):
    f = tmp_path / "x.json"
    f.write_text("{not json")
    assert main(["polygon", str(f)]) == EXIT_PARSE


def test_bad_slope_exit():
    assert main(["fill", "data/segment_relation.json", "--slope", "2/4"]) == EXIT_PARSE


def test_precondition_exits(tmp_path):
    assert main(["fill", "data/segment_relation.json"]) == EXIT_PRECONDITION
    f = tmp_path / "r.json"
    f.write_text(json.dumps({"terms": [{"p": -1, "q": 0, "coeff": "1"}]}))
    assert main(["polygon", str(f)]) == EXIT_PRECONDITION
    f.write_text(json.dumps({"terms": []}))
    assert main(["polygon", str(f)]) == EXIT_PRECONDITION
    assert main(["mul", "data/e10.json"]) == EXIT_PRECONDITION
    assert main(["annihilate", "data/companion.json", "--generator", "nope"]) == EXIT_PRECONDITION


def test_singular_presentation(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"generators": ["f", "g"], "longitude_action": [["m"]]}))
    assert main(["annihilate", str(f)]) == EXIT_PRECONDITION


def test_invariant_failure_exit(monkeypatch):
    monkeypatch.setattr(filling.ReductionCertificate, "verify", lambda *a, **k: False)
    assert main(["fill", "data/segment_relation.json", "--slope", "inf", "--verify"]) == EXIT_INVARIANT


def test_module_entry_point(tmp_path):
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "skeinfill", "mul", "data/e10.json", "data/e01.json"],
                          capture_output=True, cwd=ROOT, env=env)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "mul_e10_e01.json").read_bytes()


def test_noncanonical_element_rejected():
    with pytest.raises(documents.DocumentError):
        documents.symmetric_from_doc({"terms": [{"p": 0, "q": -1, "coeff": "1"}]}, QA)
    assert documents.symmetric_from_doc([{"p": 0, "q": 1, "coeff": 2}], QA) == SymmetricElement.basis(0, 1, 2)
