import io
import json

import pytest

from rigid2step.cli import parse_copies, run, UsageError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def gnla5_file(tmp_path):
    code, out, _ = call("catalog", "get", "gnla5")
    assert code == 0
    p = tmp_path / "gnla5.json"
    p.write_text(out)
    return str(p)


def test_rigidity_gnla5(gnla5_file):
    code, out, _ = call("rigidity", gnla5_file)
    assert code == 0 and json.loads(out)["verdict"] == "rigid"


def test_output_byte_stable(gnla5_file):
    assert call("rigidity", gnla5_file, "--method", "all")[1] == \
        call("rigidity", gnla5_file, "--method", "all")[1]


def test_moduli():
    code, out, _ = call("moduli", "3", "5")
    assert code == 0 and json.loads(out)["codim"] == "0"
    code, _, err = call("moduli", "3", "7")
    assert code == 1 and "not tabulated" in err


def test_malformed_input(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 3,')
    code, out, err = call("rigidity", str(p))
    assert code == 1 and out == "" and "byte offset" in err
    code, _, err = call("rigidity", str(tmp_path / "missing.json"))
    assert code == 1


def test_usage_errors():
    assert call("bogus")[0] == 1
    assert call("rigidity")[0] == 1
    assert call("involutions", "--case", "1,2")[0] == 1
    assert call("catalog", "get")[0] == 1


def test_resource_exit(tmp_path):
    code, out, _ = call("catalog", "get", "gnla1")
    p = tmp_path / "g1.json"
    p.write_text(out)
    code, _, err = call("rigidity", str(p), "--method", "prolong", "--max-level", "2")
    assert code == 2 and "did not terminate" in err
    code, out, _ = call("prolong", str(p), "--max-level", "2")
    assert code == 0 and json.loads(out)["terminated"] is False


def test_not_fundamental_is_validation_error(tmp_path):
    p = tmp_path / "ab.json"
    p.write_text(json.dumps({"n": 4, "m": 3, "brackets": []}))
    assert call("rigidity", str(p))[0] == 1


def test_jsquared_and_htype(tmp_path):
    p = tmp_path / "h.json"
    code, out, _ = call("htype", "2", "1", "-o", str(p))
    assert code == 0 and json.loads(out)["written"] == str(p)
    code, out, _ = call("jsquared", str(p))
    assert code == 0 and json.loads(out)["j2"] is False
    code, out, _ = call("jsquared", str(p), "--general")
    assert json.loads(out)["mode"] == "general-probe"
    code, out, _ = call("catalog", "get", "gnla5")
    q = tmp_path / "g5.json"
    q.write_text(out)
    code, out, _ = call("jsquared", str(q))
    assert code == 0 and json.loads(out)["j2"] is True
    code, out, _ = call("catalog", "get", "gnla1")
    q.write_text(out)
    assert call("jsquared", str(q))[0] == 1


def test_dump_generators():
    code, out, _ = call("htype", "1", "0", "--dump-generators")
    doc = json.loads(out)
    assert doc["module"]["generators"] == [[["0", "-1"], ["1", "0"]]]
    assert doc["algebra"]["n"] == 2


def test_table1_small():
    code, out, _ = call("table1", "--max-dim", "8")
    doc = json.loads(out)
    assert code == 0 and doc["all_match"] and len(doc["entries"]) > 10


def test_involutions_34():
    doc = json.loads(call("involutions", "--case", "3,4")[1])
    assert doc["table2_match"] and all(c["proportional"] for c in doc["table3"])
    assert set(doc["eigenspace_dims"].values()) == {1}


def test_random_and_catalog_list():
    a = json.loads(call("random", "3", "5", "--seed", "1")[1])
    assert a["n"] == 5 and a["m"] == 3
    doc = json.loads(call("random", "2", "4", "--seed", "1", "--trials", "3", "--decide")[1])
    assert doc["infinite"] == 3
    names = [e["name"] for e in json.loads(call("catalog", "list")[1])["entries"]]
    assert names == ["gnla1", "gnla2", "gnla3", "gnla4", "gnla5", "gnla6", "example_35"]


def test_parse_copies():
    assert parse_copies("+:2,-:1") == [("+", 2), ("-", 1)]
    assert parse_copies("min") == [("min", 1)]
    with pytest.raises(UsageError):
        parse_copies("q:1")
