import json

import pytest
from hypothesis import given, settings, strategies as st

from krasner.cli import main, run_command
from krasner.corpus import lift
from krasner.document import digest, dump, parse, serialize
from krasner.errors import ParseError
from krasner.search import SearchSpace, random_structures


# -- documents --------------------------------------------------------------

def test_round_trip_is_identity_on_corpus(all_structures):
    for R in all_structures:
        text = serialize(R)
        back = parse(text)
        assert back == R
        assert serialize(back) == text


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_round_trip_random_structures(seed):
    for R in random_structures(SearchSpace(2, grade_grid=("1", "1/2", "1/3")), 1, seed=seed):
        assert parse(serialize(R)) == R


def test_grades_are_strings():
    doc = json.loads(serialize(lift(3, t1="1/2", t2="1/3")))
    assert doc["f"][0]["value"] == [["0", "1/2"]]
    assert doc["g"][0]["value"] == [["0", "1/3"]]


def _doc(R=None):
    return json.loads(serialize(R or lift(2)))


def test_missing_tuple_is_reported():
    doc = _doc()
    doc["f"] = doc["f"][:-1]
    with pytest.raises(ParseError, match=r"not total: missing entry for \['1', '1'\]") as exc:
        parse(json.dumps(doc))
    assert exc.value.path == "f"


def test_out_of_range_grade_is_reported():
    doc = _doc()
    doc["g"][1]["value"] = [["0", "3/2"]]
    with pytest.raises(ParseError) as exc:
        parse(json.dumps(doc))
    assert exc.value.path == "g[1].value[0][1]"


def test_numeric_grade_and_duplicate_label_rejected():
    doc = _doc()
    doc["f"][0]["value"] = [["0", 0.5]]
    with pytest.raises(ParseError, match="strings"):
        parse(json.dumps(doc))
    doc = _doc()
    doc["carrier"] = ["0", "0"]
    with pytest.raises(ParseError, match="duplicate label"):
        parse(json.dumps(doc))


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse('{\n  "format": "krasner-structure",\n  oops\n}')
    assert exc.value.line == 3


def test_digest_is_stable():
    assert digest(lift(6)) == digest(parse(serialize(lift(6))))
    assert digest(lift(6)) != digest(lift(6, t1=1))


# -- CLI --------------------------------------------------------------------

@pytest.fixture
def files(tmp_path):
    out = {}
    for k in (2, 3, 4, 6, 12):
        p = tmp_path / f"z{k}.json"
        dump(lift(k), p)
        out[k] = str(p)
    bad = _doc(lift(3))
    bad["f"][1]["value"] = [["2", "1/2"]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    out["bad"] = str(p)
    p = tmp_path / "broken.json"
    p.write_text("{ not json")
    out["broken"] = str(p)
    return out


def test_exit_codes(files, capsys):
    assert main(["validate", files[6]]) == 0
    assert main(["validate", files["bad"]]) == 1
    assert main(["validate", files["broken"]]) == 2
    assert main(["validate", "/nonexistent.json"]) == 2
    assert main(["nope"]) == 2
    assert main(["radical", files[12], "--ideal", "0,7"]) == 2
    capsys.readouterr()


def test_validate_strict_reports_distributivity(files, capsys):
    assert main(["validate", files[6], "--mode", "strict", "--json", "-"]) == 1
    rep = json.loads(capsys.readouterr().out)["report"]
    assert rep["verdicts"]["axioms"]["distributive"] is False
    assert [w["axiom"] for w in rep["witnesses"]] == ["distributive"]


def test_classify_z12_table(files, capsys):
    assert main(["classify", files[12], "--json", "-"]) == 0
    rep = json.loads(capsys.readouterr().out)["report"]
    rows = {tuple(r["ideal"]): r for r in rep["verdicts"]["table"]}
    assert rows[("0", "4", "8")]["primary"] == "yes"
    assert rows[("0", "4", "8")]["prime"] == "no"
    assert rows[("0", "4", "8")]["radical"] == ["0", "2", "4", "6", "8", "10"]
    assert rep["verdicts"]["jacobson_radical"] == ["0", "6"]


def test_classify_is_byte_identical(files, tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"c{i}.json"
        assert main(["classify", files[12], "--json", str(p)]) == 0
        outs.append(json.loads(p.read_text())["report"])
    assert json.dumps(outs[0], sort_keys=True) == json.dumps(outs[1], sort_keys=True)


def test_radical_and_ideals_commands(files):
    rep = run_command(["radical", files[12], "--ideal", "0,4,8"])
    assert rep.status == 0 and rep.verdicts["agreement"]
    assert rep.verdicts["powers"] == ["0", "2", "4", "6", "8", "10"]
    rep = run_command(["ideals", files[6]])
    assert rep.verdicts["count"] == 4


def test_quotient_product_lift_commands(files, tmp_path):
    out = tmp_path / "q.json"
    rep = run_command(["quotient", files[6], "--ideal", "0,3", "-o", str(out)])
    assert rep.status == 0 and rep.verdicts["cosets"] == ["[0,3]", "[1,4]", "[2,5]"]
    assert main(["validate", str(out)]) == 0
    rep = run_command(["product", files[2], files[3]])
    assert rep.status == 0 and rep.verdicts["size"] == 6
    rep = run_command(["lift", "--zmod", "5", "--t1", "1/2"])
    assert rep.status == 0 and parse(rep.verdicts["document"]) == lift(5, t1="1/2", t2=1).renamed("Z5(2,2)")


def test_hom_check_command(files):
    rep = run_command(["hom-check", files[12], files[4], "--map",
                       ",".join(f"{a}={a % 4}" for a in range(12))])
    assert rep.status == 0 and rep.verdicts["surjective"]
    swap = {1: 2, 2: 1}
    rep = run_command(["hom-check", files[6], files[6], "--map",
                       ",".join(f"{a}={swap.get(a, a)}" for a in range(6))])
    assert rep.status == 1 and rep.witnesses[0]["args"] == ["1", "1"]


def test_search_and_witness_commands(files, tmp_path):
    rep = run_command(["search", "--size", "2", "-o", str(tmp_path / "found")])
    assert rep.verdicts["count"] == 2 and not rep.verdicts["truncated"]
    assert len(list((tmp_path / "found").iterdir())) == 2
    rep = run_command(["witness", "--predicate", "primary-not-prime", files[12]])
    assert rep.verdicts["ideal"] == ["0", "4", "8"]
