import json

import pytest

from hopfdoubles.cli import main
from hopfdoubles.doubles import example
from hopfdoubles.hopf import cyclic_cocycle, cyclic_group, drinfeld_double_group, named_group
from hopfdoubles.ncalg import PresentedAlgebra


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_golden_outputs(capsys):
    assert run(capsys, "normal-form", "dq-sl2", "E*F")[:2] == (0, "F*E + (1/(q^-1 - q))*K^-1\n")
    assert run(capsys, "clebsch-gordan", "2", "3")[:2] == (0, "M(5) ⊕ M(3) ⊕ M(1)\n")
    assert run(capsys, "relations", "dq-sl2")[:2] == (0, "E*F -> F*E + (1/(q^-1 - q))*K^-1\n")


def test_relations_json_round_trip(capsys):
    code, out, _ = run(capsys, "relations", "uq-sl3", "--json")
    assert code == 0
    back = PresentedAlgebra.from_json(json.loads(out))
    A = example("uq-sl3").algebra
    assert back.rules == A.rules
    assert back.to_json() == A.to_json()


def test_malformed_file(tmp_path, capsys):
    bad = tmp_path / "nonsense.json"
    bad.write_text("{ this is not json")
    code, out, err = run(capsys, "verify", str(bad))
    assert code == 2 and "parse error" in err and not out
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"hello": 1}))
    assert run(capsys, "verify", str(other))[0] == 2


def test_verify_table_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps(drinfeld_double_group(named_group("S3")).to_json()))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "FAIL" not in out
    assert run(capsys, "verify", str(path), "--field", "q")[0] == 2


def test_verify_presentation_file(tmp_path, capsys):
    path = tmp_path / "w.json"
    A = example("weyl(2)").algebra.copy("weyl(2)~")
    x1, x2 = A.letter_index["x1"], A.letter_index["x2"]
    A.rules.pop((x2, x1))
    A.add_rule((x2, x1), {((), (x1, x2)): 2})
    path.write_text(json.dumps(A.to_json()))
    code, out, _ = run(capsys, "verify", str(path), "--maxdeg", "3", "--json")
    assert code == 1 and json.loads(out)["ok"] is False


def test_exit_codes(capsys):
    assert run(capsys, "confluence", "weyl(2)", "--maxdeg", "3")[0] == 0
    assert run(capsys, "confluence", "quasi-group-double(C2,1,heis)", "--maxdeg", "3")[0] == 1
    assert run(capsys, "normal-form", "nothing", "x")[0] == 2
    assert run(capsys, "verify", "uq-sl2", "--finite")[0] == 2
    assert run(capsys, "verma", "dq", "--lambda", "banana")[0] == 2
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_field_flag(capsys):
    assert run(capsys, "normal-form", "dq-sl2", "E*F", "--field", "q")[0] == 0
    code, _, err = run(capsys, "normal-form", "dq-sl2", "E*F", "--field", "rationals")
    assert code == 2 and "--field" in err


def test_other_subcommands(capsys):
    code, out, _ = run(capsys, "serre", "b2", "--degree", "3,1", "--json")
    obj = json.loads(out)
    assert code == 0 and len(obj["right"]) == len(obj["left"]) == 1
    assert run(capsys, "serre", "sl3", "--degree", "1")[0] == 2
    code, out, _ = run(capsys, "verma", "dq", "--lambda", "q^3", "--trunc", "3")
    assert code == 0 and "K.F^2v = q^-1 F^2v" in out
    assert run(capsys, "twist-check", "drin-group(C2)")[0] == 0
    assert run(capsys, "verify", "drin-group(C2)", "--finite")[0] == 0


def test_group_double_with_omega(tmp_path, capsys):
    C3 = cyclic_group(3)
    path = tmp_path / "w.json"
    path.write_text(json.dumps(cyclic_cocycle(3, 1, C3).to_json()))
    code, out, _ = run(capsys, "group-double", "C3", "--omega", str(path))
    assert code == 0 and "dimension 9" in out
    assert run(capsys, "group-double", "C3", "--omega", str(path), "--field", "rationals")[0] == 2
    code, out, _ = run(capsys, "group-double", "C2", "--kind", "heis", "--json")
    assert code == 0 and "algebra" in json.loads(out)
