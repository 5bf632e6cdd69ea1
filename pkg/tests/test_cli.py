import json

import pytest

from klpoly.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kl_text(capsys):
    code, out, err = run(capsys, "kl", "2,1,4,3", "4,2,3,1")
    assert code == 0
    assert out == "1 + q\n"
    assert err == ""


def test_kl_json(capsys):
    code, out, _ = run(capsys, "kl", "1,2,3,4", "4,2,3,1", "--json")
    assert code == 0
    assert json.loads(out) == [1, 1]


def test_digit_string_form(capsys):
    code, out, _ = run(capsys, "kl", "2143", "4231")
    assert code == 0
    assert out == "1 + q\n"


def test_inv_kl(capsys):
    code, out, _ = run(capsys, "inv-kl", "2,1,5,4,3", "5,2,4,3,1")
    assert code == 0
    assert out == "1 + 2q\n"


def test_mu(capsys):
    code, out, _ = run(capsys, "mu", "2,1,4,3", "4,2,3,1")
    assert code == 0
    assert out == "1\n"
    code, out, _ = run(capsys, "mu", "1,2,3,4", "2,1,3,4")
    assert out == "1\n"
    code, out, _ = run(capsys, "mu", "1,2,3,4", "4,2,3,1")
    assert out == "0\n"


def test_leq(capsys):
    code, out, _ = run(capsys, "leq", "3,4,1,2", "4,2,3,1")
    assert code == 0
    assert out == "false\n"
    code, out, _ = run(capsys, "leq", "2,1,3,4", "4,2,3,1", "--json")
    assert out == "true\n"


def test_interval_sorted(capsys):
    code, out, _ = run(capsys, "interval", "1,2,3", "3,2,1", "--json")
    assert code == 0
    elements = json.loads(out)
    assert len(elements) == 6
    assert elements[0] == "1,2,3"
    assert elements[-1] == "3,2,1"
    code, out, _ = run(capsys, "interval", "123", "321")
    assert out.splitlines() == elements


def test_smooth(capsys):
    code, out, _ = run(capsys, "smooth", "3,4,1,2")
    assert code == 0
    assert out == "false\n"
    code, out, _ = run(capsys, "smooth", "4,1,2,3", "--json")
    assert out == "true\n"


def test_picture_golden(capsys):
    code, out, _ = run(capsys, "picture", "1,2", "2,1")
    assert code == 0
    assert out == "●▒\n○●\n"
    code, out, _ = run(capsys, "picture", "1,2", "2,1", "--json")
    assert json.loads(out) == ["●▒", "○●"]


def test_family(capsys):
    code, out, _ = run(capsys, "family", "v:1,1")
    assert code == 0
    assert out == "3,4,1,2\n"
    code, out, _ = run(capsys, "family", "x:2,2", "--json")
    assert json.loads(out) == "2,1,4,3"


def test_closed_form(capsys):
    code, out, _ = run(capsys, "closed-form", "w:2,2")
    assert code == 0
    assert out == "1 + q\n"
    code, out, _ = run(capsys, "closed-form", "x:3,3", "--inverse")
    assert out == "1 + 4q + q^2\n"
    code, out, _ = run(capsys, "closed-form", "y:2,3", "--inverse", "--json")
    assert json.loads(out) == [1, 4]


def test_lemma_exit_codes(capsys):
    code, out, _ = run(capsys, "lemma", "1", "5", "5")
    assert code == 0
    assert "equal: true" in out
    code, out, _ = run(capsys, "lemma", "2", "1", "1")
    assert code == 1
    assert "lhs: 1 - q" in out
    assert "rhs: 1 + q" in out
    assert "equal: false" in out


def test_lemma_json(capsys):
    code, out, _ = run(capsys, "lemma", "2", "2", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"lhs", "rhs", "equal"}
    assert data["equal"] is True
    assert data["lhs"] == data["rhs"] == [1, 1]
    code, out, _ = run(capsys, "lemma", "2", "3", "4", "--json")
    assert code == 0
    assert json.loads(out)["lhs"] == [-1, -1]


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "regular", "--n", "4")
    assert code == 0
    assert "result: PASS" in out
    assert "check: regular-closed-forms" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "coatom-bound", "--kmax", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["check", "range", "cases", "failures", "seed", "millis"]
    assert data["cases"] == 1
    assert data["failures"] == []


def test_verify_inversion_sampled(capsys):
    code, out, _ = run(
        capsys, "verify", "inversion", "--n", "6", "--cases", "5", "--seed", "3"
    )
    assert code == 0
    assert "seed: 3" in out
    assert "5 sampled pairs" in out


def test_size_mismatch_is_a_usage_error(capsys):
    code, out, err = run(capsys, "kl", "2,1", "3,2,1")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert "size mismatch" in err


def test_bad_permutation_is_a_usage_error(capsys):
    code, _, err = run(capsys, "leq", "1,1,2", "3,2,1")
    assert code == 2
    assert "error:" in err


def test_bad_family_spec(capsys):
    code, _, err = run(capsys, "family", "q:2,2")
    assert code == 2
    assert "error:" in err


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_output_is_stable_across_runs(capsys):
    a = run(capsys, "closed-form", "y:4,4", "--inverse")
    b = run(capsys, "closed-form", "y:4,4", "--inverse")
    assert a == b
    assert a[1] == "1 + 7q\n"


def test_parser_lists_every_command():
    parser = build_parser()
    text = parser.format_help()
    for name in (
        "kl",
        "inv-kl",
        "mu",
        "interval",
        "leq",
        "smooth",
        "picture",
        "family",
        "closed-form",
        "verify",
        "lemma",
    ):
        assert name in text
