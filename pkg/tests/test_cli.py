import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from d2parts.cli import gf_identity_checks, run

GOLDENS = Path(__file__).parent / "goldens"

TRACE_GOLDENS = [
    ("glaisher", 9), ("franklin", 12), ("sylvester", 20), ("vanleeuwen", 8),
    ("halfconj", 4), ("hq", 8), ("theorem4", 7), ("theorem5", 8),
]


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name, n", TRACE_GOLDENS)
def test_trace_goldens(name, n):
    code, text = call("trace", "--map", name, "--n", str(n), "--ascii")
    assert code == 0
    assert text == (GOLDENS / f"trace_{name}_{n}.txt").read_text()


def test_counts_golden():
    code, text = call("counts", "--max-n", "30")
    assert code == 0
    assert text == (GOLDENS / "counts_30.tsv").read_text()
    assert text.splitlines()[-1].split("\t") == ["30", "23924", "11962", "11962"]


def test_counts_json_key_order():
    code, text = call("counts", "--max-n", "3", "--format", "json")
    rows = json.loads(text)
    assert code == 0 and [list(r) for r in rows] == [["n", "d2", "d2e", "d2o"]] * 3
    assert rows[-1] == {"n": 3, "d2": 4, "d2e": 2, "d2o": 2}


def test_counts_tsv_single_tabs():
    _, text = call("counts", "--max-n", "12", "--min-n", "12")
    assert text == "n\td2\td2e\td2o\n12\t183\t91\t92\n"


def test_franklin_trace_shape():
    _, text = call("trace", "--map", "franklin", "--n", "12")
    lines = text.splitlines()[2:]
    assert len(lines) == 8
    assert lines[-1].endswith("(5,4,3) *")


def test_human_format_uses_combining_overline():
    _, text = call("trace", "--map", "hq", "--n", "8")
    assert "8̅" in text and "o8" not in text


@pytest.mark.parametrize("theorem, n", [
    ("parity", 60), ("mod4", 100), ("hq", 12), ("pairing-even", 12),
    ("pairing-equal", 12), ("gf-identities", 100), ("binomial", 50),
])
def test_verify_passes(theorem, n):
    code, text = call("verify", "--theorem", theorem, "--max-n", str(n), "--enum-max", "20")
    assert code == 0, text
    assert "FAIL" not in text


def test_verify_mod4_summary_lines():
    _, text = call("verify", "--theorem", "mod4", "--max-n", "100", "--enum-max", "20")
    assert text.splitlines() == [
        "mod4 [enumeration] n<=20: 21/21 pass",
        "mod4 [series] n<=100: 101/101 pass",
        "mod4 [negq] n<=100: 101/101 pass",
    ]


def test_verify_verbose_prints_witness():
    _, text = call("verify", "--theorem", "mod4", "--max-n", "12", "--enum-max", "12", "-v")
    assert "pass n=12 [enumeration] d2=183 = 3 mod 4, expected 3; m=-3 (class 1 mod 4)" in text


def test_verify_failure_exits_1(monkeypatch):
    import d2parts.cli as cli

    monkeypatch.setattr(cli, "gf_identity_checks", lambda order: [("broken", False)])
    code, text = call("verify", "--theorem", "gf-identities", "--max-n", "5")
    assert code == 1 and "FAIL broken" in text


def test_verify_mod4_failure_witness(monkeypatch):
    import d2parts.cli as cli
    from d2parts import qseries

    real = qseries.d2_series

    def shifted(order):
        s = real(order)
        return qseries.Series(s.coeffs[:5] + (s[5] + 1,) + s.coeffs[6:])

    monkeypatch.setattr(cli.qseries, "d2_series", shifted)
    code, text = call("verify", "--theorem", "mod4", "--max-n", "10", "--enum-max", "3")
    assert code == 1
    assert "FAIL n=5 [series] d2=12 = 0 mod 4, expected 3; m=-2 (class 2 mod 4)" in text


def test_gf_identity_names():
    assert len(gf_identity_checks(20)) == 6


def test_series_output():
    code, text = call("series", "--which", "d2", "--order", "4")
    assert code == 0 and text == "0\t1\n1\t1\n2\t3\n3\t4\n4\t8\n"
    _, text = call("series", "--which", "pentagonal", "--order", "7", "--format", "json")
    assert json.loads(text) == {"order": 7, "coeffs": ["1", "-1", "-1", "0", "0", "1", "0", "1"]}
    _, text = call("series", "--which", "d2-negq", "--order", "4", "--mod", "4", "--format", "json")
    assert json.loads(text) == {"order": 4, "coeffs": ["1", "3", "3", "0", "0"], "modulus": 4}


def test_ferrers():
    code, text = call("ferrers", "--partition", "6,5,3")
    assert code == 0 and text == "# # # # # #\n# # # # #\n# # #\n"
    _, text = call("ferrers", "--partition", "6,5,3", "--mark", "slope")
    assert text.count("o") == 2 and text.count("*") == 3
    _, text = call("ferrers", "--partition", "5,3,3,1,1", "--mark", "hooks")
    assert text.count("1") == 9 and text.count("2") == 3 and text.count("3") == 1


def test_output_is_deterministic():
    assert call("trace", "--map", "theorem5", "--n", "9", "--format", "json") == \
        call("trace", "--map", "theorem5", "--n", "9", "--format", "json")


def test_trace_machine_formats():
    _, text = call("trace", "--map", "theorem4", "--n", "7", "--format", "tsv")
    lines = text.splitlines()
    assert lines[0] == "n\tfamily\tmember\toutcome\tpartner"
    assert "7\tD2^o\t3,1,1,1,1\tunmatched\tfranklin_exception:4,3" in lines
    _, text = call("trace", "--map", "glaisher", "--n", "9", "--format", "json")
    assert len(json.loads(text)) == 8


@pytest.mark.parametrize("argv", [
    ["nope"],
    ["counts"],
    ["counts", "--max-n", "x"],
    ["trace", "--map", "nope", "--n", "3"],
    ["verify", "--theorem", "nope", "--max-n", "3"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run(argv, out=io.StringIO())
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_negative_bound_exit_2(capsys):
    assert call("counts", "--max-n", "-1")[0] == 2
    assert "nonnegative" in capsys.readouterr().err


def test_domain_error_echoes_input(capsys):
    code, _ = call("ferrers", "--partition", "3,x")
    assert code == 2 and "3,x" in capsys.readouterr().err
    code, _ = call("series", "--which", "d2", "--order", "3", "--mod", "1")
    assert code == 2


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "d2parts", "counts", "--max-n", "2"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.splitlines()[-1] == "2\t3\t1\t2"
    done = subprocess.run([sys.executable, "-m", "d2parts", "bogus"], capture_output=True, text=True)
    assert done.returncode == 2
