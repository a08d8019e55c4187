import io
import json
from pathlib import Path

import pytest

from awarearg.cli import main
from awarearg.demo import harry_model
from awarearg.model import load, save

MODELS = Path(__file__).resolve().parent.parent / "models"
M0 = str(MODELS / "harry_m0.json")
EMPTY = str(MODELS / "empty_awareness.json")
SCRIPT = str(MODELS / "harry.act")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_eval_explicit_belief():
    assert run("eval", "-m", M0, "-w", "w0", "([]be & aware(<be>))") == (0, "true\n")
    assert run("eval", "-m", M0, "-w", "w0", "[]br") == (0, "false\n")


def test_eval_dynamic_claims():
    code, out = run("eval-dyn", "-m", M0, "-w", "w0", "--verify", "[+rule [be => br]]ws(<<be> => br>)")
    assert (code, out) == (0, "true\n")
    code, out = run(
        "eval-dyn", "-m", M0, "-w", "w0", "[+rule [be => br]][+arg <<be> => br>]B(<<be> => br>, br)"
    )
    assert (code, out) == (0, "true\n")


def test_eval_rejects_dynamic_formula():
    assert run("eval", "-m", M0, "-w", "w0", "[+arg <p>]p")[0] == 2


def test_grounded_on_empty_awareness():
    assert run("grounded", "-m", EMPTY) == (0, "")


def test_af_and_beliefs_on_harry():
    code, out = run("af", "-m", M0)
    assert code == 0 and "<be>" in out
    code, out = run("beliefs", "-m", M0, "--format", "structured")
    assert (code, out) == (0, "belief\t<be>\tbe\n")


def test_act_then_inspect(tmp_path):
    final = tmp_path / "final.json"
    code, out = run("act", "-m", M0, "-s", SCRIPT, "-o", str(final), "-w", "w0")
    assert code == 0 and "5 action" in out
    code, out = run("af", "-m", str(final), "--format", "structured")
    nodes = dict(line.split("\t")[1:] for line in out.splitlines() if line.startswith("node"))
    attacks = [tuple(line.split("\t")[1:]) for line in out.splitlines() if line.startswith("attack")]
    by_text = {text: idx for idx, text in nodes.items()}
    assert (by_text["<<a> => !r1>"], by_text["<<be> => br>"]) in attacks
    code, out = run("grounded", "-m", str(final))
    assert "<<be> => br>" not in out.splitlines()
    assert load(final).rules


def test_act_precondition_failure(tmp_path):
    script = tmp_path / "bad.act"
    script.write_text("+arg <a>\n+rule [p => (p | q)]\n")
    code, _ = run("act", "-m", M0, "-s", str(script), "-o", str(tmp_path / "out.json"))
    assert code == 3
    assert not (tmp_path / "out.json").exists()


def test_act_from_stdin(tmp_path, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("+rule [be => br]\n"))
    out_path = tmp_path / "out.json"
    assert run("act", "-m", M0, "-s", "-", "-o", str(out_path))[0] == 0
    assert len(load(out_path).rules) == 1


def test_reduce():
    assert run("reduce", "[+arg <p>]p") == (0, "p\n")
    assert run("reduce", "[+arg <p>]B(<p>, p)")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "-m", M0, "-w", "w9", "p"),
        ("eval", "-m", M0, "-w", "w0", "(p &"),
        ("eval", "-m", "/nonexistent/model.json", "-w", "w0", "p"),
    ],
)
def test_invalid_input_exit_code(argv):
    assert run(*argv)[0] == 2


def test_invalid_model_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"worlds": ["w0"], "b": ["w0"], "d": ["[p => (p | q)]"]}))
    assert run("grounded", "-m", str(bad))[0] == 2


@pytest.mark.parametrize("argv", [(), ("frobnicate",), ("eval", "-m", M0), ("check",), ("demo", "nobody")])
def test_usage_errors(argv):
    assert run(*argv)[0] == 1


def test_demo_harry(tmp_path):
    written = tmp_path / "m0.json"
    code, out = run("demo", "harry", "--write-model", str(written))
    assert code == 0
    assert out.count("[ok]") == 3
    assert load(written) == harry_model()
    code, out = run("demo", "harry", "--format", "structured")
    assert code == 0 and [line.split("\t")[1] for line in out.splitlines()] == ["ok"] * 3


def test_check_single_schema_is_stable():
    argv = ("check", "--schema", "Ax2", "--instances", "5", "--models", "3", "--seed", "1")
    first = run(*argv)
    assert first[0] == 0
    assert first == run(*argv)


def test_check_unknown_schema():
    assert run("check", "--schema", "Nope")[0] == 1


def test_check_lemmas_restricted():
    code, out = run("check", "--lemmas", "--restricted")
    assert code == 0 and out.rstrip().endswith("0 failures")


def test_saved_model_matches_fixture(tmp_path):
    path = tmp_path / "m0.json"
    save(harry_model(), path)
    assert path.read_text() == Path(M0).read_text()
