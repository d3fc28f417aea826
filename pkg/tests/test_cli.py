from __future__ import annotations

import os
import subprocess
import sys

import pytest

from nutgraphs.catalog import seed
from nutgraphs.cli import main
from nutgraphs.constructions import cycle
from nutgraphs.graph import is_regular, parse_graph6, write_graph6
from nutgraphs.kernel import KernelCertificate, mat_vec


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_frucht(capsys):
    code, out, _ = run(capsys, ["verify", seed("frucht").graph6])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "Nut, nullity 1"
    cert = KernelCertificate.from_text("\n".join(lines[1:]))
    assert len(cert.basis[0]) == 12
    assert not any(mat_vec(seed("frucht").graph, cert.basis[0]))


def test_verify_c6(capsys):
    code, out, _ = run(capsys, ["verify", write_graph6(cycle(6))])
    assert code == 0 and out.splitlines()[0] == "NonSingular, nullity 0"


def test_verify_malformed(capsys):
    code, _, err = run(capsys, ["verify", "!!!"])
    assert code == 2 and "graph6" in err


def test_verify_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, ["verify"], stdin="C~\n", monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("NonSingular")


def test_construct(capsys):
    code, out, err = run(capsys, ["construct", "--degree", "3", "--order", "18"])
    g = parse_graph6(out.strip())
    assert code == 0 and g.order == 18 and is_regular(g, 3)
    assert "frucht" in err


def test_construct_emit_formats(capsys):
    code, out, _ = run(capsys, ["construct", "-r", "4", "-n", "8", "--emit", "certificate"])
    cert = KernelCertificate.from_text(out)
    assert code == 0 and cert.nullity == 1 and len(cert.basis[0]) == 8
    code, out, _ = run(capsys, ["construct", "-r", "4", "-n", "8", "--emit", "dot"])
    assert code == 0 and out.startswith("graph G {")


def test_construct_rejections(capsys):
    code, out, err = run(capsys, ["construct", "-r", "2", "-n", "8"])
    assert code == 1 and out == "" and "no regular nut graphs of degree two" in err
    code, _, err = run(capsys, ["construct", "-r", "5", "-n", "20"])
    assert code == 1 and "open problem" in err


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["construct", "-r", "x", "-n", "8"])
    assert info.value.code == 2
    capsys.readouterr()


def test_fowler_and_verify(capsys):
    code, out, _ = run(capsys, ["fowler", seed("frucht").graph6, "--vertex", "0"])
    g = parse_graph6(out.strip())
    assert code == 0 and g.order == 18
    code, out, _ = run(capsys, ["verify", out.strip()])
    assert out.startswith("Nut, nullity 1")
    code, _, _ = run(capsys, ["fowler", seed("frucht").graph6, "--vertex", "40"])
    assert code == 2


def test_subdivide(capsys):
    code, out, _ = run(capsys, ["subdivide", seed("nut7_a").graph6, "--edge", "0", "1"])
    assert code == 0 and parse_graph6(out.strip()).order == 11
    code, _, _ = run(capsys, ["subdivide", seed("nut7_a").graph6, "--edge", "0", "2"])
    assert code == 1


def test_antiprism_and_circulant(capsys):
    code, out, _ = run(capsys, ["antiprism", "6"])
    code, out, _ = run(capsys, ["verify", out.strip()])
    assert out.startswith("CoreNonNut, nullity 3")
    code, out, _ = run(capsys, ["circulant", "8", "1", "2", "--dot"])
    assert code == 0 and "graph G {" in out
    code, _, _ = run(capsys, ["antiprism", "2"])
    assert code == 1


def test_enumerate(capsys, tmp_path):
    nuts = tmp_path / "nuts.g6"
    code, out, err = run(capsys, ["enumerate", "--order", "7", "--emit-nuts", str(nuts)])
    assert code == 0
    assert "Nut\t3" in out.splitlines()
    assert "elapsed" in err and "elapsed" not in out
    assert len(nuts.read_text().split()) == 3
    code, _, err = run(capsys, ["enumerate", "--order", "15", "--regular", "4"])
    assert code == 1 and "--long-run" in err


def test_enumerate_is_deterministic(capsys):
    a = run(capsys, ["enumerate", "-n", "12", "-r", "3"])[1]
    b = run(capsys, ["enumerate", "-n", "12", "-r", "3", "--jobs", "2"])[1]
    assert a == b and "Nut\t9" in a.splitlines()


def test_seeds(capsys):
    code, out, _ = run(capsys, ["seeds", "list"])
    assert code == 0 and len(out.splitlines()) == 14
    code, out, _ = run(capsys, ["seeds", "show", "quartic15"])
    assert code == 0 and out.splitlines()[1] == "Nut, nullity 1"
    code, _, _ = run(capsys, ["seeds", "show", "nope"])
    assert code == 1


def _env(**extra):
    env = dict(os.environ)
    env.update(extra)
    return env


def test_pipeline_subprocess():
    built = subprocess.run([sys.executable, "-m", "nutgraphs", "construct", "-r", "4", "-n", "23"],
                           capture_output=True, text=True, check=True)
    checked = subprocess.run([sys.executable, "-m", "nutgraphs", "verify"], input=built.stdout,
                             capture_output=True, text=True, check=True)
    assert checked.stdout.startswith("Nut, nullity 1")


def test_pure_python_fallback_subprocess():
    code = ("from nutgraphs import _backend; from nutgraphs.enumeration import run_census;"
            "print(_backend.BACKEND, run_census(7).nut_count, run_census(10, 4).nut_count)")
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True,
                         env=_env(NUTGRAPHS_PURE_PYTHON="1"))
    assert res.stdout.split() == ["python", "3", "12"]
