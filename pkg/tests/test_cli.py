import json
from pathlib import Path

import pytest

from chillingworth.cli import main
from chillingworth.homology import SurfaceSpec
from chillingworth.theorem import identity_row, reduced_words, theorem_suite
from chillingworth.torelli import build_catalog, theorem_generators

FIXTURE = str(Path(__file__).parent / "fixtures" / "sign_flipped_catalog.json")
BP1 = '[{"gen": "bp:a=-β1,k=1", "exp": 1}]'


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_phi_text(capsys):
    code, out, _ = run(capsys, "phi", "--word", BP1, "--class", "1,0,0,0,0,0")
    assert (code, out.strip()) == (0, "phi = 1")


def test_phi_closed_text(capsys):
    code, out, _ = run(capsys, "phi", "--surface", "g=3,closed", "--word", BP1,
                       "--class=-1,0,0,0,0,0")
    assert (code, out.strip()) == (0, "phi ≡ 1 (mod 2)")


def test_phi_json_deterministic(capsys):
    args = ("phi", "--word", BP1, "--class", "1,0,0,0,0,0", "--format", "json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    assert json.loads(a)["phi"] == 1


def test_word_from_file(capsys, tmp_path):
    f = tmp_path / "w.json"
    f.write_text(BP1)
    code, out, _ = run(capsys, "phi", "--word", str(f), "--class", "1,0,0,0,0,0")
    assert code == 0 and out.strip() == "phi = 1"


@pytest.mark.parametrize("args", [
    ("phi", "--word", BP1, "--class", "0,0,0,0,0,0"),
    ("phi", "--word", BP1, "--class", "1,0"),
    ("phi", "--surface", "g=2", "--word", BP1, "--class", "1,0,0,0"),
    ("phi", "--word", '[{"gen": "nope", "exp": 1}]', "--class", "1,0,0,0,0,0"),
    ("phi", "--word", "missing.json", "--class", "1,0,0,0,0,0"),
    ("graph-ball", "--radius", "0"),
])
def test_input_errors(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2 and err.startswith("error:")


def test_catalog_validate(capsys):
    code, out, _ = run(capsys, "catalog", "validate")
    assert code == 0 and "all checks pass" in out


def test_negative_control_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "validate", "--catalog", FIXTURE)
    assert code == 1 and "FAIL" in out


def test_negative_control_theorem(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--catalog", FIXTURE, "--max-len", "1")
    assert code == 1 and "MISMATCH" in out


def test_verify_theorem_short(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-len", "1", "--sample", "5")
    assert code == 0


def test_chillingworth_cmd(capsys):
    code, out, _ = run(capsys, "chillingworth", "--word", BP1)
    assert code == 0 and "default: e = [2, 0, 0, 0, 0, 0]" in out


def test_euler_cmd(capsys):
    code, out, _ = run(capsys, "euler", "--surface", "g=4,closed")
    assert code == 0 and out.strip() == "chi(g=4,closed) = -6"


def test_reduced_words_count():
    gens = theorem_generators(build_catalog(3))
    n = len(gens)
    assert len(reduced_words(gens, 2)) == 1 + 2 * n + 2 * n * (2 * n - 1)


def test_theorem_suite_len1():
    spec = SurfaceSpec(3, True)
    rows = theorem_suite(spec, max_len=1)
    assert all(r.agrees for r in rows)
    assert sum(r.calibration for r in rows) == 1
    assert identity_row(spec).phi2 == 0


def test_graph_ball_small(capsys):
    code, out, _ = run(capsys, "graph-ball", "--radius", "1", "--power", "2")
    assert code == 0 and "10/10 vertex pairs consistent" in out
