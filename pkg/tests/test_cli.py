import json

import pytest

from butson.bhmatrix import fourier, kronecker, loads_matrix
from butson.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def payload(out):
    d = json.loads(out)
    d.pop("elapsed_ms", None)
    return d


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, argv in {
        "f2": ("gen", "fourier", 2),
        "f3": ("gen", "fourier", 3),
        "f4": ("gen", "fourier", 4),
        "f5": ("gen", "fourier", 5),
        "syl4": ("gen", "sylvester", 2),
    }.items():
        p = tmp_path / f"{name}.mat"
        assert run(capsys, *argv, "--out", p)[0] == 0
        paths[name] = p
    k = tmp_path / "k3.mat"
    assert run(capsys, "gen", "kron", paths["f3"], paths["f3"], "--out", k)[0] == 0
    paths["k3"] = k
    return paths


def test_gen(files, capsys):
    assert loads_matrix(files["f3"].read_text()) == fourier(3)
    assert loads_matrix(files["k3"].read_text()) == kronecker(fourier(3), fourier(3))
    code, _, err = run(capsys, "gen", "fourier", 1)
    assert code == 2 and "usage" in err


def test_verify(files, tmp_path, capsys):
    code, out, _ = run(capsys, "verify", files["f5"])
    assert code == 0 and payload(out)["is_butson"]
    bad = tmp_path / "bad.mat"
    bad.write_text("3 3\n0 0 0\n0 0 2\n0 2 1\n")
    code, out, _ = run(capsys, "verify", bad)
    assert code == 1 and payload(out)["failing_pair"] == [0, 1]
    corrupt = tmp_path / "corrupt.mat"
    corrupt.write_text("3 3\n0 0 0\n0 1\n")
    code, out, err = run(capsys, "verify", corrupt)
    assert code == 3 and json.loads(err)["error"] == "parse"
    assert run(capsys, "verify", tmp_path / "missing.mat")[0] == 3


def test_radius(files, capsys):
    code, out, _ = run(capsys, "radius", files["f4"], "--scaling", "standard", "--method", "exact")
    d = payload(out)
    assert code == 0 and d["radius"] == 2 and d["method"] == "exact"
    assert list(json.loads(out))[-1] == "elapsed_ms"
    args = ("radius", files["f4"], "--scaling", "standard", "--method", "sample", "--samples", 1000, "--seed", 7)
    a, b = payload(run(capsys, *args)[1]), payload(run(capsys, *args)[1])
    assert a == b and a["radius"] <= 2 and a["seed"] == 7
    code, out, _ = run(capsys, "radius", files["k3"], "--scaling", "honold", "--budget", 10)
    assert code == 4 and payload(out)["error"] == "budget"
    code, _, _ = run(capsys, "radius", files["f3"], "--scaling", "standard")
    assert code == 0
    code, _, _ = run(capsys, "radius", files["f3"], "--scaling", "custom:0/1")
    assert code == 2


def test_radius_custom_and_code_input(files, tmp_path, capsys):
    codefile = tmp_path / "f4.code"
    assert run(capsys, "gen", "code", files["f4"], "--out", codefile)[0] == 0
    d = payload(run(capsys, "radius", codefile, "--input", "code", "--scaling", "custom:1/3")[1])
    # honold radius 4 rescaled by (1/3)/phi(4)
    assert d["radius"] == "2/3"


def test_bent(files, capsys):
    d = payload(run(capsys, "bent", files["syl4"], "--mode", "self_dual")[1])
    assert [0, 0, 0, 1] in [f["vector"] for f in d["found"]]
    d = payload(run(capsys, "bent", files["f2"])[1])
    assert d["found"] == [] and d["exhaustive"]
    code, out, _ = run(capsys, "bent", files["k3"], "--budget", 100)
    assert code == 4


def test_strength(files, tmp_path, capsys):
    code, out, _ = run(capsys, "strength", files["k3"], "--input", "matrix", "--s", 2)
    assert code == 0 and payload(out)["strength"]
    code, out, _ = run(capsys, "strength", files["f4"], "--input", "matrix", "--s", 1)
    assert code == 0
    c = tmp_path / "tiny.code"
    c.write_text("2 2\n0 0\n0 1\n")
    code, out, _ = run(capsys, "strength", c, "--s", 1)
    assert code == 1 and not payload(out)["strength"]


def test_bounds(files, capsys):
    d = payload(run(capsys, "bounds", files["f4"], "--scaling", "standard", "--with-exact")[1])
    assert (d["lower_bent"], d["exact_radius"], d["upper_strength1"]) == (2, 2, 4)
    d = payload(run(capsys, "bounds", files["k3"], "--scaling", "honold", "--with-exact")[1])
    assert d["upper_norse"] == 15 and d["exact_radius"] == 15
    d = payload(run(capsys, "bounds", files["f5"], "--scaling", "honold", "--with-exact")[1])
    assert d["upper_norse"] == 17
    assert list(d) == sorted(d)


def test_table1(capsys):
    d = payload(run(capsys, "table1")[1])
    rows = {(r["p"], r["n"]): r for r in d["rows"]}
    assert [r["upper_norse"] for r in d["rows"]] == [2, 4, 15, 17, 95]
    assert rows[(5, 25)]["radius_honold"] == "skipped (budget)"
    assert rows[(5, 25)]["sampled_lower_honold"] <= 95
    assert rows[(2, 4)]["radius_standard"] == 1
    code, out, _ = run(capsys, "table1", "--format", "tsv")
    assert code == 0 and len(out.strip().splitlines()) == 6


def test_determinism_across_workers(files, capsys):
    for argv in (
        ("radius", files["k3"], "--scaling", "honold"),
        ("radius", files["k3"], "--scaling", "honold", "--method", "sample", "--samples", 5000),
        ("bent", files["k3"]),
        ("bounds", files["k3"], "--scaling", "honold", "--with-exact"),
    ):
        outs = []
        for w in (1, 8):
            d = payload(run(capsys, *argv, "--workers", w)[1])
            assert d.pop("workers") == w
            outs.append(json.dumps(d))
        assert outs[0] == outs[1]


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["radius"])
    assert exc.value.code == 2
