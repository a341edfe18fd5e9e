import json

from confspace.cli import run


def capture(capsys, argv):
    status = run(argv)
    out = capsys.readouterr().out
    return status, out


def test_complex_homology_report(capsys):
    status, out = capture(
        capsys, ["complex", "--n", "5", "--family", "cr", "--homology"])
    assert status == 0
    data = json.loads(out)
    assert data["n"] == 5
    assert data["family"] == "cr"
    assert len(data["vertices"]) == 30
    assert len(data["edges"]) == 60
    assert data["chi"] == -30
    assert data["homology"]["betti"] == [1, 31]
    assert data["homology"]["chi"] == -30


def test_complex_orbit_report(capsys):
    status, out = capture(
        capsys, ["complex", "--n", "5", "--family", "sr", "--orbits", "1"])
    data = json.loads(out)
    assert status == 0
    assert len(data["orbits"]) == 2
    assert sum(o["size"] for o in data["orbits"]) == 120


def test_braid_equal_true(capsys):
    gorin_rhs = "-2 -1 1 -3 2 -1 3 -1 1 -2 1 2"
    status, out = capture(
        capsys,
        ["braid-equal", "--n", "4", "--lhs", "3 -1", "--rhs", gorin_rhs])
    assert status == 0
    assert json.loads(out)["equal"] is True


def test_braid_equal_false_carries_witness(capsys):
    status, out = capture(
        capsys, ["braid-equal", "--n", "3", "--lhs", "1", "--rhs", "2"])
    assert status == 1
    data = json.loads(out)
    assert data["equal"] is False
    assert "witness" in data


def test_braid_search(capsys):
    status, out = capture(capsys, ["braid-search", "--n", "5", "--k", "4"])
    assert status == 0
    data = json.loads(out)
    assert data["classes"] and all(c["cyclic"] for c in data["classes"])


def test_braid_gallery(capsys):
    status, out = capture(capsys, ["braid-gallery", "--name", "nu6"])
    assert status == 0
    data = json.loads(out)
    assert data["image_order"] == 720 and data["surjective"] is True


def test_gallery_verify_passes(capsys):
    for name in ("eisenstein", "feler6", "model"):
        status, out = capture(capsys, ["gallery-verify", "--name", name])
        assert status == 0
        data = json.loads(out)
        assert data["pass"] is True
        assert data["mode"] == "symbolic"


def test_gallery_verify_seeded_deterministic(capsys):
    args = ["gallery-verify", "--name", "feler9", "--trials", "5",
            "--seed", "9"]
    s1, o1 = capture(capsys, args)
    s2, o2 = capture(capsys, args)
    assert s1 == s2 == 0
    assert o1 == o2


def test_disc_command(capsys):
    status, out = capture(capsys, ["disc", "--n", "2"])
    assert status == 0
    data = json.loads(out)
    assert data["kind"] == "monic"
    assert [t[0] for t in data["terms"]] == ["-1", "4"]


def test_disc_capacity(capsys):
    status, _ = capture(capsys, ["disc", "--n", "9", "--projective"])
    assert status == 2


def test_abc_command(capsys):
    status, out = capture(capsys, ["abc", "--n", "3", "--bound", "1"])
    assert status == 0
    data = json.loads(out)
    assert data["counts"]["simple"] == 1
    assert data["counts"]["double"] == 0
    assert data["counts"]["other"] == 0


def test_unknown_verb_exits_two(capsys):
    assert run(["definitely-not-a-verb"]) == 2


def test_missing_flag_exits_two(capsys):
    assert run(["complex", "--family", "cr"]) == 2


def test_large_integers_become_strings(capsys):
    status, out = capture(capsys, ["disc", "--n", "6"])
    assert status == 0
    data = json.loads(out)
    assert all(isinstance(t[0], str) for t in data["terms"])
