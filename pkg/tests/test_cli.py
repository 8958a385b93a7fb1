# tests/test_cli.py
"""
Test the command-line surface end to end through main(argv)
"""
import json

from src.main import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def stats_of(out: str) -> dict:
    return dict(line.split("=", 1) for line in out.splitlines() if "=" in line)


def test_gen_and_fvector(tmp_path, capsys):
    path = str(tmp_path / "simplex.txt")
    assert run_cli(capsys, "gen", "simplex", "-o", path)[0] == 0
    code, out, _ = run_cli(capsys, "fvector", path)
    assert code == 0
    assert out.strip() == "5 10 10 5"


def test_stacked_input_is_seed(tmp_path, capsys):
    path = str(tmp_path / "stacked.txt")
    run_cli(capsys, "gen", "stacked", "--n", "6", "--seed", "1", "-o", path)
    with open(path, encoding="utf-8") as f:
        assert f.readline().startswith("# stacked n=6 seed=1")
    code, out, _ = run_cli(capsys, "seeds", "--kinds", "32", path)
    assert code == 0
    assert stats_of(out)["input_is_seed"] == "true"


def test_certify_cyclic(tmp_path, capsys):
    path = str(tmp_path / "cyclic.txt")
    trace = str(tmp_path / "cyclic.trace")
    run_cli(capsys, "gen", "cyclic", "--n", "6", "-o", path)
    code, out, _ = run_cli(capsys, "certify", path, "--trace", trace)
    assert code == 0
    stats = stats_of(out)
    assert stats["certified"] == "true"
    assert stats["path_length"] == "1"
    with open(trace, encoding="utf-8") as f:
        lines = f.read().splitlines()
    assert len(lines) == 1 and lines[0].startswith("32 ")

    flipped = str(tmp_path / "flipped.txt")
    assert run_cli(capsys, "flip", path, "--trace", trace, "-o", flipped)[0] == 0
    assert run_cli(capsys, "fvector", flipped)[1].strip() == "6 14 16 8"


def test_canon_is_idempotent(tmp_path, capsys):
    path = str(tmp_path / "walk.txt")
    once = str(tmp_path / "once.txt")
    twice = str(tmp_path / "twice.txt")
    run_cli(capsys, "gen", "walk", "--n", "8", "--steps", "10", "--seed", "4", "-o", path)
    run_cli(capsys, "canon", path, "-o", once)
    run_cli(capsys, "canon", once, "-o", twice)
    with open(once, encoding="utf-8") as a, open(twice, encoding="utf-8") as b:
        assert a.read() == b.read()


def test_homology_and_validate(tmp_path, capsys):
    path = str(tmp_path / "cyclic.txt")
    run_cli(capsys, "gen", "cyclic", "--n", "7", "-o", path)
    assert run_cli(capsys, "homology", path)[1].strip() == "H0=Z H1=0 H2=0 H3=Z"
    code, out, _ = run_cli(capsys, "validate", path)
    assert code == 0
    assert stats_of(out)["neighborly"] == "true"


def test_domain_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.txt"
    path.write_text("1 2 3 4\n1 2 3 5\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "validate", str(path))
    assert code == 1
    assert "NonPseudomanifold" in err


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys, "gen")[0] == 2
    assert run_cli(capsys, "no-such-command")[0] == 2


def test_missing_config(capsys):
    code, _, err = run_cli(capsys, "--config", "missing.yaml", "gen", "simplex")
    assert code == 1
    assert "ConfigError" in err


def test_bfs_census_and_anneal(tmp_path, capsys):
    path = str(tmp_path / "cyclic.txt")
    run_cli(capsys, "gen", "cyclic", "--n", "7", "-o", path)

    code, out, _ = run_cli(capsys, "bfs", path, "--dump", str(tmp_path / "classes"))
    assert code == 0
    assert stats_of(out)["class_count"] == "5"
    assert len(list((tmp_path / "classes").iterdir())) == 5

    code, out, _ = run_cli(capsys, "census", "--n", "6")
    assert stats_of(out)["class_count"] == "2"

    code, out, _ = run_cli(capsys, "anneal", path, "--objective", "stacked", "--seed", "2")
    assert code == 0
    assert stats_of(out)["success"] == "true"
    assert stats_of(out)["seed"] == "2"


def test_budget_exhaustion_exit_code(tmp_path, capsys):
    path = str(tmp_path / "cyclic.txt")
    run_cli(capsys, "gen", "cyclic", "--n", "7", "-o", path)
    code, out, err = run_cli(capsys, "anneal", path, "--max-flips", "1")
    assert code == 1
    assert stats_of(out)["success"] == "false"
    assert "BudgetExhausted" in err


def test_manifest(tmp_path, capsys):
    path = str(tmp_path / "stacked.txt")
    manifest = str(tmp_path / "run.json")
    run_cli(capsys, "--manifest", manifest, "gen", "stacked", "--n", "7", "--seed", "3", "-o", path)
    with open(manifest, encoding="utf-8") as f:
        data = json.load(f)
    assert data["command"] == "gen"
    assert data["rng_seed"] == 3
    assert data["parameters"]["n"] == 7
    assert data["tool_version"]


def test_same_manifest_gives_same_bytes(tmp_path, capsys):
    outputs = []
    for run in range(2):
        walk = tmp_path / f"walk{run}.txt"
        result = tmp_path / f"anneal{run}.txt"
        trace = tmp_path / f"anneal{run}.trace"
        run_cli(capsys, "gen", "walk", "--n", "8", "--steps", "12", "--seed", "9", "-o", str(walk))
        code, out, _ = run_cli(
            capsys,
            "anneal",
            str(walk),
            "--seed",
            "4",
            "--max-flips",
            "5000",
            "-o",
            str(result),
            "--trace",
            str(trace),
        )
        outputs.append((code, out, walk.read_bytes(), result.read_bytes(), trace.read_bytes()))
    assert outputs[0] == outputs[1]


def test_manifest_written_on_failure(tmp_path, capsys):
    path = str(tmp_path / "cyclic.txt")
    manifest = tmp_path / "run.json"
    run_cli(capsys, "gen", "cyclic", "--n", "7", "-o", path)
    code, _, err = run_cli(
        capsys, "--manifest", str(manifest), "anneal", path, "--max-flips", "1", "--seed", "5"
    )
    assert code == 1
    assert "BudgetExhausted" in err
    data = json.loads(manifest.read_text(encoding="utf-8"))
    assert data["command"] == "anneal"
    assert data["rng_seed"] == 5
    assert path in data["input_digests"]


def test_limit_and_not_found_exit_codes(tmp_path, capsys):
    path = str(tmp_path / "cyclic.txt")
    run_cli(capsys, "gen", "cyclic", "--n", "7", "-o", path)
    code, out, err = run_cli(capsys, "bfs", path, "--max-classes", "1")
    assert code == 1
    assert stats_of(out)["exhausted"] == "false"
    assert "LimitExceeded" in err
    code, out, err = run_cli(capsys, "certify", path, "--max-depth", "0")
    assert code == 1
    assert stats_of(out)["certified"] == "false"
    assert "NotFound" in err
