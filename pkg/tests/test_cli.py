import pytest

from girglab.cli import main, parse_seed


def test_parse_seed_decimal_and_hex():
    assert parse_seed("42") == 42
    assert parse_seed("0x2a") == 42
    assert parse_seed("0x10") == 16


def test_gen_stats_cut_pipeline(tmp_path, capsys):
    base = str(tmp_path / "g")
    rc = main([
        "gen", "--geometry", "mcd", "--dim", "2", "--n", "400",
        "--alpha", "1.5", "--beta", "2.5", "--seed", "0x7", "--out", base,
    ])
    assert rc == 0
    out = capsys.readouterr().out
    assert "edges=" in out

    rc = main(["stats", base])
    assert rc == 0
    out = capsys.readouterr().out
    assert "giant_fraction=" in out
    assert "mean_cc=" in out

    rc = main(["cut", base, "--delta", "0.1", "--restarts", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("method,delta,side0,side1,cross_edges,eta_achieved,feasible")
    assert "local_search" in out
    assert "halfspace_axis0" in out


def test_hex_and_decimal_seed_agree(tmp_path):
    a, b = str(tmp_path / "a"), str(tmp_path / "b")
    main(["gen", "--n", "100", "--seed", "31", "--out", a])
    main(["gen", "--n", "100", "--seed", "0x1f", "--out", b])
    va = (tmp_path / "a.edges.tsv").read_text()
    vb = (tmp_path / "b.edges.tsv").read_text()
    assert va == vb


def test_sweep_writes_outputs(tmp_path, capsys):
    out = str(tmp_path / "exp")
    rc = main([
        "sweep", "--geometry", "euclidean_max", "--dim", "2",
        "--n", "128", "--n", "256", "--seed", "1", "--delta", "0.1",
        "--restarts", "2", "--out", out,
    ])
    assert rc == 0
    assert (tmp_path / "exp" / "sweep.csv").exists()
    assert (tmp_path / "exp" / "scaling.svg").exists()


def test_unknown_command_rejected():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
