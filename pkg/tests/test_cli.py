import json

import pytest

from graphburn import generators as gen
from graphburn import io
from graphburn.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def p9(tmp_path):
    path = tmp_path / "p9.edges"
    path.write_text(io.format_edge_list(gen.path(9)))
    return path


@pytest.mark.parametrize("algo", ["brute", "setcover", "components", "split"])
def test_solve_minimizes(capsys, p9, algo):
    code, out = run(capsys, "solve", p9, "--algo", algo)
    res = json.loads(out)
    assert code == 0
    assert res["burning_number"] == 3 and res["verified"] and res["answer"] == "yes"
    assert set(res) >= {"algorithm", "n", "m", "k_query", "schedule", "elapsed_ms"}


def test_solve_decision_exit_codes(capsys, p9):
    assert run(capsys, "solve", p9, "-k", 3, "--algo", "split")[0] == 0
    code, out = run(capsys, "solve", p9, "-k", 2, "--algo", "split")
    assert code == 1 and json.loads(out)["answer"] == "no"


def test_solve_approx(capsys, tmp_path):
    k1 = tmp_path / "k1.edges"
    k1.write_text("1 0\n")
    code, out = run(capsys, "solve", k1, "--algo", "approx")
    res = json.loads(out)
    assert code == 0 and res["upper_bound"] >= 1 and res["verified"]


def test_solve_approx_with_k(capsys, tmp_path):
    g = tmp_path / "e.edges"
    g.write_text(io.format_edge_list(gen.empty(5)))
    code, out = run(capsys, "solve", g, "-k", 3, "--algo", "approx")
    assert code == 1 and json.loads(out)["answer"] == "no"
    # t = 5 is the first accepted probe, so 6 is neither certified nor refuted
    code, out = run(capsys, "solve", g, "-k", 6, "--algo", "approx")
    assert code == 0 and json.loads(out)["answer"] == "upper_bound"
    code, out = run(capsys, "solve", g, "-k", 16, "--algo", "approx")
    res = json.loads(out)
    assert code == 0 and res["answer"] == "yes" and len(res["schedule"]) == 16


def test_split_matches_brute_on_same_file(capsys, tmp_path):
    g = tmp_path / "g.edges"
    g.write_text(io.format_edge_list(gen.gnp(9, 0.3, seed=4)))
    for k in range(1, 6):
        a = json.loads(run(capsys, "solve", g, "-k", k, "--algo", "split")[1])["answer"]
        b = json.loads(run(capsys, "solve", g, "-k", k, "--algo", "brute")[1])["answer"]
        assert a == b


def test_colorcoding_output_is_reproducible(capsys, tmp_path):
    g = tmp_path / "u.edges"
    g.write_text(io.format_edge_list(gen.disjoint_union([gen.path(3)] * 3)))
    args = ("solve", g, "-k", 4, "--algo", "components", "--ds-solver", "colorcoding", "--seed", 5)
    outs = []
    for _ in range(2):
        res = json.loads(run(capsys, *args)[1])
        res.pop("elapsed_ms")
        outs.append(json.dumps(res))
    assert outs[0] == outs[1] and '"seed": 5' in outs[0]


def test_verify(capsys, tmp_path, p9):
    good = tmp_path / "good.txt"
    good.write_text("8 6 2\n")
    assert run(capsys, "verify", p9, good)[0] == 0
    k5 = tmp_path / "k5.edges"
    k5.write_text(io.format_edge_list(gen.complete(5)))
    zero = tmp_path / "zero.txt"
    zero.write_text("0\n")
    code, out = run(capsys, "verify", k5, zero)
    assert code == 1 and json.loads(out)["uncovered"] == [1, 2, 3, 4]
    bad = tmp_path / "bad.txt"
    bad.write_text("99\n")
    assert run(capsys, "verify", p9, bad)[0] == 2


def test_generate(capsys, tmp_path):
    code, out = run(capsys, "generate", "path", 9)
    g = io.parse_edge_list(out)
    assert code == 0 and (g.n, g.m) == (9, 8)
    a = run(capsys, "generate", "gnp", 10, 0.3, "--seed", 7)[1]
    b = run(capsys, "generate", "gnp", 10, 0.3, "--seed", 7)[1]
    assert a == b
    target = tmp_path / "sc.txt"
    assert run(capsys, "generate", "setcover", 3, 2, 1, "--seed", 1, "-o", target)[0] == 0
    assert io.read_set_cover(target).universe_size == 3
    assert run(capsys, "generate", "nosuch", 3)[0] == 2
    assert run(capsys, "generate", "path", 3, 4)[0] == 2


def test_reduce(capsys, tmp_path):
    sc = tmp_path / "sc.txt"
    sc.write_text("2 2 1\n1 2\n1\n")
    code, out = run(capsys, "reduce", sc, "--out", tmp_path / "gad")
    res = json.loads(out)
    assert code == 0 and res["n"] == 18 and res["k"] == 3
    g = io.read_edge_list(tmp_path / "gad.edges")
    roles = io.parse_roles((tmp_path / "gad.roles").read_text())
    assert g.n == 18 and len(roles) == 18 and "# k = 3" in (tmp_path / "gad.edges").read_text()
    code, out = run(capsys, "reduce", sc)
    assert code == 0 and io.parse_edge_list(out).n == 18


def test_params(capsys, tmp_path):
    cases = {
        "p5": (gen.path(5), {"p": 1, "d_max": 4}),
        "c4": (gen.cycle(4), {"is_split": False, "split_distance": 1}),
        "k3k3": (gen.disjoint_union([gen.complete(3)] * 2), {"p": 2, "d_max": 1}),
    }
    for name, (g, want) in cases.items():
        f = tmp_path / f"{name}.edges"
        f.write_text(io.format_edge_list(g))
        res = json.loads(run(capsys, "params", f, "--max-deletion", 2)[1])
        for key, value in want.items():
            assert res[key] == value


def test_usage_and_capacity_codes(capsys, tmp_path, p9):
    assert run(capsys, "solve")[0] == 2
    broken = tmp_path / "broken.edges"
    broken.write_text("2 1\n0 0\n")
    assert run(capsys, "solve", broken)[0] == 2
    big = tmp_path / "big.edges"
    big.write_text(io.format_edge_list(gen.path(30)))
    assert run(capsys, "solve", big, "-k", 3, "--algo", "setcover")[0] == 3
    c5 = tmp_path / "c5.edges"
    c5.write_text(io.format_edge_list(gen.cycle(5)))
    assert run(capsys, "solve", c5, "-k", 2, "--algo", "split", "--max-deletion", 0)[0] == 3


def test_deletion_set_file(capsys, tmp_path, p9):
    s = tmp_path / "s.txt"
    s.write_text("0 2 4\n")
    code, out = run(capsys, "solve", p9, "-k", 3, "--algo", "split", "--deletion-set", s)
    assert code == 0 and json.loads(out)["verified"]
