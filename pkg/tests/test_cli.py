import json

from qbecc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_15_3(capsys):
    code, out = run_cli(capsys, "analyze", "--n", "15", "--poly", "1^6 2^3 1^0")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 15, "k": 3, "l": 3, "qrb": 3,
                       "saturates": True, "degenerate": False, "distance": 3}


def test_analyze_css_21_9(capsys):
    code, out = run_cli(capsys, "analyze", "--n", "21", "--construction", "css",
                        "--poly", "1^6 1^4 1^1 1^0",
                        "--poly2", "1^6 1^4 1^2 1^1 1^0",
                        "--distance-limit", "0")
    assert code == 0
    payload = json.loads(out)
    assert (payload["n"], payload["k"], payload["l"], payload["qrb"]) == (21, 9, 2, 3)
    assert payload["saturates"] is False
    assert "distance" not in payload


def test_analyze_malformed_poly(capsys):
    code, out = run_cli(capsys, "analyze", "--n", "15", "--poly", "1^6 1^6")
    assert code == 2
    assert "error" in json.loads(out)


def test_analyze_non_divisor(capsys):
    code, out = run_cli(capsys, "analyze", "--n", "15", "--poly", "1^2 1^1")
    assert code == 2


def test_bounds(capsys):
    code, out = run_cli(capsys, "bounds", "--n", "13", "--k", "1", "--l", "3")
    assert code == 0
    assert json.loads(out) == {"qrb": 3, "qrb_ok": True, "no_cloning_ok": True}
    code, out = run_cli(capsys, "bounds", "--n", "13", "--k", "1", "--l", "4")
    assert json.loads(out)["qrb_ok"] is False
    code, out = run_cli(capsys, "bounds", "--n", "12", "--k", "1", "--l", "3")
    assert json.loads(out)["no_cloning_ok"] is False


def test_search_small_range(capsys, tmp_path):
    out_path = tmp_path / "records.csv"
    code, _ = run_cli(capsys, "search", "--min-n", "13", "--max-n", "15",
                      "--construction", "hermitian", "--output", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("n,k,l,qrb")
    assert any(line.startswith("13,1,3,3,true,false,hermitian") for line in lines)
    assert any(line.startswith("15,3,3,3,true,false,hermitian") for line in lines)


def test_search_even_only_range(capsys):
    code, out = run_cli(capsys, "search", "--min-n", "4", "--max-n", "4")
    assert code == 2
    assert "error" in json.loads(out)


def test_tensor_example(capsys):
    code, out = run_cli(capsys, "tensor", "--c1-poly", "1^6 2^3 1^0",
                        "--c1-n", "15", "--rs", "6,2", "--dispersal", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["params"] == [90, 42]
    assert payload["rank"] == 24
    assert payload["self_orthogonal"] is True
    assert payload["dispersal"]["aligned"]["max_subblocks"] <= 2
    assert payload["dispersal"]["aligned"]["max_inner_burst"] <= 3


def test_tensor_bad_l1(capsys):
    code, out = run_cli(capsys, "tensor", "--c1-poly", "1^6 2^3 1^0",
                        "--c1-n", "15", "--rs", "6,2", "--dispersal", "6",
                        "--l1", "4")
    assert code == 2


def test_simulate_p0(capsys):
    code, out = run_cli(capsys, "simulate", "--code", "13_1",
                        "--decoder", "combined", "--p", "0", "--mu", "0.3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    fields = lines[1].split(",")
    assert fields[0] == "13_1" and float(fields[5]) == 1.0
    assert fields[7] == "true"


def test_simulate_grid_shapes(capsys):
    code, out = run_cli(capsys, "simulate", "--code", "13_1",
                        "--decoder", "random", "--p", "1e-2",
                        "--mu", "0:0.5:1")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 3


def test_simulate_unknown_code(capsys):
    code, out = run_cli(capsys, "simulate", "--code", "99_1",
                        "--decoder", "random", "--p", "0.01", "--mu", "0")
    assert code == 2


def test_grid_parsing():
    from qbecc.cli import _parse_grid
    assert _parse_grid("3e-2") == [0.03]
    lin = _parse_grid("0:0.05:1")
    assert len(lin) == 21 and lin[0] == 0.0 and abs(lin[-1] - 1.0) < 1e-12
    log = _parse_grid("1e-5:log:1e-1")
    assert len(log) == 17
    assert abs(log[0] - 1e-5) < 1e-18 and abs(log[-1] - 0.1) < 1e-12
