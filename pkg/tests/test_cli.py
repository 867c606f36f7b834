import io
import json

import pytest

from cli import EXIT_CAPACITY, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run


def invoke(*argv, stdin=""):
    stdout = io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=stdout)
    return code, stdout.getvalue()


@pytest.fixture
def thirds_file(tmp_path):
    path = tmp_path.joinpath("thirds.txt")
    path.write_text("".join(f"{x}\n" for x in range(1, 101) if x % 3 == 1))
    return path


def test_construct_output():
    code, out = invoke("construct", "--k", "2")
    assert code == EXIT_OK
    assert out == "4 2\nR\n1 1 0\n2 4 1\n"


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_construct_then_verify_is_clean(k):
    _, colouring = invoke("construct", "--k", str(k))
    code, out = invoke("verify", stdin=colouring)
    assert code == EXIT_OK
    assert out == "clean\n"


def test_violation_is_data_not_failure():
    code, out = invoke("verify", stdin="2 1\nE\n0 0\n")
    assert code == EXIT_OK
    assert out == "violation 2 1 1 colour 0\n"


def test_json_lines_output():
    code, out = invoke("--format", "json-lines", "verify", stdin="2 1\nE\n0 0\n")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["clean"] is False
    assert record["witness"] == [2, 1, 1]
    assert record["colour"] == 0


def test_usage_errors():
    assert invoke("paint")[0] == EXIT_USAGE
    assert invoke()[0] == EXIT_USAGE
    assert invoke("construct")[0] == EXIT_USAGE


def test_domain_and_capacity_errors():
    assert invoke("construct", "--k", "1")[0] == EXIT_DOMAIN
    assert invoke("construct", "--k", "64")[0] == EXIT_CAPACITY
    assert invoke("verify", stdin="3 2\nE\n0 1\n")[0] == EXIT_DOMAIN
    assert invoke("extremal", "--n", "500")[0] == EXIT_CAPACITY


def test_search():
    code, out = invoke("search", "--k", "1", "--n", "2")
    assert code == EXIT_OK
    assert out.startswith("not-colourable k=1 n=2")

    code, out = invoke("search", "--k", "2", "--n", "8")
    assert code == EXIT_OK
    assert out.startswith("colourable k=2 n=8")
    assert out.splitlines()[1] == "8 2"

    code, _ = invoke("search", "--k", "2", "--n", "8", "--budget-nodes", "0")
    assert code == EXIT_CAPACITY


def test_search_with_dpll_and_cnf_file(tmp_path):
    cnf = tmp_path.joinpath("k2n9.cnf")
    code, out = invoke(
        "search", "--k", "2", "--n", "9", "--engine", "dpll", "--emit-cnf", str(cnf)
    )
    assert code == EXIT_OK
    assert out.startswith("not-colourable")
    assert cnf.read_text().startswith("p cnf 18 ")


def test_compute_s():
    code, out = invoke("compute-s", "--k", "2")
    assert code == EXIT_OK
    assert out == "value 8\n"


def test_encode_cnf():
    code, out = invoke("encode-cnf", "--k", "1", "--n", "2")
    assert code == EXIT_OK
    assert out == "p cnf 2 3\n1 0\n2 0\n-2 -1 0\n"


def test_count():
    code, out = invoke("count", stdin="5 1\nR\n1 5 0\n")
    assert code == EXIT_OK
    assert out == "colour 0 5\ncross 0\ntotal 5\n"


def test_sqdiff_and_trilinear(thirds_file):
    assert invoke("sqdiff", "--set", str(thirds_file), "--r", "3", "--L", "5") == (EXIT_OK, "3\n")
    code, out = invoke("trilinear", "--set", str(thirds_file), "--r", "1", "--Z", "2")
    assert (code, out) == (EXIT_OK, "0\n")


def test_extremal():
    code, out = invoke("extremal", "--n", "5", "--method", "dp")
    assert code == EXIT_OK
    assert out.startswith("size 2\n")


def test_weyl(tmp_path):
    code, out = invoke("weyl", "--Nprime", "100", "--theta", "0")
    assert code == EXIT_OK
    theta, n_prime, real, _, magnitude = out.split()
    assert (theta, n_prime) == ("0", "100")
    assert float(real) == pytest.approx(10.0)
    assert float(magnitude) == pytest.approx(10.0)

    report = tmp_path.joinpath("weyl.csv")
    code, out = invoke("weyl", "--Nprime", "1000", "--M", "1024", "--out", str(report))
    assert code == EXIT_OK
    assert out == "n_prime 1000 M 1024 trivial_violations 0 envelope_violations 0\n"
    assert report.exists()


def test_increment(thirds_file):
    code, out = invoke("increment", "--set", str(thirds_file), "--N", "100", "--iterate")
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("end ")

    code, out = invoke("increment", "--set", str(thirds_file), "--N", "100")
    assert code == EXIT_DOMAIN


def test_trace():
    _, colouring = invoke("construct", "--k", "3")
    code, out = invoke("trace", stdin=colouring)
    assert code == EXIT_OK
    assert out == "1 1 1 3 0 1.0\n"

    code, _ = invoke("trace", stdin="5 1\nR\n1 5 0\n")
    assert code == EXIT_DOMAIN


def test_seed_does_not_change_output():
    outputs = {
        invoke("--seed", str(seed), "search", "--k", "2", "--n", "8")[1] for seed in (0, 1, 1234)
    }
    assert len(outputs) == 1
    outputs = {invoke("--seed", str(seed), "construct", "--k", "3")[1] for seed in (0, 7)}
    assert len(outputs) == 1
