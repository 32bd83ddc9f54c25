import json

from click.testing import CliRunner

from yhecke.catalog import load_bundled
from yhecke.cli import main
from yhecke.rings import parse_expr


def run(*args, expect=0):
    result = CliRunner().invoke(main, list(args))
    assert result.exit_code == expect, result.output
    return result.output


def test_invariant_single_route():
    out = run("invariant", "--braid", "", "--strands", "1", "--inv", "jones")
    assert out.strip() == "1"


def test_invariant_all_routes_agree():
    out = run("invariant", "--braid", "1 1", "--strands", "2", "--inv", "theta",
              "--d", "2", "--route", "all")
    lines = out.strip().splitlines()
    assert lines[-1] == "AGREE"
    assert len({line.split(": ", 1)[1] for line in lines[:-1]}) == 1


def test_invariant_theta_d1_is_homflypt_of_trefoil():
    out = run("invariant", "--braid", "1 1 1", "--strands", "2", "--inv", "Theta", "--d", "1")
    assert parse_expr(out.strip()) == parse_expr(
        "q^-2*sqrt_lambda^2 - sqrt_lambda^4 + q^2*sqrt_lambda^2")


def test_deterministic_output():
    args = ("invariant", "--braid", "1 -2 1", "--strands", "3", "--inv", "theta",
            "--d", "2", "--route", "all")
    assert run(*args) == run(*args)


def test_json_round_trips_through_parser():
    out = run("invariant", "--braid", "1 1", "--strands", "2", "--inv", "theta",
              "--d", "3", "--json")
    data = json.loads(out)
    for rv in data["routes"]:
        parse_expr(rv["value"])  # must parse


def test_tables_dims():
    out = run("tables", "--table", "dims", "--d", "2", "--n", "3")
    assert out.splitlines() == ["Y, YTL, CTL, FTL", "48, 28, 47, 46"]


def test_usage_error_exit_code():
    run("invariant", "--braid", "1 x", "--strands", "2", "--inv", "jones", expect=1)
    run("invariant", "--braid", "3", "--strands", "2", "--inv", "jones", expect=1)


def test_pairs_demo_files(tmp_path):
    cat = tmp_path / "catalog.txt"
    cat.write_text(load_bundled("catalog.txt"))
    prs = tmp_path / "pairs.txt"
    prs.write_text(load_bundled("pairs_demo.txt"))
    out = run("pairs", "--catalog", str(cat), "--pairs", str(prs))
    assert out.count("MATCH") == 3 and "MISMATCH" not in out


def test_pairs_mismatch_exit_code(tmp_path):
    cat = tmp_path / "catalog.txt"
    cat.write_text(load_bundled("catalog.txt"))
    prs = tmp_path / "pairs.txt"
    prs.write_text("hopf+ hopf- 12345\n")
    out = CliRunner().invoke(main, ["pairs", "--catalog", str(cat), "--pairs", str(prs)])
    assert out.exit_code == 3
    assert "MISMATCH" in out.output


def test_pairs_missing_name_exit_code(tmp_path):
    cat = tmp_path / "catalog.txt"
    cat.write_text(load_bundled("catalog.txt"))
    prs = tmp_path / "pairs.txt"
    prs.write_text("hopf+ missing-link\n")
    result = CliRunner().invoke(main, ["pairs", "--catalog", str(cat), "--pairs", str(prs)])
    assert result.exit_code == 1


def test_subset_and_e_flags():
    out1 = run("invariant", "--braid", "1 1", "--strands", "2", "--inv", "theta",
               "--d", "2", "--route", "trace")
    # same invariant through an embedding with |D| = 2 inside Z/4Z
    out2 = run("invariant", "--braid", "1 1", "--strands", "2", "--inv", "theta",
               "--route", "comb", "--E", "1/2")
    assert parse_expr(out1.strip()) == parse_expr(out2.strip())


def test_gamma_flags():
    out = run("invariant", "--braid", "", "--strands", "1", "--inv", "gamma",
              "--d", "3", "--D", "0,1", "--framings", "1")
    # the framed unknot with framing 1 evaluates to the solution value x_1
    assert parse_expr(out.strip()) == parse_expr("(1/2 + 1/2*zeta3)")


def test_computation_error_exit_code():
    result = CliRunner().invoke(main, [
        "invariant", "--braid", "1 1", "--strands", "2", "--inv", "theta",
        "--route", "comb", "--E", "0"])
    assert result.exit_code == 2
