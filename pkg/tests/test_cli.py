import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from funcbatch import cli
from funcbatch.cli import (
    EX_DATA,
    EX_FALSIFIED,
    EX_IO,
    EX_OK,
    EX_UNDECIDED,
    EX_USAGE,
    CsvTable,
    MatrixFormatError,
    chain_table_csv,
    format_matrix,
    parse_csv,
    parse_matrix,
    r2_table_csv,
    render_csv,
)
from funcbatch.codecheck import double_simplex, simplex


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_count_rec_value():
    code, out, _ = run_cli("count", "--n", "10", "--t", "8", "--r", "2")
    assert code == EX_OK and out == "41731200\n"


def test_count_empty_batch_is_one():
    code, out, _ = run_cli("count", "--n", "3", "--t", "0", "--r", "2")
    assert code == EX_OK and out == "1\n"


def test_count_too_few_positions_is_zero():
    code, out, _ = run_cli("count", "--n", "2", "--t", "4", "--r", "2")
    assert code == EX_OK and out == "0\n"


@pytest.mark.parametrize("method", ["direct", "rec", "egf"])
def test_count_methods_agree(method):
    code, out, _ = run_cli("count", "--n", "9", "--t", "3", "--r", "3", "--method", method)
    assert code == EX_OK and out == "116340\n"


def test_count_rejects_bad_cap():
    code, _, err = run_cli("count", "--n", "3", "--t", "1", "--r", "0")
    assert code == EX_USAGE and "error:" in err


def test_minn_sqrt_value():
    code, out, _ = run_cli("minn", "--k", "7", "--t", "128", "--bound", "sqrt")
    assert code == EX_OK and out == "111\n"


def test_minn_exact_value():
    code, out, _ = run_cli("minn", "--k", "3", "--t", "8", "--r", "2", "--bound", "exact")
    assert code == EX_OK and out == "10\n"


def test_minn_chain_value():
    code, out, _ = run_cli("minn", "--k", "15", "--t", "2", "--r", "2", "--bound", "chain")
    assert code == EX_OK and out == "183\n"


def test_minn_clamped_cell_shows_markers():
    code, out, _ = run_cli("minn", "--k", "7", "--t", "2", "--r", "5", "--bound", "chain")
    assert code == EX_OK
    assert out.splitlines() == ["9*", "floor=9 raw=8"]


def test_minn_vacuous_cell_shows_dash():
    code, out, _ = run_cli("minn", "--k", "5", "--t", "2", "--r", "5", "--bound", "chain")
    assert code == EX_OK
    assert out.splitlines() == ["-", "floor=9 raw=7"]


def test_minn_sqrt_warns_on_other_cap():
    code, out, err = run_cli("minn", "--k", "5", "--t", "32", "--r", "3", "--bound", "sqrt")
    assert code == EX_OK and out == "31\n"
    assert "warning" in err


def test_minn_unknown_bound_is_usage_error():
    code, _, err = run_cli("minn", "--k", "3", "--t", "8", "--bound", "bogus")
    assert code == EX_USAGE and "error:" in err


def test_table2_rows():
    code, out, _ = run_cli("table", "--which", "2")
    lines = out.splitlines()
    assert code == EX_OK
    assert lines[0] == "k,t,sqrt,exact,construction"
    assert "5,32,31,38,62" in lines
    assert "7,128,111,146,254" in lines


def test_table3_rows_and_markers():
    code, out, _ = run_cli("table", "--which", "3")
    lines = out.splitlines()
    assert code == EX_OK
    assert "10,13,33,15,15,11" in lines
    assert "5,7,7,6,6,-" in lines
    assert "7,9,13,8,9,9*" in lines
    assert "8,11,17,10,10,9" in lines
    assert any(line.startswith("#") and "k=8" in line for line in lines)


def test_table_writes_file(tmp_path):
    out_path = tmp_path / "t2.csv"
    code, _, _ = run_cli("table", "--which", "2", "--out", str(out_path))
    assert code == EX_OK
    assert "2,4,5,5,6" in out_path.read_text().splitlines()


def test_table_unwritable_path_is_io_error(tmp_path):
    code, _, err = run_cli("table", "--which", "2", "--out", str(tmp_path / "no" / "t.csv"))
    assert code == EX_IO and "error:" in err


def test_csv_round_trip():
    for table in (r2_table_csv(), chain_table_csv()):
        assert parse_csv(render_csv(table)) == table
    tiny = CsvTable(header=("a", "b"), rows=(("1", "-"), ("2*", "3")), comments=("note",))
    assert parse_csv(render_csv(tiny)) == tiny


def test_verify_construct_simplex2_holds():
    code, out, _ = run_cli("verify", "--construct", "simplex:2", "--t", "2", "--r", "2")
    assert code == EX_OK and out.splitlines()[0] == "holds"


def test_verify_counterexample_line():
    code, out, _ = run_cli("verify", "--construct", "simplex:3", "--t", "5", "--r", "2")
    assert code == EX_FALSIFIED
    assert out.splitlines() == ["fails", "7 7 7 7 7"]


def test_verify_pretty_counterexample():
    code, out, _ = run_cli("verify", "--construct", "simplex:3", "--t", "5", "--r", "2", "--pretty")
    assert code == EX_FALSIFIED
    assert out.splitlines()[1] == "111 111 111 111 111"


def test_verify_double_construct_holds():
    code, out, _ = run_cli("verify", "--construct", "double:2", "--t", "4", "--r", "2")
    assert code == EX_OK and out.splitlines()[0] == "holds"


def test_verify_budget_exit_code():
    code, out, _ = run_cli("verify", "--construct", "simplex:3", "--t", "4", "--r", "2",
                           "--budget-batches", "5")
    assert code == EX_UNDECIDED and out.splitlines()[0] == "undecided"


def test_verify_budget_env_var(monkeypatch):
    monkeypatch.setenv(cli.BUDGET_ENV_VAR, "0.000000001")
    code, out, _ = run_cli("verify", "--construct", "simplex:3", "--t", "4", "--r", "2")
    assert code == EX_UNDECIDED and out.splitlines()[0] == "undecided"


def test_verify_bad_construct_argument():
    code, _, err = run_cli("verify", "--construct", "cube:3", "--t", "2", "--r", "2")
    assert code == EX_USAGE and "error:" in err
    code, _, _ = run_cli("verify", "--construct", "simplex:9", "--t", "2", "--r", "2")
    assert code == EX_USAGE


def test_verify_matrix_file_round_trip(tmp_path):
    path = tmp_path / "m.txt"
    code, _, _ = run_cli("construct", "--which", "double", "--k", "2", "--out", str(path))
    assert code == EX_OK
    code, out, _ = run_cli("verify", "--matrix", str(path), "--t", "4", "--r", "2")
    assert code == EX_OK and out.splitlines()[0] == "holds"


def test_verify_malformed_matrix_reports_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 3\n1 0 1\n0 2 1\n")
    code, _, err = run_cli("verify", "--matrix", str(path), "--t", "2", "--r", "2")
    assert code == EX_DATA and "line 3" in err


def test_verify_missing_matrix_file_is_io_error(tmp_path):
    code, _, _ = run_cli("verify", "--matrix", str(tmp_path / "ghost.txt"), "--t", "2", "--r", "2")
    assert code == EX_IO


def test_construct_simplex2_output():
    code, out, _ = run_cli("construct", "--which", "simplex", "--k", "2")
    assert code == EX_OK
    assert out == "2 3\n1 0 1\n0 1 1\n"


def test_construct_double_header():
    code, out, _ = run_cli("construct", "--which", "double", "--k", "3")
    assert code == EX_OK
    assert out.splitlines()[0] == "3 14"


def test_construct_out_of_range_k():
    code, _, _ = run_cli("construct", "--which", "simplex", "--k", "9")
    assert code == EX_USAGE


def test_matrix_format_round_trip():
    for matrix in (simplex(2), simplex(3), double_simplex(2)):
        assert parse_matrix(format_matrix(matrix)) == matrix


def test_matrix_parser_skips_comments_and_blanks():
    text = "# generator\n\n2 3\n# rows\n1 0 1\n0 1 1\n"
    assert parse_matrix(text) == simplex(2)


def test_matrix_parser_errors_carry_line_numbers():
    with pytest.raises(MatrixFormatError) as exc:
        parse_matrix("2 3\n1 0 1\n0 1\n")
    assert "line 3" in str(exc.value)
    with pytest.raises(MatrixFormatError):
        parse_matrix("")
    with pytest.raises(MatrixFormatError):
        parse_matrix("2 3\n1 0 1\n")
    with pytest.raises(MatrixFormatError):
        parse_matrix("2\n1\n")


def test_missing_subcommand_is_usage_error():
    code, _, err = run_cli()
    assert code == EX_USAGE and "error:" in err
