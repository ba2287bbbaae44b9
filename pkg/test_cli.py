import json

from click.testing import CliRunner

from cli import cli


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_classify_open_semidirect_case():
    result = run("classify", "--n", "6", "--r", "2", "--s", "4", "--semidirect")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert set(report) == {"query", "verdict", "matched_conditions", "witnesses"}
    assert report["verdict"]["containment"] == "Yes"
    assert report["verdict"]["equality"] == "Open"
    assert report["matched_conditions"] == ["P3"]


def test_classify_text_output():
    result = run("classify", "--n", "5", "--m", "4", "--dihedral", "--format", "text")
    assert result.exit_code == 0
    assert "containment: Yes" in result.stdout
    assert "matched: C1" in result.stdout


def test_output_is_deterministic():
    first = run("construct", "--family", "g1", "--n", "5", "--m", "4")
    second = run("construct", "--family", "g1", "--n", "5", "--m", "4")
    assert first.stdout == second.stdout


def test_check_perm():
    result = run("check-perm", "--n", "3", "--perm", "(v1 w1 v2 w2 v3 w3)")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"]["order"] == 6
    assert report["verdict"]["realizable"] is True
    assert report["matched_conditions"] == ["case 1"]


def test_construct_passes_for_g1():
    result = run("construct", "--family", "g1", "--n", "5", "--m", "4")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"]["passed"] is True
    assert report["verdict"]["recipe"] == "g1-axis-1"
    statuses = [w["status"] for w in report["witnesses"] if "status" in w]
    assert statuses == ["Passed", "Passed"]


def test_module_errors_exit_with_one():
    result = run("construct", "--family", "g1", "--n", "7", "--m", "4")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error"]["code"] == "CongruenceMismatch"

    result = run("plan", "--n", "7", "--m", "4")
    assert result.exit_code == 1

    result = run("classify", "--n", "5", "--m", "1")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error"]["code"] == "MTooSmall"


def test_usage_errors_exit_with_two():
    assert run("classify", "--n", "6", "--m", "4", "--r", "2").exit_code == 2
    assert run("classify", "--n", "6").exit_code == 2
    assert run("classify", "--n", "6", "--m", "4", "--semidirect").exit_code == 2
    assert run("construct", "--family", "g2", "--n", "6", "--m", "5").exit_code == 2
    assert run("enumerate", "--n", "3").exit_code == 2


def test_enumerate_csv():
    result = run("enumerate", "--n", "3", "--max-order", "6", "--format", "csv")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "group,order,containment,equality,conditions,note"
    assert "Z_4,4,No,No,," in lines
    assert "Z_6,6,Yes,Yes,C2," in lines


def test_plan():
    result = run("plan", "--n", "6", "--r", "2", "--s", "4", "--semidirect")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"]["recipe"] == "j2-y4-z"
    assert report["matched_conditions"] == ["P3"]


def test_verify_so4():
    result = run("verify-so4", "--family", "j2", "--s", "4")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"]["passed"] is True
    assert report["verdict"]["order"] == 16


def test_oracle_command():
    result = run("oracle", "--max-n", "3", "--max-m", "6")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"]["passed"] is True
    assert report["verdict"]["counts"] == {"3": 72}
