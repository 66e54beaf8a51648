"""End-to-end command-line checks: documents, golden output, exit codes."""

import json

import pytest

from permsum.cli import run

from conftest import oracle_table


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def payload_of(out):
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    return doc["payload"]


class TestConstruct:
    def test_greedy_four(self, capsys):
        code, out, err = invoke(capsys, "construct", "--n", "4", "--method", "greedy")
        assert code == 0 and err == ""
        assert payload_of(out) == {"weights": [1, 2, 5, 15], "max_sum": 80}

    def test_greedy_trace(self, capsys):
        code, out, _ = invoke(
            capsys, "construct", "--n", "4", "--method", "greedy", "--trace"
        )
        assert code == 0
        trace = payload_of(out)["trace"]
        assert trace["weights"] == [1, 2, 5, 15]
        assert trace["levels"][0]["examined"] == 8
        assert trace["levels"][0]["binding"]["lower_bound"] == 5

    def test_base(self, capsys):
        code, out, _ = invoke(
            capsys, "construct", "--n", "3", "--method", "base", "--base", "4"
        )
        assert code == 0
        assert payload_of(out)["weights"] == [1, 4, 16]

    def test_base_too_small_surfaces_verbatim(self, capsys):
        code, out, err = invoke(
            capsys, "construct", "--n", "4", "--method", "base", "--base", "3"
        )
        assert code == 1 and out == ""
        assert "BaseTooSmall" in err

    def test_flag_misuse_is_usage_error(self, capsys):
        code, _, _ = invoke(
            capsys, "construct", "--n", "4", "--method", "greedy", "--base", "9"
        )
        assert code == 2


class TestVerify:
    def test_collision(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--g", "1,3,9,27")
        assert code == 0
        payload = payload_of(out)
        assert payload["distinct"] is False
        assert payload["collision_witness"]["sum"] == 100
        assert payload["collision_witness"]["greater"] == [4, 2, 1, 3]
        assert payload["collision_witness"]["smaller"] == [1, 3, 4, 2]

    def test_order_flag(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--g", "1,2,5,13", "--order")
        assert code == 0
        payload = payload_of(out)
        assert payload["order_compatible"] is False
        assert payload["order_witness"] == {
            "later": [4, 3, 1, 2], "earlier": [2, 3, 4, 1]
        }
        # the violating step is an outright tie, so the sums collide too
        assert payload["distinct"] is False

    def test_custom_inputs(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--g", "1,3,9", "--x", "0,1,2")
        assert code == 0
        assert payload_of(out)["distinct"] is True

    def test_leading_zero_weight_allowed(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--g", "0,1,3")
        assert code == 0
        assert payload_of(out)["distinct"] is True

    def test_size_mismatch_is_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "verify", "--g", "1,2,4", "--x", "1,2")
        assert code == 2


class TestSearch:
    def test_three(self, capsys):
        code, out, _ = invoke(capsys, "search", "--n", "3")
        assert code == 0
        payload = payload_of(out)
        assert payload["weights"] == [1, 2, 4]
        assert payload["max_sum"] == 17
        assert payload["optimal"] is True
        assert payload["budget"] == 17

    def test_allow_zero(self, capsys):
        code, out, _ = invoke(capsys, "search", "--n", "3", "--allow-zero")
        assert code == 0
        assert payload_of(out)["weights"] == [0, 1, 3]

    def test_infeasible_budget(self, capsys):
        code, _, err = invoke(capsys, "search", "--n", "3", "--budget", "16")
        assert code == 1
        assert "InfeasibleBudget" in err


class TestEnumerate:
    def test_three(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--n", "3")
        assert code == 0
        payload = payload_of(out)
        assert payload["count"] == 6
        assert payload["perms"] == [
            [3, 2, 1], [2, 3, 1], [3, 1, 2], [1, 3, 2], [2, 1, 3], [1, 2, 3]
        ]

    def test_reversed_display(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--n", "2", "--reversed")
        assert code == 0
        assert payload_of(out)["perms"] == ["⟨1,2⟩←", "⟨2,1⟩←"]

    def test_env_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("PERMSUM_MAX_N", "3")
        code, _, err = invoke(capsys, "enumerate", "--n", "4")
        assert code == 1
        assert "TooLarge" in err


class TestSteps:
    def test_successor(self, capsys):
        code, out, _ = invoke(capsys, "successor", "--perm", "3,2,1")
        assert code == 0
        assert payload_of(out)["perm"] == [2, 3, 1]

    def test_predecessor(self, capsys):
        code, out, _ = invoke(capsys, "predecessor", "--perm", "2,3,1")
        assert code == 0
        assert payload_of(out)["perm"] == [3, 2, 1]

    def test_reversed_io(self, capsys):
        code, out, _ = invoke(
            capsys, "successor", "--perm", "⟨5,2,4,1,3⟩←", "--reversed"
        )
        assert code == 0
        payload = payload_of(out)
        assert payload["display"] == "⟨5,2,4,3,1⟩←"
        assert payload["perm"] == [1, 3, 4, 2, 5]

    def test_no_successor_error(self, capsys):
        code, _, err = invoke(capsys, "successor", "--perm", "1,2,3")
        assert code == 1
        assert "NoSuccessor" in err


class TestTable:
    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "table", "--g", "1,2")
        assert code == 0
        payload = payload_of(out)
        assert payload["entries"] == [
            {"sum": 4, "perms": [[2, 1]]},
            {"sum": 5, "perms": [[1, 2]]},
        ]

    def test_csv_round_trip(self, capsys):
        code, out, _ = invoke(capsys, "table", "--g", "1,2,5,15", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "sum,perm"
        parsed = {}
        for line in lines[1:]:
            parts = [int(v) for v in line.split(",")]
            parsed.setdefault(parts[0], []).append(tuple(parts[1:]))
        assert parsed == oracle_table((1, 2, 5, 15), (1, 2, 3, 4))

    def test_csv_golden_small(self, capsys):
        code, out, _ = invoke(capsys, "table", "--g", "1,2,4", "--format", "csv")
        assert code == 0
        assert out == (
            "sum,perm\n"
            "11,3,2,1\n"
            "12,2,3,1\n"
            "13,3,1,2\n"
            "15,1,3,2\n"
            "16,2,1,3\n"
            "17,1,2,3\n"
        )


class TestTrick:
    def test_full_flow(self, capsys, tmp_path):
        code, out, _ = invoke(capsys, "trick", "plan", "--n", "3", "--pool", "18",
                              "--g", "1,2,4")
        assert code == 0
        assert payload_of(out) == {
            "n": 3, "x": [1, 2, 3], "g": [1, 2, 4], "pool": 18,
            "labels": ["a", "b", "c"],
        }
        plan_file = tmp_path / "plan.json"
        plan_file.write_text(out, encoding="utf-8")  # wrapper form on purpose

        code, out, _ = invoke(capsys, "trick", "encode", "--plan", str(plan_file),
                              "--perm", "3,2,1")
        assert code == 0
        assert payload_of(out) == {"remaining": 7, "sum": 11}

        code, out, _ = invoke(capsys, "trick", "decode", "--plan", str(plan_file),
                              "--remaining", "7")
        assert code == 0
        payload = payload_of(out)
        assert payload["perm"] == [3, 2, 1]
        assert payload["readable"][0] == {"object": "a", "person": 3, "nuts": 3}

    def test_decode_miscount(self, capsys, tmp_path):
        code, out, _ = invoke(capsys, "trick", "plan", "--n", "3", "--g", "1,2,4",
                              "--pool", "18")
        plan_file = tmp_path / "plan.json"
        plan_file.write_text(out, encoding="utf-8")
        code, _, err = invoke(capsys, "trick", "decode", "--plan", str(plan_file),
                              "--remaining", "0")
        assert code == 1
        assert "UnknownSum" in err

    def test_missing_plan_file(self, capsys):
        code, _, err = invoke(capsys, "trick", "decode", "--plan", "/nonexistent",
                              "--remaining", "1")
        assert code == 1
        assert "FileNotFoundError" in err


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("construct", "--n", "5", "--method", "greedy", "--trace"),
        ("verify", "--g", "1,3,9,27"),
        ("table", "--g", "1,2,4", "--format", "csv"),
        ("enumerate", "--n", "4"),
        ("search", "--n", "4"),
    ])
    def test_byte_identical_reruns(self, capsys, argv):
        _, first, _ = invoke(capsys, *argv)
        _, second, _ = invoke(capsys, *argv)
        assert first == second and first

    def test_usage_error_exit_code(self, capsys):
        code, _, _ = invoke(capsys, "construct", "--n", "4")
        assert code == 2
