"""CLI smoke tests using typer's CliRunner."""

import json

from typer.testing import CliRunner

from realizer import config as config_module
from realizer.cli import app
from realizer.expr import parse_ratfunc

runner = CliRunner()


def _json(fixtures_dir, *args: str) -> tuple[int, dict]:
    """Invoke with --json on a fixture; return exit code and the parsed document."""
    *head, name = args
    result = runner.invoke(app, ["--json", *head, str(fixtures_dir / name)])
    return result.exit_code, json.loads(result.stdout)


class TestRealizeCommand:
    """Realizations from parametrizations."""

    def test_not_realizable(self, fixtures_dir):
        code, data = _json(fixtures_dir, "realize", "nonrealizable.txt")
        assert code == 2
        assert data["verdict"] == "not_realizable"
        z = parse_ratfunc(data["expressions"]["x'"])
        assert z == parse_ratfunc("(u*x*(u - x) + (2*u + x)*u')/(3*u)")

    def test_round_trip_from_realization(self, fixtures_dir):
        code, data = _json(fixtures_dir, "realize", "observable_cubic.txt")
        assert code == 0
        assert data["details"]["verified"] is True
        assert parse_ratfunc(data["expressions"]["x'"]) == parse_ratfunc("u*x")

    def test_human_output(self, fixtures_dir):
        result = runner.invoke(app, ["realize", str(fixtures_dir / "observable_cubic.txt")])
        assert result.exit_code == 0
        assert "x'" in result.output


class TestCheckCommand:
    """Order obstruction and degree conditions."""

    def test_order_obstruction(self, fixtures_dir):
        code, data = _json(fixtures_dir, "check", "not_realizable_order.txt")
        assert code == 2
        assert data["verdict"] == "not_realizable"
        assert data["details"]["clauses"][0]["clause"] == "ORDER_OBSTRUCTION"

    def test_shape_failure(self, fixtures_dir):
        code, data = _json(fixtures_dir, "check", "nonrealizable.txt")
        assert code == 0
        assert data["verdict"] == "fail"
        clauses = {row["clause"] for row in data["details"]["clauses"]}
        assert "U_PRIME_MIXING" in clauses

    def test_degrees(self, fixtures_dir):
        code, data = _json(fixtures_dir, "check", "--degrees", "improper.txt")
        assert code == 0
        assert data["details"]["observable"] is False

        code, data = _json(fixtures_dir, "check", "--degrees", "observable_cubic.txt")
        assert data["verdict"] == "pass"
        assert data["details"]["observable"] is True


class TestObservableCommand:
    """Observable realizations from the command line."""

    def test_improper(self, fixtures_dir):
        code, data = _json(fixtures_dir, "observable", "--no-verify", "improper.txt")
        assert code == 0
        assert data["details"]["tracing_index"] == 2
        assert data["details"]["changed"] is True
        assert parse_ratfunc(data["expressions"]["x'"]) == parse_ratfunc("-(1 + x)/u")
        assert parse_ratfunc(data["expressions"]["r"]) == parse_ratfunc("x^2 - 2*x")

    def test_equation_from_yaml_realization(self, fixtures_dir):
        code, data = _json(fixtures_dir, "observable", "observable_cubic.yaml")
        assert code == 0
        assert "F computed by implicitization" in data["notes"]
        assert data["details"]["changed"] is False
        assert data["details"]["verified"] is True

    def test_invalid_method(self, fixtures_dir):
        result = runner.invoke(
            app, ["observable", "--method", "guess", str(fixtures_dir / "improper.txt")]
        )
        assert result.exit_code == 1


class TestRealCommand:
    """Real realizations from the command line."""

    def test_no_real_realization(self, fixtures_dir):
        code, data = _json(fixtures_dir, "real", "complex_only.txt")
        assert code == 2
        assert data["verdict"] == "no_real_realization"
        assert data["expressions"]["V"] == "x^2 + z^2 + 1"
        assert data["details"]["factors"][0]["kind"] == "non-real"

    def test_twisted_line(self, fixtures_dir):
        code, data = _json(fixtures_dir, "real", "twisted_line.txt")
        assert code == 0
        assert data["verdict"] == "success"
        assert data["expressions"]["y"] == "x^2"
        assert data["expressions"]["s"] == "x - I"
        assert data["details"]["real"] is True
        assert data["details"]["verified"] is True

    def test_no_real_realization_text(self, fixtures_dir):
        result = runner.invoke(app, ["real", str(fixtures_dir / "complex_only.txt")])
        assert result.exit_code == 2
        lines = [line.strip() for line in result.output.splitlines()]
        assert "V = x^2 + z^2 + 1" in lines
        assert "Verdict: no_real_realization" in lines


class TestReproducibility:
    """Same seed, same bytes."""

    def _run(self, fixtures_dir, command: str, name: str) -> tuple[int, bytes]:
        result = runner.invoke(
            app, ["--json", command, "--seed", "7", str(fixtures_dir / name)]
        )
        return result.exit_code, result.stdout_bytes

    def test_observable_report_is_byte_identical(self, fixtures_dir):
        first = self._run(fixtures_dir, "observable", "improper.txt")
        assert first[0] == 0
        assert first == self._run(fixtures_dir, "observable", "improper.txt")

    def test_real_report_is_byte_identical(self, fixtures_dir):
        first = self._run(fixtures_dir, "real", "twisted_line.txt")
        assert first[0] == 0
        assert first == self._run(fixtures_dir, "real", "twisted_line.txt")


class TestOtherCommands:
    """param, implicitize and verify."""

    def test_param(self, fixtures_dir):
        code, data = _json(fixtures_dir, "param", "observable_cubic.txt")
        assert code == 0
        assert parse_ratfunc(data["expressions"]["P1"]) == parse_ratfunc(
            "3*u^2*x^3 + 2*u*x^2 + u'*x^3"
        )
        assert data["details"] == {"order": 1, "states": 1}

    def test_param_second_order(self, fixtures_dir):
        code, data = _json(fixtures_dir, "param", "second_order.txt")
        assert code == 0
        assert set(data["expressions"]) == {"P0", "P1", "P2"}

    def test_implicitize_yaml(self, fixtures_dir):
        code, data = _json(fixtures_dir, "implicitize", "observable_cubic.yaml")
        assert code == 0
        assert data["verdict"] == "success"
        assert "matches_equation" not in data["details"]

    def test_implicitize_matches_equation(self, fixtures_dir):
        code, data = _json(fixtures_dir, "implicitize", "nonrealizable.txt")
        assert code == 0
        assert data["verdict"] == "pass"
        assert data["details"]["matches_equation"] is True

    def test_verify(self, fixtures_dir):
        code, data = _json(fixtures_dir, "verify", "observable_cubic.txt")
        assert code == 0
        assert data["verdict"] == "pass"
        assert data["details"]["realization"] == "pass"

    def test_verify_nothing(self, fixtures_dir):
        result = runner.invoke(app, ["verify", str(fixtures_dir / "not_realizable_order.txt")])
        assert result.exit_code == 1
        assert "nothing to verify" in " ".join(result.output.split())

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["--json", "verify", str(tmp_path / "absent.txt")])
        assert result.exit_code == 1
        data = json.loads(result.stdout)
        assert data["status"] == "error"
        assert "file not found" in data["errors"][0]["message"]

    def test_error_suggestion(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("[equation]\nF = y' - q\n")
        result = runner.invoke(app, ["--json", "check", str(path)])
        assert result.exit_code == 1
        error = json.loads(result.stdout)["errors"][0]
        assert error["module"] == "expr"
        assert "unknown identifier 'q'" in error["message"]
        assert error["suggestion"].startswith("identifiers are u, y")


class TestConfigCommand:
    """Tests for the config command."""

    def test_config_show(self):
        result = runner.invoke(app, ["config", "show"])
        assert result.exit_code == 0
        assert "Realizer Configuration" in result.output
        assert "height_bound" in result.output

    def test_config_set_and_reset(self):
        result = runner.invoke(app, ["config", "set", "seed", "7"])
        assert result.exit_code == 0
        saved = json.loads(config_module.CONFIG_FILE.read_text())
        assert saved["seed"] == 7

        result = runner.invoke(app, ["config", "reset"])
        assert result.exit_code == 0
        assert not config_module.CONFIG_FILE.exists()

    def test_config_set_invalid_key(self):
        result = runner.invoke(app, ["config", "set", "invalid.key", "value"])
        assert result.exit_code == 1
        assert "Unknown key" in result.output

    def test_config_set_invalid_value(self):
        result = runner.invoke(app, ["config", "set", "height_bound", "abc"])
        assert result.exit_code == 1
        assert "Invalid value" in result.output

        result = runner.invoke(app, ["config", "set", "reparam_method", "guess"])
        assert result.exit_code == 1

    def test_config_set_missing_args(self):
        result = runner.invoke(app, ["config", "set"])
        assert result.exit_code == 1

    def test_config_unknown_action(self):
        result = runner.invoke(app, ["config", "unknown_action"])
        assert result.exit_code == 1
        assert "Unknown action" in result.output


class TestVersionFlag:
    """Test the --version flag."""

    def test_version_output(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "realizer 0.1.0" in result.output
        assert "sympy" in result.output
