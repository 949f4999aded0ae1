"""Tests for the command-line interface.

This module drives the Typer app through CliRunner in an isolated directory.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING

from badseq_cli import __version__
from badseq_cli.cli import EXIT_BUDGET, EXIT_INTERNAL, EXIT_USAGE, EXIT_VIOLATION, app
from badseq_cli.models import InstanceOutcome, OutcomeStatus, VerifyReport

if TYPE_CHECKING:
    from pytest_mock import MockerFixture
    from typer.testing import CliRunner


def _json(output: str) -> dict:
    return json.loads(output)


class TestVersion:
    """Tests for the version option."""

    def test_version(self, runner: CliRunner) -> None:
        """Test that --version prints the package version."""
        result = runner.invoke(app, ["--version"])

        assert result.exit_code == 0
        assert f"badseq version {__version__}" in result.stdout


class TestLenCommand:
    """Tests for the len command."""

    def test_length_json(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that three letters give a bad sequence of length three."""
        result = runner.invoke(app, ["len", "G3", "--n", "1", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["op"] == "len"
        assert data["input"] == {"expr": "G3", "n": 1}
        assert data["result"]["length"] == 3
        assert data["config"]["control"] == "succ"

    def test_witness(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that the witness has the reported length."""
        result = runner.invoke(app, ["len", "G3", "--witness", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert len(data["result"]["witness"].split(";")) == 3

    def test_check_valid(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test a valid controlled bad sequence."""
        result = runner.invoke(app, ["len", "G3", "--check", "a1; a2; a3", "--json"])

        assert result.exit_code == 0
        assert _json(result.stdout)["result"]["valid"] is True

    def test_check_invalid(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that a repeated letter is not bad."""
        result = runner.invoke(app, ["len", "G3", "--check", "a1; a1", "--json"])

        assert result.exit_code == EXIT_VIOLATION
        assert _json(result.stdout)["result"]["bad"] is False

    def test_parse_error(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that malformed expressions are usage errors."""
        result = runner.invoke(app, ["len", "G2 + X"])

        assert result.exit_code == EXIT_USAGE
        assert "Error:" in result.stdout

    def test_budget_exceeded(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that hitting the node ceiling has its own exit status."""
        result = runner.invoke(app, ["len", "G2^*", "--n", "4", "--budget-nodes", "10"])

        assert result.exit_code == EXIT_BUDGET
        assert "Budget exceeded:" in result.stdout
        assert "max_nodes=10" in result.stdout

    def test_unexpected_error(
        self, runner: CliRunner, isolated_cwd: Path, mocker: MockerFixture
    ) -> None:
        """Test that internal errors exit apart from invalid sequences."""
        mocker.patch("badseq_cli.cli.max_bad_length", side_effect=RuntimeError("boom"))

        result = runner.invoke(app, ["len", "G3"])

        assert result.exit_code == EXIT_INTERNAL
        assert result.exit_code != EXIT_VIOLATION
        assert "boom" in result.stdout


class TestOrdinalCommands:
    """Tests for the ordinal commands."""

    def test_cnf(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that absorbed terms are normalized."""
        result = runner.invoke(app, ["cnf", "1+w", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["was_cnf"] is False
        assert data["result"]["cnf"] == "w"

    def test_cnf_with(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test comparison and natural sum."""
        result = runner.invoke(app, ["cnf", "1", "--with", "w", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["compare"] == -1
        assert data["result"]["natural_sum"] == "w + 1"

    def test_deriv(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that ω has the single derivative n - 1."""
        result = runner.invoke(app, ["deriv", "w", "--n", "4", "--json"])

        assert result.exit_code == 0
        assert _json(result.stdout)["result"]["derivatives"] == ["3"]

    def test_mbound(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test M_ω(n) = n."""
        result = runner.invoke(app, ["mbound", "w", "--n", "5", "--json"])

        assert result.exit_code == 0
        assert _json(result.stdout)["result"]["value"] == 5

    def test_otype(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test the order type of Γ_2*."""
        result = runner.invoke(app, ["otype", "G2^*", "--json"])

        assert result.exit_code == 0
        assert _json(result.stdout)["result"]["otype"] == "w^w"


class TestHierarchyCommands:
    """Tests for hier, hbound and classify."""

    def test_fast_growing(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test F_3(2) with ω_x = x."""
        result = runner.invoke(
            app, ["hier", "fast", "--alpha", "3", "--x", "2", "--omega", "x", "--json"]
        )

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["value"] == 2048
        assert data["config"]["omega"] == "x"

    def test_step_ceiling(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that huge values are refused rather than computed."""
        result = runner.invoke(
            app, ["hier", "fast", "--alpha", "w", "--x", "5", "--budget-steps", "50"]
        )

        assert result.exit_code == EXIT_BUDGET

    def test_hbound(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test the symbolic bound for ω."""
        result = runner.invoke(app, ["hbound", "w", "--n", "2", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["argument"] == 2
        assert data["result"]["numeric"] == 3

    def test_classify_beta(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that ω ≤ β picks F_β."""
        result = runner.invoke(app, ["classify", "--beta", "w", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["branch"] == "beta-dominates"
        assert data["result"]["index"] == "w"

    def test_classify_needs_one_source(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that --beta and --expr are mutually exclusive."""
        result = runner.invoke(app, ["classify", "--beta", "w", "--expr", "G2"])

        assert result.exit_code == EXIT_USAGE


class TestPresetCommands:
    """Tests for the lcs and pep presets."""

    def test_lcs(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test the order type of a one-channel system."""
        result = runner.invoke(app, ["lcs", "3", "2", "1", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["input"]["q"] == 3
        assert data["result"]["order_type"] == "w^w*3"

    def test_lcs_invalid_shape(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that empty shapes are rejected."""
        result = runner.invoke(app, ["lcs", "0", "2", "1"])

        assert result.exit_code == EXIT_USAGE

    def test_pep(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test H = 2·L over one letter."""
        result = runner.invoke(app, ["pep", "1", "--size", "1", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["numeric"] == {"length": 1, "H": 2}
        assert data["result"]["bound"] == "H = 2*L_{G1^* * G1}(1)"

    def test_pep_default_size_is_labelled(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that the literal size 0 is reported as the trivial value."""
        result = runner.invoke(app, ["pep", "2", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["numeric"] == {"length": 0, "H": 0}
        assert "empty sequence" in data["result"]["note"]


class TestVerifyCommand:
    """Tests for the verify command."""

    def _report(self, status: OutcomeStatus) -> VerifyReport:
        report = VerifyReport(suite="lean", seed=3)
        report.record(
            InstanceOutcome(suite="lean", index=0, description="law", status=status, detail="d")
        )
        return report

    def test_passing_run(
        self, runner: CliRunner, isolated_cwd: Path, mocker: MockerFixture
    ) -> None:
        """Test that a clean run exits 0."""
        run = mocker.patch(
            "badseq_cli.cli.VerifyService.run", return_value=self._report(OutcomeStatus.PASSED)
        )

        result = runner.invoke(app, ["verify", "lean", "--seed", "3", "--json"])

        assert result.exit_code == 0
        data = _json(result.stdout)
        assert data["result"]["ok"] is True
        assert data["result"]["passed"] == 1
        run.assert_called_once()

    def test_failing_run(
        self, runner: CliRunner, isolated_cwd: Path, mocker: MockerFixture
    ) -> None:
        """Test that a violated property exits 1."""
        mocker.patch(
            "badseq_cli.cli.VerifyService.run", return_value=self._report(OutcomeStatus.FAILED)
        )

        result = runner.invoke(app, ["verify", "lean"])

        assert result.exit_code == EXIT_VIOLATION
        assert "law" in result.stdout


class TestConfigCommands:
    """Tests for the config sub-commands."""

    def test_init_creates_file(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test creating the default config file."""
        result = runner.invoke(app, ["config", "init"])

        assert result.exit_code == 0
        assert "Created config file:" in result.stdout
        assert (isolated_cwd / "badseq.toml").exists()

    def test_init_refuses_overwrite(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that an existing file needs --force."""
        (isolated_cwd / "badseq.toml").write_text("")

        result = runner.invoke(app, ["config", "init"])

        assert result.exit_code == 1
        assert "already exists" in result.stdout

    def test_show(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test the configuration table."""
        result = runner.invoke(app, ["config", "show"])

        assert result.exit_code == 0
        assert "Current Configuration" in result.stdout

    def test_path(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test printing the default path."""
        result = runner.invoke(app, ["config", "path"])

        assert result.exit_code == 0
        assert "Default config path:" in result.stdout

    def test_config_file_applies(self, runner: CliRunner, isolated_cwd: Path) -> None:
        """Test that badseq.toml settings reach commands."""
        (isolated_cwd / "badseq.toml").write_text('[hierarchy]\nomega = "x"\n')

        result = runner.invoke(app, ["hier", "fast", "--alpha", "3", "--x", "2", "--json"])

        assert result.exit_code == 0
        assert _json(result.stdout)["result"]["value"] == 2048
