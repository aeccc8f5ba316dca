"""Tests for the `wcm help` subcommand."""


class TestHelpCommand:
    """Tests for help subcommand functionality."""

    def test_help_no_args_lists_commands(self, cli_runner):
        """Running `wcm help` with no args lists every command."""
        exit_code, stdout, stderr = cli_runner(["help"])

        assert exit_code == 0
        assert "Available commands" in stdout
        for name in ("solve", "gen", "bench", "config"):
            assert name in stdout
        assert "formats" in stdout

    def test_help_valid_command_shows_command_help(self, cli_runner):
        """Running `wcm help solve` shows the solve options."""
        exit_code, stdout, stderr = cli_runner(["help", "solve"])

        assert exit_code == 0
        assert "--formulation" in stdout
        assert "--time-limit" in stdout

    def test_help_topic(self, cli_runner):
        """Running `wcm help formats` describes the input formats."""
        exit_code, stdout, stderr = cli_runner(["help", "formats"])

        assert exit_code == 0
        assert "wcm <n> <m>" in stdout
        assert "gmwcs" in stdout

    def test_help_invalid_command_returns_error(self, cli_runner):
        """Running `wcm help bogus` returns error and shows available commands."""
        exit_code, stdout, stderr = cli_runner(["help", "nonexistent_command"])

        assert exit_code == 1
        assert "Unknown command" in stdout
        assert "Available commands" in stdout
        assert "bench" in stdout

    def test_no_command_prints_usage(self, cli_runner):
        """Running `wcm` alone prints help and exits 1."""
        exit_code, stdout, stderr = cli_runner([])

        assert exit_code == 1
        assert "usage: wcm" in stdout
