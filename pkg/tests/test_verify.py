import pytest

from mixent.cli import main
from mixent.linalg import DENSE_CAP_ENV, dense_cap
from mixent.verify import Check, VerifyReport, render_report, run_verify


class TestVerifySuite:
    def test_all_checks_pass(self):
        report = run_verify()
        assert report.passed
        assert len(report.checks) >= 10
        for check in report.checks:
            assert check.residual <= check.tolerance, check.name

    def test_render_lists_every_check(self):
        report = run_verify()
        text = render_report(report)
        assert text.count("[PASS]") == len(report.checks)
        assert "OK" in text.splitlines()[-1]

    def test_render_failure(self):
        report = VerifyReport((Check("probe", residual=1.0, tolerance=1e-9),))
        text = render_report(report)
        assert "[FAIL] probe" in text
        assert not report.passed

    def test_cli_exit_three_on_failure(self, monkeypatch, capsys):
        import mixent.verify as verify_mod

        broken = VerifyReport((Check("probe", residual=1.0, tolerance=1e-9),))
        monkeypatch.setattr(verify_mod, "run_verify", lambda: broken)
        assert main(["verify"]) == 3


class TestDenseCapOverride:
    def test_env_var_overrides_default(self, monkeypatch):
        monkeypatch.setenv(DENSE_CAP_ENV, "64")
        assert dense_cap() == 64

    def test_explicit_beats_env(self, monkeypatch):
        monkeypatch.setenv(DENSE_CAP_ENV, "64")
        assert dense_cap(2**10) == 2**10

    def test_env_capacity_error(self, monkeypatch, rho_qubit, sigma_qubit):
        from mixent import CapacityError, dense_relative_entropy, uniform

        monkeypatch.setenv(DENSE_CAP_ENV, "8")
        with pytest.raises(CapacityError):
            dense_relative_entropy(rho_qubit, sigma_qubit, uniform(), 5)
