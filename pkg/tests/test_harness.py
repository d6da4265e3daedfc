import numpy as np
import pytest

from sepkit.criteria import Verdict
from sepkit.errors import NoCrossingError, OutOfRangeError
from sepkit.harness import (
    FamilySpec,
    audit,
    family_state,
    render_audit,
    render_report,
    sweep,
    threshold_bisect,
)
from sepkit.states import PureState


class TestFamilies:
    def test_pure_schmidt_angle_is_pure(self):
        psi = family_state("pure_schmidt_angle", np.pi / 8)
        assert isinstance(psi, PureState)
        assert abs(psi.vec[0] - np.cos(np.pi / 8)) < 1e-12

    def test_bell_diagonal_midpoint_is_separable(self):
        from sepkit.criteria import ppt

        assert ppt(family_state("bell_diagonal", 0.5)).verdict == Verdict.SEPARABLE
        assert ppt(family_state("bell_diagonal", 0.9)).verdict == Verdict.ENTANGLED
        assert ppt(family_state("bell_diagonal", 0.1)).verdict == Verdict.ENTANGLED

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            family_state("werner", 1.5)
        with pytest.raises(OutOfRangeError):
            family_state("no_such_family", 0.5)


class TestSweep:
    def test_werner_ppt_verdicts(self):
        spec = FamilySpec("werner", values=(0.0, 0.5, 1.0))
        report = sweep(spec, criteria=["ppt"])
        verdicts = [r.verdict for r in report.rows]
        assert verdicts == [Verdict.SEPARABLE, Verdict.ENTANGLED, Verdict.ENTANGLED]

    def test_rho_p_ccnr_endpoint(self):
        report = sweep(FamilySpec("rho_p", values=(1.0,)), criteria=["ccnr"])
        (row,) = report.rows
        assert abs(row.statistic - 1.0) < 1e-9
        assert row.verdict == Verdict.INCONCLUSIVE

    def test_maximally_mixed_point_never_flagged(self):
        report = sweep(FamilySpec("werner", values=(0.0,)))
        assert all(r.verdict != Verdict.ENTANGLED for r in report.rows)

    def test_grid_threshold_estimate(self):
        spec = FamilySpec("werner", start=0.0, stop=1.0, steps=21)
        report = sweep(spec, criteria=["ppt"])
        assert abs(report.thresholds["ppt"] - 1 / 3) < 0.05

    def test_pure_family_runs_both_kinds(self):
        spec = FamilySpec("pure_schmidt_angle", values=(np.pi / 8,))
        report = sweep(spec, criteria=["schmidt_rank", "ppt", "concurrence_pure"])
        names = {r.criterion for r in report.rows}
        assert names == {"schmidt_rank", "ppt", "concurrence_pure"}
        assert all(r.verdict == Verdict.ENTANGLED for r in report.rows)

    def test_rejects_pure_criterion_on_mixed_family(self):
        with pytest.raises(OutOfRangeError):
            sweep(FamilySpec("werner", values=(0.5,)), criteria=["schmidt_rank"])

    def test_rejects_unknown_criterion(self):
        with pytest.raises(OutOfRangeError):
            sweep(FamilySpec("werner", values=(0.5,)), criteria=["pptt"])

    def test_rejects_bad_grid(self):
        with pytest.raises(OutOfRangeError):
            sweep(FamilySpec("werner", start=0.0, stop=2.0, steps=5), criteria=["ppt"])

    def test_rejects_unknown_family(self):
        with pytest.raises(OutOfRangeError):
            sweep(FamilySpec("isotropic", values=(0.5,)), criteria=["ppt"])

    def test_report_rendering(self):
        report = sweep(FamilySpec("werner", values=(0.0, 2 / 3)), criteria=["ppt"])
        text = render_report(report)
        lines = text.strip().split("\n")
        assert lines[0] == "family,parameter,criterion,statistic,threshold,verdict"
        assert lines[1] == "werner,0,ppt,0.25,0,Separable"
        assert lines[2] == "werner,0.666666666667,ppt,-0.25,0,Entangled"

    def test_reports_bit_identical(self):
        spec = FamilySpec("werner", start=0.0, stop=1.0, steps=7)
        a = render_report(sweep(spec, seed=5))
        b = render_report(sweep(spec, seed=5))
        assert a == b

    def test_schmidt_angle_statistics_are_monotone(self):
        spec = FamilySpec("pure_schmidt_angle", start=0.0, stop=np.pi / 4, steps=12)
        report = sweep(spec, criteria=["entanglement_entropy", "concurrence_pure"])
        for name in ("entanglement_entropy", "concurrence_pure"):
            stats = [r.statistic for r in report.rows if r.criterion == name]
            assert all(b >= a - 1e-12 for a, b in zip(stats, stats[1:]))

    def test_no_threshold_estimate_with_two_crossings(self):
        # entangled at both ends, separable in the middle
        spec = FamilySpec("bell_diagonal", start=0.0, stop=1.0, steps=21)
        report = sweep(spec, criteria=["ppt"])
        assert "ppt" not in report.thresholds


class TestThresholdBisect:
    def test_werner_ppt(self):
        p = threshold_bisect("werner", "ppt", tol_p=1e-6)
        assert abs(p - 1 / 3) < 1e-6

    def test_werner_majorization(self):
        p = threshold_bisect("werner", "majorization", tol_p=1e-6)
        assert abs(p - 1 / 3) < 1e-6

    def test_werner_chsh(self):
        p = threshold_bisect("werner", "chsh_optimize", tol_p=1e-6, seed=2)
        assert abs(p - 1 / np.sqrt(2)) < 1e-3

    def test_no_crossing(self):
        with pytest.raises(NoCrossingError):
            threshold_bisect("werner", "ppt", lo=0.0, hi=0.2)


class TestAudit:
    def test_separable_soundness(self):
        summary = audit(150, seed=9, generator="separable")
        assert "ppt" in summary.counts
        for counts in summary.counts.values():
            assert counts.false_positive == 0
            assert counts.true_positive == 0

    def test_mixed_oracle_agreement(self):
        summary = audit(300, seed=10, generator="mixed")
        assert summary.counts["concurrence_mixed"].agreement == 1.0
        assert summary.counts["reduction"].agreement == 1.0
        # necessary-only tests must never beat the oracle
        for counts in summary.counts.values():
            assert counts.false_positive == 0

    def test_pure_oracle_agreement(self):
        summary = audit(200, seed=11, generator="pure")
        assert summary.counts["schmidt_rank"].agreement == 1.0
        assert summary.counts["concurrence_pure"].agreement == 1.0
        assert summary.counts["entanglement_entropy"].agreement == 1.0

    def test_deterministic(self):
        a = render_audit(audit(50, seed=3, generator="mixed"))
        b = render_audit(audit(50, seed=3, generator="mixed"))
        assert a == b

    def test_refuses_undecidable_dims(self):
        from sepkit.linalg import BipartiteDims

        with pytest.raises(OutOfRangeError):
            audit(10, seed=0, dims=BipartiteDims(3, 3))

    def test_rendering_header(self):
        text = render_audit(audit(20, seed=1))
        header = text.split("\n", 1)[0]
        assert header == "criterion,true_positive,false_positive,true_negative,false_negative,agreement"
