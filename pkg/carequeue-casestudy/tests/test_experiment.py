"""Tests for perturbation sampling, the paired harness and the significance tests."""
import numpy as np
import pytest
from scipy.stats import binom

from carequeue_types import SignVerdict, SolverSettings, StudyRecord
from carequeue_casestudy import BASELINE, resolve_intervention
from carequeue_casestudy.experiment import (
    build_report,
    identity_sample,
    load_study,
    nonzero_test,
    outcome_variables,
    perturb_scenario,
    render_comparison,
    render_csv,
    render_table,
    rows_from_outcome,
    run_paired_study,
    sample_perturbations,
    save_study,
    sign_test,
    sign_thresholds,
    significance,
    unperturbed_outcome,
)
from tests.logger import TestLogger

VARIABLES = [
    "P(OO|M)",
    "P(1|M)",
    "P(2|M)",
    "P(3|M)",
    "P(OO|S)",
    "P(1|S)",
    "P(2|S)",
    "P(3|S)",
    "W(1)",
    "W(2)",
    "W(3)",
]


def _differences(positive, negative, zero=0):
    return [0.1] * positive + [-0.1] * negative + [0.0] * zero


@pytest.fixture(scope="module")
def baseline_study(baseline):
    samples = sample_perturbations(50, master_seed=7)
    return samples, run_paired_study(baseline, BASELINE, samples, workers=1)


class TestSampling:
    """Tests for perturbation sampling."""

    def test_reproducible(self):
        assert sample_perturbations(20, 42) == sample_perturbations(20, 42)

    def test_seed_sensitivity(self):
        first, second = sample_perturbations(5, 1), sample_perturbations(5, 2)
        assert first[0].multiplier_factors != second[0].multiplier_factors

    def test_bounds_and_means(self):
        samples = sample_perturbations(1000, 2024)
        factors = np.array(
            [s.multiplier_factors + s.supply_factors for s in samples]
        )
        assert factors.shape == (1000, 6)
        assert factors.min() >= 0.9
        assert factors.max() <= 1.1
        assert np.abs(factors.mean(axis=0) - 1.0).max() < 0.006

    def test_single(self):
        (sample,) = sample_perturbations(1, 3)
        assert len(sample.multiplier_factors) == 3
        assert len(sample.supply_factors) == 3
        assert sample.index == 0

    def test_zero_samples(self):
        with pytest.raises(ValueError):
            sample_perturbations(0, 1)

    def test_perturb_scenario(self, baseline):
        sample = sample_perturbations(1, 5)[0]
        perturbed = perturb_scenario(baseline, sample)
        for level, before, m, c in zip(
            perturbed.levels,
            baseline.levels,
            sample.multiplier_factors,
            sample.supply_factors,
        ):
            assert level.multiplier == before.multiplier * m
            assert level.capacity == before.capacity * c
        assert perturbed.classes == baseline.classes


class TestSignTest:
    """Tests for the sign test."""

    @pytest.mark.parametrize(
        "positive, verdict",
        [
            (600, SignVerdict.STRONG_POSITIVE),
            (537, SignVerdict.STRONG_POSITIVE),
            (530, SignVerdict.POSITIVE),
            (526, SignVerdict.POSITIVE),
            (500, SignVerdict.NONE),
            (474, SignVerdict.NONE),
            (473, SignVerdict.NEGATIVE),
            (462, SignVerdict.STRONG_NEGATIVE),
        ],
    )
    def test_thousand_instances(self, positive, verdict):
        assert sign_test(_differences(positive, 1000 - positive)) == verdict

    def test_binomial_tails(self):
        assert binom.sf(526, 1000, 0.5) < 0.05
        assert binom.sf(537, 1000, 0.5) < 0.01

    def test_published_thresholds(self):
        assert sign_thresholds(1000) == (526, 537, 473, 462)

    def test_exact_thresholds(self):
        plus, plus_plus, minus, minus_minus = sign_thresholds(100)
        assert binom.sf(plus - 1, 100, 0.5) < 0.05 <= binom.sf(plus - 2, 100, 0.5)
        assert binom.sf(plus_plus - 1, 100, 0.5) < 0.01
        assert binom.sf(plus_plus - 2, 100, 0.5) >= 0.01
        assert (minus, minus_minus) == (100 - plus, 100 - plus_plus)

    def test_ties_count_neither_way(self):
        assert sign_test(_differences(50, 10, zero=40)) == SignVerdict.NONE

    def test_empty(self):
        with pytest.raises(ValueError):
            sign_test([])


class TestNonzeroTest:
    """Tests for the 95% band test."""

    def test_examples(self):
        assert nonzero_test(_differences(990, 10))
        assert not nonzero_test(_differences(974, 26))
        assert nonzero_test(_differences(1000, 0))

    def test_proportional_limit(self):
        assert nonzero_test(_differences(195, 5))
        assert not nonzero_test(_differences(194, 6))


class TestPairedStudy:
    """Tests for the paired harness."""

    def test_variables(self, baseline):
        assert outcome_variables(baseline) == VARIABLES

    def test_identity_sample_matches_unperturbed(self, baseline):
        upskill = resolve_intervention("Upskill")
        (outcome,) = run_paired_study(baseline, upskill, [identity_sample(3)])
        assert outcome.values == unperturbed_outcome(baseline, upskill).values
        assert outcome.fingerprint == baseline.fingerprint()

    def test_baseline_all_feasible(self, baseline_study):
        _, outcomes = baseline_study
        assert all(o.feasible_mnl and o.feasible_eq for o in outcomes)
        assert all(o.failure is None for o in outcomes)

    def test_pairing(self, baseline, baseline_study):
        samples, outcomes = baseline_study
        for sample, outcome in zip(samples, outcomes):
            assert outcome.index == sample.index
            assert outcome.seed == sample.seed
            perturbed = perturb_scenario(baseline, sample)
            assert outcome.fingerprint == perturbed.fingerprint()
        assert len({o.fingerprint for o in outcomes}) == len(outcomes)

    def test_baseline_nonzero_column_empty(self, baseline_study):
        _, outcomes = baseline_study
        report = significance(outcomes, "Baseline", VARIABLES)
        assert report.feasible_count == 50
        assert not any(entry.nonzero_flag for entry in report.variables)

    def test_differences(self, baseline_study):
        _, outcomes = baseline_study
        for outcome in outcomes:
            for value in outcome.values:
                assert value.difference == pytest.approx(
                    value.equilibrium_value - value.mnl_value
                )

    def test_health_promotion_feasibility(self, baseline):
        samples = sample_perturbations(200, master_seed=11)
        outcomes = run_paired_study(
            baseline, resolve_intervention("HealthPromotion"), samples
        )
        report = significance(outcomes, "HealthPromotion", VARIABLES)
        assert 85 <= report.feasible_mnl <= 137
        assert report.feasible_eq == 200
        assert report.feasible_count == report.feasible_mnl
        p_opt_out = report.for_variable("P(OO|M)")
        assert p_opt_out.sign_verdict is SignVerdict.STRONG_POSITIVE
        assert p_opt_out.nonzero_flag

    def test_failures_recorded(self, baseline):
        samples = sample_perturbations(3, master_seed=1)
        cfg = SolverSettings(max_iters=1)
        outcomes = run_paired_study(baseline, BASELINE, samples, cfg=cfg, run_id="r1")
        assert all(o.failure and not o.feasible_eq for o in outcomes)
        report = significance(outcomes, "Baseline", VARIABLES)
        assert report.failure_count == 3
        infeasible_eq = sum(1 for o in outcomes if not o.feasible_eq and not o.failure)
        assert report.feasible_eq + infeasible_eq + report.failure_count == 3
        warnings = [e for e in TestLogger.events if e[0] == "WARNING"]
        assert len(warnings) == 3
        assert all(run_id == "r1" for _, run_id, _ in TestLogger.events)

    def test_run_events(self, baseline):
        samples = sample_perturbations(2, master_seed=5)
        run_paired_study(baseline, BASELINE, samples, run_id="r2")
        levels = [level for level, _, _ in TestLogger.events]
        assert levels == ["PENDING", "RUNNING", "SUCCESS"]
        assert TestLogger.events[1][2]["mode"] == "serial"
        assert TestLogger.events[-1][2]["failures"] == 0

    def test_dropped_instances_end_completed(self, baseline):
        samples = sample_perturbations(2, master_seed=5)
        cfg = SolverSettings(max_iters=1)
        run_paired_study(baseline, BASELINE, samples, cfg=cfg, run_id="r3")
        levels = [level for level, _, _ in TestLogger.events]
        assert levels == ["PENDING", "RUNNING", "WARNING", "WARNING", "COMPLETED"]

    def test_workers_do_not_change_results(self, baseline):
        samples = sample_perturbations(6, master_seed=3)
        upgrade = resolve_intervention("Upgrade")
        serial = run_paired_study(baseline, upgrade, samples, workers=1)
        parallel = run_paired_study(baseline, upgrade, samples, workers=2)
        assert serial == parallel


class TestReport:
    """Tests for report rows and their rendering."""

    def test_rows(self, baseline, baseline_study):
        _, outcomes = baseline_study
        tests = significance(outcomes, "Baseline", VARIABLES)
        rows = build_report(outcomes, tests, unperturbed_outcome(baseline, BASELINE))
        assert [row.variable for row in rows] == VARIABLES
        assert rows[0].mnl == pytest.approx(0.7757, abs=5e-5)
        assert rows[0].mean_mnl == pytest.approx(rows[0].mnl)
        assert rows[-1].equilibrium == pytest.approx(3.55, abs=1e-6)
        assert all(row.feasible_mnl == 50 for row in rows)

    def test_empty_study(self):
        tests = significance([], "Baseline", VARIABLES)
        assert build_report([], tests) == []
        assert tests.instances == 0

    def test_deterministic_csv(self, baseline):
        def render():
            samples = sample_perturbations(10, master_seed=99)
            spec = resolve_intervention("Upskill")
            outcomes = run_paired_study(baseline, spec, samples)
            tests = significance(outcomes, spec.name, VARIABLES)
            unperturbed = unperturbed_outcome(baseline, spec)
            return render_csv(build_report(outcomes, tests, unperturbed))

        first = render()
        assert first == render()
        assert first.splitlines()[0].startswith("variable,mnl,equilibrium")
        assert len(first.splitlines()) == 12

    def test_table_precision(self, baseline, baseline_study):
        _, outcomes = baseline_study
        tests = significance(outcomes, "Baseline", VARIABLES)
        rows = build_report(outcomes, tests, unperturbed_outcome(baseline, BASELINE))
        lines = render_table(rows, title="Baseline").splitlines()
        assert lines[0] == "Baseline"
        assert lines[1].split()[:3] == ["Variable", "MNL", "1-4"]
        assert lines[2].split()[1] == "0.7757"
        assert lines[-1].split()[1] == "3.55"

    def test_study_round_trip(self, baseline, baseline_study, tmp_path):
        _, outcomes = baseline_study
        record = StudyRecord(
            intervention=BASELINE,
            master_seed=7,
            variables=tuple(VARIABLES),
            unperturbed=unperturbed_outcome(baseline, BASELINE),
            outcomes=tuple(outcomes),
        )
        path = save_study(record, tmp_path / "outcomes.json")
        assert load_study(path) == record

    def test_comparison(self, baseline):
        spec = resolve_intervention("HealthPromotion")
        rows = rows_from_outcome(unperturbed_outcome(baseline, spec))
        assert [row.variable for row in rows] == VARIABLES
        assert all(row.feasible_eq == 1 for row in rows)
        lines = render_comparison(rows, title=spec.name).splitlines()
        assert lines[1].split() == ["Variable", "MNL", "1-4", "Difference"]
        assert lines[-1].split() == ["W(3)", "6.95", "4.69", "-2.26"]


def _verbatim_verdict(positive: int) -> SignVerdict:
    if positive >= 537:
        return SignVerdict.STRONG_POSITIVE
    if positive >= 526:
        return SignVerdict.POSITIVE
    if positive <= 462:
        return SignVerdict.STRONG_NEGATIVE
    if positive <= 473:
        return SignVerdict.NEGATIVE
    return SignVerdict.NONE


@pytest.mark.slow
class TestThousandInstanceStudy:
    """Paired studies at the published study size, seed 42."""

    def test_baseline(self, baseline):
        samples = sample_perturbations(1000, master_seed=42)
        outcomes = run_paired_study(baseline, BASELINE, samples)
        report = significance(outcomes, "Baseline", VARIABLES)
        assert report.instances == 1000
        assert report.feasible_count == report.feasible_mnl == report.feasible_eq
        assert report.feasible_count == 1000
        assert report.failure_count == 0
        assert [entry.variable for entry in report.variables] == VARIABLES
        for entry in report.variables:
            assert entry.positive_count + entry.negative_count <= 1000
            assert entry.sign_verdict is _verbatim_verdict(entry.positive_count)
            assert not entry.nonzero_flag
            assert min(entry.positive_count, entry.negative_count) > 25

    def test_health_promotion(self, baseline):
        samples = sample_perturbations(1000, master_seed=42)
        outcomes = run_paired_study(
            baseline, resolve_intervention("HealthPromotion"), samples
        )
        report = significance(outcomes, "HealthPromotion", VARIABLES)
        assert report.instances == 1000
        assert report.failure_count == 0
        assert report.feasible_eq == 1000
        assert 490 <= report.feasible_mnl <= 610
        assert report.feasible_count == report.feasible_mnl
        p_opt_out = report.for_variable("P(OO|M)")
        assert p_opt_out.sign_verdict is SignVerdict.STRONG_POSITIVE
        assert p_opt_out.nonzero_flag
