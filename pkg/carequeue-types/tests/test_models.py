"""Unit tests for the carequeue domain models."""
import pytest
from pydantic import ValidationError

from carequeue_types import (
    FacilityLevel,
    FacilityParameters,
    InterventionSpec,
    PatientClass,
    Scenario,
    SolverSettings,
    StartMode,
    WaitMeasure,
)


def _scenario(**overrides) -> Scenario:
    data = dict(
        levels=(
            FacilityLevel(
                id="primary", service_rate=10.0, multiplier=3.0, capacity=2.0
            ),
            FacilityLevel(id="tertiary", service_rate=12.0, servers=2, capacity=1.0),
        ),
        classes=(
            PatientClass(id="mild", arrival_rate=5.0, alpha=0.2, opt_out_utility=1.0),
        ),
        ref_utility=((0.3, 0.5),),
    )
    data.update(overrides)
    return Scenario(**data)


class TestFacilityLevel:
    """Tests for derived facility quantities."""

    def test_saturation_is_capacity_servers_rate(self):
        level = FacilityLevel(id="a", service_rate=4.0, servers=3, capacity=5.0)
        assert level.saturation == pytest.approx(60.0)

    def test_saturation_monotone_in_each_factor(self):
        base = FacilityLevel(id="a", service_rate=4.0, servers=2, capacity=5.0)
        for field, value in (("service_rate", 4.5), ("servers", 3), ("capacity", 6.0)):
            bigger = base.model_copy(update={field: value})
            assert bigger.saturation > base.saturation

    def test_zero_flow_wait_by_measure(self):
        queue = FacilityLevel(id="a", service_rate=10.0, multiplier=3.0, capacity=1.0)
        system = queue.model_copy(update={"wait_measure": WaitMeasure.SYSTEM})
        assert queue.zero_flow_wait == 0.0
        assert system.zero_flow_wait == pytest.approx(0.3)

    def test_frozen(self):
        level = FacilityLevel(id="a", service_rate=10.0, capacity=1.0)
        with pytest.raises(ValidationError):
            level.service_rate = 2.0


class TestScenario:
    """Tests for scenario helpers and fingerprinting."""

    def test_totals(self):
        scenario = _scenario()
        assert scenario.total_demand == 5.0
        assert scenario.total_saturation == pytest.approx(20.0 + 24.0)

    def test_indices(self):
        scenario = _scenario()
        assert scenario.level_index("tertiary") == 1
        assert scenario.class_index("mild") == 0
        with pytest.raises(KeyError):
            scenario.level_index("quaternary")

    def test_fingerprint_is_deterministic(self):
        assert _scenario().fingerprint() == _scenario().fingerprint()

    def test_fingerprint_changes_with_parameters(self):
        changed = _scenario(hours_per_year=2000.0)
        assert changed.fingerprint() != _scenario().fingerprint()

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValidationError):
            _scenario(extra_key=1)


class TestSolverSettings:
    def test_defaults(self):
        settings = SolverSettings()
        assert settings.grad_tol == 1e-10
        assert settings.max_iters == 200
        assert settings.initial_waits is StartMode.ZERO_FLOW

    def test_explicit_start_vector(self):
        settings = SolverSettings(initial_waits=(0.1, 0.2))
        assert settings.initial_waits == (0.1, 0.2)


class TestCaseStudyRecords:
    def test_reference_wait(self):
        primary = FacilityParameters(
            id="primary",
            skill_level="junior",
            equipment_status="obsolete",
            out_of_pocket_cost=120.0,
            travel_time_min=15.0,
            total_visit_time_hours=1.0,
            visit_time_other_than_waiting_min=34.0,
            service_rate=10.0,
            multiplier=3.0,
            facilities=100,
            doctors_per_facility=2.0,
            first_visit_fraction=0.5,
            zero_wait_utility={"mild": 0.207},
        )
        assert primary.reference_wait == pytest.approx(26.0 / 60.0)
        assert primary.nominal_capacity(2088.0) == pytest.approx(208800.0)

    def test_noop_intervention(self):
        assert InterventionSpec(name="baseline").is_noop
        assert not InterventionSpec(
            name="x", utility_deltas={"mild": {"primary": 0.1}}
        ).is_noop
