"""Unit tests for the delay functions."""
import math

import numpy as np
import pytest
from scipy.integrate import quad

from carequeue_types import DelayKind, DelayModel, WaitMeasure
from carequeue_core.core.exceptions import SaturationError
from carequeue_core.core.registry import DelayRegistry
from carequeue_core.queueing import DelayFunction, MM1Delay, MMsDelay, erlang_c_wait
from carequeue_core.queueing.delay import h_integral, inverse_wait, wait


def mm1(mu: float = 10.0, m: float = 1.0, capacity: float = 1.0, **kw) -> DelayModel:
    return DelayModel(service_rate=mu, multiplier=m, capacity=capacity, **kw)


def mms(servers: int, mu: float = 10.0, m: float = 1.0, **kw) -> DelayModel:
    return DelayModel(
        kind=DelayKind.MMS,
        service_rate=mu,
        servers=servers,
        multiplier=m,
        capacity=1.0,
        **kw,
    )


class TestWait:
    """Tests for the flow to wait mapping."""

    def test_mm1_example(self):
        assert wait(mm1(), 5.0) == pytest.approx(0.1, rel=1e-12)

    def test_tertiary_reference_wait(self):
        assert wait(mm1(mu=12.0, m=7.0), 10.306) == pytest.approx(3.55, abs=0.01)

    def test_capacity_spreads_flow(self):
        spread = mm1(capacity=2088.0)
        assert wait(spread, 5.0 * 2088.0) == pytest.approx(0.1, rel=1e-12)

    def test_mms_single_server_reduces_to_mm1(self, rng):
        for flow in rng.uniform(0.0, 9.99, size=50):
            assert wait(mms(1), flow) == pytest.approx(wait(mm1(), flow), rel=1e-12)

    def test_erlang_c_single_server(self):
        for z in (0.1, 0.5, 0.9):
            assert erlang_c_wait(z, 1) == pytest.approx(z / (1 - z), rel=1e-12)

    def test_mms_matches_textbook_formula(self):
        lam, mu, s = 15.0, 10.0, 2
        rho = lam / (s * mu)
        terms = sum((s * rho) ** k / math.factorial(k) for k in range(s))
        last = (s * rho) ** s / (math.factorial(s) * (1 - rho))
        expected = last / (terms + last) / (s * mu - lam)
        assert wait(mms(2), lam) == pytest.approx(expected, rel=1e-12)

    def test_strictly_increasing(self, rng):
        for model in (mm1(m=3.0), mms(3, m=2.0)):
            flows = np.sort(rng.uniform(-5.0, model.saturation * 0.999, size=200))
            waits = [wait(model, f) for f in flows]
            assert all(b > a for a, b in zip(waits, waits[1:]))

    def test_diverges_at_saturation(self):
        model = mm1()
        assert wait(model, 10.0 * (1 - 1e-9)) > 1e6
        with pytest.raises(SaturationError):
            wait(model, 10.0)
        with pytest.raises(SaturationError):
            wait(mms(2), 25.0)

    def test_linear_extension_below_zero(self):
        model = mm1(capacity=4.0)
        assert wait(model, -2.0) == pytest.approx(-0.5)
        assert wait(model, -1e-12) == pytest.approx(wait(model, 1e-12), abs=1e-11)

    def test_system_measure_adds_service(self):
        queue = mm1(mu=10.0, m=3.0)
        system = mm1(mu=10.0, m=3.0, wait_measure=WaitMeasure.SYSTEM)
        assert wait(system, 0.0) == pytest.approx(0.3)
        assert wait(system, 4.0) == pytest.approx(3.0 / (10.0 - 4.0))
        assert wait(system, 4.0) == pytest.approx(wait(queue, 4.0) + 0.3)


class TestInverseWait:
    """Tests for the wait to flow mapping."""

    def test_primary_reference_rate(self):
        assert inverse_wait(mm1(m=3.0), 0.4333) == pytest.approx(5.909, abs=1e-3)

    def test_zero_wait_zero_flow(self):
        assert inverse_wait(mm1(), 0.0) == 0.0
        assert inverse_wait(mms(3), 0.0) == 0.0

    def test_round_trip(self):
        grid = np.linspace(0.01, 10.0, 100)
        for model in (mm1(m=7.0, mu=12.0), mms(2, m=3.0), mms(4)):
            for w in grid:
                flow = inverse_wait(model, w)
                assert flow < model.saturation
                assert wait(model, flow) == pytest.approx(w, abs=1e-10)

    def test_below_zero_flow_wait(self):
        system = mm1(mu=10.0, m=3.0, capacity=2.0, wait_measure=WaitMeasure.SYSTEM)
        assert inverse_wait(system, 0.1) == pytest.approx(2.0 * (0.1 - 0.3))

    def test_strictly_increasing(self, rng):
        model = mms(3, m=2.0)
        waits = np.sort(rng.uniform(-1.0, 20.0, size=100))
        flows = [inverse_wait(model, w) for w in waits]
        assert all(b > a for a, b in zip(flows, flows[1:]))


class TestHIntegral:
    """Tests for the integral of the inverse delay function."""

    def test_mm1_closed_form(self):
        assert h_integral(mm1(), 0.1) == pytest.approx(1.0 - math.log(2.0), rel=1e-12)

    def test_zero_at_zero_flow_wait(self):
        assert h_integral(mm1(), 0.0) == 0.0
        system = mm1(m=3.0, wait_measure=WaitMeasure.SYSTEM)
        assert h_integral(system, 0.3) == 0.0

    def test_matches_quadrature(self):
        model = mm1(mu=12.0, m=7.0, capacity=3.0)
        expected, _ = quad(lambda z: inverse_wait(model, z), 0.0, 2.5)
        assert h_integral(model, 2.5) == pytest.approx(expected, rel=1e-9)

    def test_derivative_is_inverse_wait(self, rng):
        model = mm1(m=3.0, capacity=5.0)
        h = 1e-6
        for w in rng.uniform(-1.0, 8.0, size=50):
            derivative = (h_integral(model, w + h) - h_integral(model, w - h)) / (2 * h)
            assert derivative == pytest.approx(inverse_wait(model, w), abs=1e-6)

    def test_mms_derivative_is_inverse_wait(self, rng):
        model = mms(2, m=2.0)
        h = 1e-4
        for w in rng.uniform(0.2, 5.0, size=10):
            derivative = (h_integral(model, w + h) - h_integral(model, w - h)) / (2 * h)
            assert derivative == pytest.approx(inverse_wait(model, w), abs=1e-5)

    def test_convex_midpoint(self, rng):
        for model in (mm1(m=3.0), mms(2)):
            for a, b in rng.uniform(-2.0, 6.0, size=(50, 2)):
                mid = h_integral(model, 0.5 * (a + b))
                chord = 0.5 * (h_integral(model, a) + h_integral(model, b))
                assert mid <= chord + 1e-9

    def test_mms_matches_quadrature(self):
        model = mms(3, m=2.0)
        expected, _ = quad(lambda z: inverse_wait(model, z), 0.0, 1.5)
        assert h_integral(model, 1.5) == pytest.approx(expected, rel=1e-7)

    def test_by_parts_matches_closed_form(self):
        function = MM1Delay(mm1())
        generic = DelayFunction.queue_rate_integral(function, 0.1)
        assert generic == pytest.approx(1.0 - math.log(2.0), rel=1e-10)

    def test_by_parts_past_bracket_top(self):
        function = MMsDelay(mms(2))
        top = function.queue_saturation * (1.0 - 1e-12)
        w0 = function.queue_wait(top)
        extra = 5.0
        integral = function.queue_rate_integral
        gained = integral(w0 + extra) - integral(w0)
        assert gained == pytest.approx(extra * top, rel=1e-4)

    def test_mms_inverts_once_per_call(self, monkeypatch):
        calls = []

        def counting_rate(self, wait_hours):
            calls.append(wait_hours)
            return DelayFunction.queue_rate(self, wait_hours)

        monkeypatch.setattr(MMsDelay, "queue_rate", counting_rate)
        model = mms(4, m=2.0)
        for w in (0.1, 1.0, 5.0):
            calls.clear()
            h_integral(model, w)
            assert len(calls) == 1


class TestInverseWaitSlope:
    def test_matches_finite_difference(self):
        for function in (MM1Delay(mm1(m=3.0)), MMsDelay(mms(3, m=2.0))):
            for w in (0.05, 0.5, 2.0):
                h = 1e-6
                numeric = (
                    function.inverse_wait(w + h) - function.inverse_wait(w - h)
                ) / (2 * h)
                slope = function.inverse_wait_slope(w)
                assert slope == pytest.approx(numeric, rel=1e-4)


class TestDelayRegistry:
    def test_builtin_kinds(self):
        assert DelayRegistry.exists(DelayKind.MM1)
        assert DelayRegistry.exists(DelayKind.MMS)
        assert DelayRegistry.get(DelayKind.MMS) is MMsDelay
        kinds = {entry["kind"] for entry in DelayRegistry.list()}
        assert kinds == {"MM1", "MMs"}

    def test_create_dispatches_on_kind(self):
        assert isinstance(DelayRegistry.create(mm1()), MM1Delay)
        assert isinstance(DelayRegistry.create(mms(2)), MMsDelay)
