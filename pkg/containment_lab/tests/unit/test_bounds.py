# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
import math

import mock
import numpy as np

from containment_lab import bounds
from containment_lab import exceptions
from containment_lab import learning
from containment_lab import solver
from containment_lab import systems
from containment_lab.tests.unit import utils


class RegimeTests(utils.TestCase):

    def test_classify(self):
        self.assertEqual(bounds.SUB_ONE, bounds.classify(0.5))
        self.assertEqual(bounds.ONE, bounds.classify(1.0))
        self.assertEqual(bounds.SUPER_ONE, bounds.classify(1.0001))

    def test_disabled_curve_is_unsupported(self):
        self.assertRaises(exceptions.UnsupportedCurve,
                          bounds.theorem1_report, self.params(),
                          learning.Disabled())

    def test_bounds_errors_are_config_errors(self):
        self.assertRaises(exceptions.ConfigError,
                          bounds.theorem1_report, self.params(),
                          learning.Disabled())


class AsymptoteTests(utils.TestCase):

    def test_alpha_two(self):
        params = self.params()
        report = bounds.theorem1_report(params, self.curve(alpha=2.0))
        formula = 1 + 1000.0 * params.p / ((2.0 - 1) * params.gamma)
        self.assertEqual(bounds.SUPER_ONE, report.regime)
        self.assertClose(formula, report.upper_asymptote, rel=1e-9)
        self.assertClose(82.4907, report.upper_asymptote, abs_tol=1e-3)
        self.assertEqual(83, report.paper_rounded_bound)
        self.assertIsNone(report.lower_bound_fn)

    def test_alpha_three(self):
        report = bounds.theorem1_report(self.params(), self.curve(alpha=3.0))
        self.assertClose(41.745, report.upper_asymptote, abs_tol=1e-3)
        self.assertEqual(42, report.paper_rounded_bound)

    def test_alpha_one_and_a_half(self):
        report = bounds.theorem1_report(self.params(), self.curve(alpha=1.5))
        self.assertClose(163.98, report.upper_asymptote, abs_tol=1e-2)

    def test_first_integral_constant(self):
        params = self.params()
        c1 = bounds.first_integral_constant(params, self.curve(alpha=2.0))
        self.assertClose(params.gamma + 1000.0 * params.p, c1)
        report = bounds.theorem1_report(params, self.curve(alpha=2.0))
        self.assertClose(c1 / params.gamma, report.upper_asymptote)

    def test_first_integral_constant_alpha_one(self):
        params = self.params()
        c1 = bounds.first_integral_constant(params, self.curve(alpha=1.0))
        self.assertClose(params.gamma - 1000.0 * params.p * math.log(1000.0),
                         c1)

    def test_scan_rate_independent(self):
        curve = self.curve()
        a = bounds.theorem1_report(self.params(), curve)
        b = bounds.theorem1_report(self.params(eta=10 * self.ETA), curve)
        self.assertEqual(a.upper_asymptote, b.upper_asymptote)

    def test_proportional_to_deceleration(self):
        small = bounds.theorem1_report(self.params(), self.curve(A=1000.0))
        big = bounds.theorem1_report(self.params(), self.curve(A=10000.0))
        ratio = (big.upper_asymptote - 1) / (small.upper_asymptote - 1)
        self.assertClose(10.0, ratio)

    def test_inverse_to_sampling(self):
        a = bounds.theorem1_report(self.params(lam=0.001), self.curve())
        b = bounds.theorem1_report(self.params(lam=0.01), self.curve())
        self.assertClose(10.0, (a.upper_asymptote - 1) /
                         (b.upper_asymptote - 1))

    def test_no_sampling_has_no_plateau(self):
        report = bounds.theorem1_report(self.params(lam=0.0), self.curve())
        self.assertEqual(float('inf'), report.upper_asymptote)
        self.assertIsNone(report.paper_rounded_bound)
        self.assertEqual('inf', report.describe()['upper_asymptote'])

    def test_general_initial_state(self):
        params = self.params(i0=2.0, j0=100.0)
        curve = self.curve()
        report = bounds.theorem1_report(params, curve)
        s = systems.build_system('learning', params, curve)
        traj = solver.integrate(s, s.initial_state,
                                solver.SolverSettings(t_max=5000.0,
                                                      output_every=50.0))
        self.assertTrue(np.all(traj.i <= report.upper_asymptote))
        self.assertClose(report.upper_asymptote, traj.i[-1], rel=1e-2)

    def test_describe(self):
        doc = bounds.theorem1_report(self.params(), self.curve()).describe()
        self.assertEqual('SuperOne', doc['regime'])
        self.assertEqual(83, doc['paper_rounded_bound'])


class LowerBoundTests(utils.TestCase):

    def _solve(self, alpha, t_max=10000.0, output_every=10.0):
        params, curve = self.params(), self.curve(alpha=alpha)
        s = systems.build_system('learning', params, curve)
        return solver.integrate(s, s.initial_state,
                                solver.SolverSettings(
                                    t_max=t_max, output_every=output_every))

    def test_sub_one_value(self):
        params, curve = self.params(), self.curve(alpha=0.5)
        A, alpha, t = 1000.0, 0.5, 100.0
        expected = (A * params.p / ((1 - alpha) * params.gamma) *
                    ((params.gamma * t / A + 1) ** (1 - alpha) - 1) + 1)
        self.assertClose(expected,
                         bounds.lower_bound_subone(params, curve, t))
        self.assertBetween(69.0, 70.0, expected)

    def test_sub_one_starts_at_one(self):
        self.assertEqual(1.0, bounds.lower_bound_subone(
            self.params(), self.curve(alpha=0.5), 0.0))

    def test_one_value(self):
        params, curve = self.params(), self.curve(alpha=1.0)
        t = 100.0
        expected = (1000.0 * params.p / params.gamma *
                    math.log(params.gamma * t / 1000.0 + 1) + 1)
        self.assertClose(expected, bounds.lower_bound_one(params, curve, t))

    def test_regime_mismatch(self):
        params = self.params()
        self.assertRaises(exceptions.RegimeMismatch,
                          bounds.lower_bound_subone, params,
                          self.curve(alpha=2.0), 1.0)
        self.assertRaises(exceptions.RegimeMismatch,
                          bounds.lower_bound_one, params,
                          self.curve(alpha=0.5), 1.0)

    def test_negative_time(self):
        self.assertRaises(exceptions.ValidationError,
                          bounds.lower_bound_one, self.params(),
                          self.curve(alpha=1.0), -1.0)

    def test_without_sampling_bound_is_exponential(self):
        params = self.params(lam=0.0)
        value = bounds.lower_bound_subone(params, self.curve(alpha=0.5), 2.0)
        self.assertClose(math.exp(2.0 * params.p), value)

    def test_sub_one_bound_holds_and_growth(self):
        traj = self._solve(0.5)
        report = bounds.theorem1_report(self.params(), self.curve(alpha=0.5))
        lower = report.lower_bound_fn(traj.t)
        self.assertTrue(np.all(lower <= traj.i))

        # Omega(t**0.5) is a lower bound; the first integral gives
        # y ~ t**(1/alpha), so i grows like t**((1-alpha)/alpha) = t
        last = traj.t >= 1000.0
        slope = np.polyfit(np.log(traj.t[last]), np.log(traj.i[last]), 1)[0]
        self.assertGreaterEqual(slope, 0.45)
        self.assertBetween(0.95, 1.05, slope)

    def test_one_bound_holds(self):
        traj = self._solve(1.0)
        report = bounds.theorem1_report(self.params(), self.curve(alpha=1.0))
        self.assertEqual(bounds.ONE, report.regime)
        self.assertTrue(np.all(report.lower_bound_fn(traj.t) <= traj.i))
        self.assertLess(traj.i[-1], 1e-2 * self.K)


class ImplicitTimeTests(utils.TestCase):

    def test_zero_samples_take_no_time(self):
        self.assertEqual(0.0, bounds.implicit_time(self.params(),
                                                   self.curve(), 0.0))

    def test_round_trip_alpha_two(self):
        params, curve = self.params(), self.curve()
        s = systems.build_system('learning', params, curve)
        traj = solver.integrate(s, s.initial_state, solver.SolverSettings())
        times = bounds.implicit_times(params, curve, traj.j)
        error = np.abs(times - traj.t) / np.maximum(traj.t, 1.0)
        self.assertLess(error.max(), 1e-4)

    def test_single_value_matches_vector(self):
        params, curve = self.params(), self.curve()
        ys = [10.0, 100.0, 1000.0]
        vector = bounds.implicit_times(params, curve, ys)
        for y, t in zip(ys, vector):
            self.assertClose(t, bounds.implicit_time(params, curve, y),
                             rel=1e-7)

    def test_sub_one_is_finite(self):
        t = bounds.implicit_time(self.params(), self.curve(alpha=0.5), 1e6)
        self.assertTrue(np.isfinite(t))
        self.assertGreater(t, 0)

    def test_alpha_one_is_rejected(self):
        self.assertRaises(exceptions.RegimeMismatch, bounds.implicit_time,
                          self.params(), self.curve(alpha=1.0), 10.0)

    def test_requires_sampling(self):
        self.assertRaises(exceptions.ValidationError, bounds.implicit_time,
                          self.params(lam=0.0), self.curve(), 10.0)

    def test_below_initial_samples(self):
        self.assertRaises(exceptions.ValidationError, bounds.implicit_time,
                          self.params(j0=5.0), self.curve(), 1.0)

    def test_decreasing_values(self):
        self.assertRaises(exceptions.ValidationError, bounds.implicit_times,
                          self.params(), self.curve(), [2.0, 1.0])

    def test_quadrature_failure(self):
        with mock.patch.object(bounds.sp_integrate, 'quad') as m:
            m.return_value = (1.0, 1.0, {}, 'roundoff error detected')
            self.assertRaises(exceptions.QuadratureFailure,
                              bounds.implicit_time, self.params(),
                              self.curve(), 10.0)


class ResidualTests(utils.TestCase):

    def test_exact_points_have_no_residual(self):
        params, curve = self.params(), self.curve()
        j = np.array([0.0, 10.0, 1000.0])
        i = bounds.velocity(params, curve, j) / params.gamma
        traj = solver.Trajectory(np.arange(3.0),
                                 {'i': i, 'j': j, 'f': curve.value(j)})
        self.assertLess(bounds.first_integral_residual(traj, params, curve),
                        1e-12)

    def test_velocity_at_start(self):
        params = self.params(i0=3.0)
        self.assertClose(3.0 * params.gamma,
                         bounds.velocity(params, self.curve(), 0.0))

    def test_requires_sampling(self):
        traj = solver.Trajectory([0.0], {'i': [1.0], 'j': [0.0],
                                         'f': [0.0]})
        self.assertRaises(exceptions.ValidationError,
                          bounds.first_integral_residual, traj,
                          self.params(lam=0.0), self.curve())
