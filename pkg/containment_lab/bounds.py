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

"""Closed-form containment bounds of the learning-based model.

Writing ``y = j(t)`` and ``v = dy/dt = gamma * i(t)``, the model reduces to
``dv/dy = A**alpha * p * (y + A)**(-alpha)``, which integrates to the first
integral ``v(y)`` evaluated by :py:func:`velocity`. Everything in this module
follows from it:

- for ``alpha > 1``, ``v`` is bounded by ``c1`` and so ``i(t) < c1 / gamma``;
- for ``alpha <= 1``, ``v`` is increasing and unbounded, and
  ``y(t) >= j0 + gamma * i0 * t`` gives a lower bound on ``i(t)``;
- ``t(y) = integral of dy / v(y)`` recovers the time at which ``y`` samples
  have been collected.

The bounds are stated for arbitrary ``(i0, j0)``. With ``i0 = 1`` and
``j0 = 0`` they reduce to the familiar forms, e.g. the asymptote
``1 + A * p / ((alpha - 1) * gamma)``.
"""

import math

import numpy as np
from scipy import integrate as sp_integrate

from containment_lab import _utils as utils
from containment_lab import exceptions
from containment_lab import learning


__all__ = ('BoundsReport',
           'theorem1_report',
           'lower_bound_subone',
           'lower_bound_one',
           'implicit_time',
           'implicit_times',
           'first_integral_residual',
           'first_integral_constant',
           'velocity',
           'classify',
           'SUB_ONE',
           'ONE',
           'SUPER_ONE')

SUB_ONE = 'SubOne'
ONE = 'One'
SUPER_ONE = 'SuperOne'

QUAD_REL_TOL = 1e-8
QUAD_LIMIT = 200

_logger = utils.get_logger(__name__)


def classify(alpha):
    if alpha < 1:
        return SUB_ONE
    if alpha == 1:
        return ONE
    return SUPER_ONE


def _family(curve):
    if isinstance(curve, learning.PaperFamily):
        return curve.A, curve.alpha
    if isinstance(curve, learning.Disabled):
        # f = 0 is the alpha = 0 member of the family for any A
        return 1.0, 0.0
    raise exceptions.UnsupportedCurve()


def _paper_family(curve):
    if not isinstance(curve, learning.PaperFamily):
        raise exceptions.UnsupportedCurve()
    return curve.A, curve.alpha


def _growth(y, j0, A, alpha):
    """``A**alpha * ((y + A)**(1-alpha) - (j0 + A)**(1-alpha)) / (1-alpha)``.

    Computed relative to ``A`` with log1p/expm1 so that small sample counts
    keep full precision; for ``alpha == 1`` it is ``A * ln((y + A)/(j0 + A))``.
    """
    y = np.asarray(y, dtype=float)
    if alpha == 1:
        return A * (np.log1p(y / A) - np.log1p(j0 / A))
    e = 1.0 - alpha
    a = e * np.log1p(y / A)
    b = e * np.log1p(j0 / A)
    return A * np.exp(b) * np.expm1(a - b) / e


def first_integral_constant(params, curve):
    """The constant ``c1`` of the first integral.

    ``gamma*i0 + A*p*((j0+A)/A)**(1-alpha)/(alpha-1)`` for ``alpha != 1``,
    which is ``gamma + A*p/(alpha-1)`` for a single initial infection, and
    ``gamma*i0 - A*p*ln(j0+A)`` for ``alpha == 1``.
    """
    A, alpha = _family(curve)
    gi0 = params.gamma * params.i0
    if alpha == 1:
        return gi0 - A * params.p * math.log(params.j0 + A)
    return (gi0 + A * params.p * ((params.j0 + A) / A) ** (1.0 - alpha) /
            (alpha - 1.0))


def velocity(params, curve, y):
    """``v(y) = gamma * i`` as a function of the collected samples ``y``."""
    A, alpha = _family(curve)
    v = params.gamma * params.i0 + params.p * _growth(y, params.j0, A, alpha)
    return v[()] if isinstance(v, np.ndarray) else v


class BoundsReport(object):
    """Containment summary of one parameter set.

    .. py:attribute:: regime

        ``SubOne``, ``One`` or ``SuperOne``, decided by ``alpha`` alone.

    .. py:attribute:: upper_asymptote

        ``c1 / gamma`` for ``SuperOne``, the limit of ``i(t)``; ``None``
        otherwise and infinite when nothing is ever sampled.

    .. py:attribute:: paper_rounded_bound

        The asymptote rounded up to a whole host, as the bound is usually
        quoted.

    .. py:attribute:: lower_bound_fn

        Callable lower bound of ``i(t)`` for ``SubOne`` and ``One``.
    """

    def __init__(self, params, curve):
        self.params = params
        self.curve = curve
        self.A, self.alpha = _paper_family(curve)
        self.regime = classify(self.alpha)
        self.c1 = first_integral_constant(params, curve)
        self.upper_asymptote = None
        self.paper_rounded_bound = None
        self.lower_bound_fn = None

        if self.regime == SUPER_ONE:
            if params.gamma > 0:
                # p / gamma == k / (lambda * n): the scan rate cancels
                ratio = params.k / (params.lam * params.n)
                shape = ((params.j0 + self.A) / self.A) ** (1.0 - self.alpha)
                self.upper_asymptote = (params.i0 + self.A * ratio * shape /
                                        (self.alpha - 1.0))
                self.paper_rounded_bound = int(
                    math.ceil(self.upper_asymptote))
            else:
                self.upper_asymptote = float('inf')
        elif self.regime == SUB_ONE:
            self.lower_bound_fn = lambda t: lower_bound_subone(params,
                                                               curve, t)
        else:
            self.lower_bound_fn = lambda t: lower_bound_one(params, curve, t)

    def describe(self):
        doc = {'regime': self.regime,
               'A': self.A,
               'alpha': self.alpha,
               'p': self.params.p,
               'gamma': self.params.gamma,
               'i0': self.params.i0,
               'j0': self.params.j0,
               'c1': self.c1,
               'upper_asymptote': self.upper_asymptote,
               'paper_rounded_bound': self.paper_rounded_bound}
        if doc['upper_asymptote'] == float('inf'):
            doc['upper_asymptote'] = 'inf'
        return doc


def theorem1_report(params, curve):
    """Classify the regime and evaluate the matching bound.

    :raises containment_lab.exceptions.UnsupportedCurve: if ``curve`` is not
        a :py:class:`~containment_lab.learning.PaperFamily`.
    :rtype: BoundsReport
    """
    report = BoundsReport(params, curve)
    _logger.debug('bounds for alpha=%s: regime %s, c1=%r',
                  report.alpha, report.regime, report.c1)
    return report


def _lower_bound(params, curve, t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise exceptions.ValidationError('t', 't >= 0')
    if params.gamma == 0:
        # nothing is ever sampled: i grows exponentially at the initial rate
        rate = params.p * curve.survival(params.j0)
        bound = params.i0 * np.exp(rate * t)
    else:
        y = params.j0 + params.gamma * params.i0 * t
        bound = velocity(params, curve, y) / params.gamma
    return bound[()] if isinstance(bound, np.ndarray) else bound


def lower_bound_subone(params, curve, t):
    """Lower bound of ``i(t)`` for ``alpha < 1``, growing like t**(1-alpha).

    :raises containment_lab.exceptions.RegimeMismatch: if ``alpha >= 1``.
    """
    A, alpha = _paper_family(curve)
    if not alpha < 1:
        raise exceptions.RegimeMismatch(alpha, 'alpha < 1')
    return _lower_bound(params, curve, t)


def lower_bound_one(params, curve, t):
    """Lower bound of ``i(t)`` for ``alpha == 1``, growing like ln(t).

    :raises containment_lab.exceptions.RegimeMismatch: if ``alpha != 1``.
    """
    A, alpha = _paper_family(curve)
    if alpha != 1:
        raise exceptions.RegimeMismatch(alpha, 'alpha == 1')
    return _lower_bound(params, curve, t)


def _check_implicit(params, curve, y):
    A, alpha = _paper_family(curve)
    if alpha == 1:
        raise exceptions.RegimeMismatch(alpha, 'alpha != 1')
    if params.gamma == 0:
        raise exceptions.ValidationError('lambda', 'lambda > 0')
    if np.any(np.asarray(y) < params.j0):
        raise exceptions.ValidationError('y', 'y >= j0')


def _quad_inverse_velocity(params, curve, lo, hi):
    def integrand(u):
        return 1.0 / velocity(params, curve, u)

    res = sp_integrate.quad(integrand, lo, hi,
                            epsabs=0.0, epsrel=QUAD_REL_TOL,
                            limit=QUAD_LIMIT, full_output=1)
    # a fourth element is only present when QUADPACK reports a problem
    if len(res) > 3:
        raise exceptions.QuadratureFailure(
            'Quadrature over [%r, %r] failed: %s' % (lo, hi, res[3]))
    return res[0]


def implicit_time(params, curve, y):
    """Hours needed to collect ``y`` samples, from the first integral.

    For a single initial infection and no prior samples this is
    ``(alpha-1)/(A*p) * integral_0^y du /
    (1 - (u/A+1)**(1-alpha) + gamma*(alpha-1)/(A*p))``. ``v`` is increasing
    and equals ``gamma * i0 > 0`` at ``y = j0``, so the integrand is finite on
    the whole range for either side of ``alpha = 1``.

    :raises containment_lab.exceptions.RegimeMismatch: for ``alpha == 1``.
    :raises containment_lab.exceptions.QuadratureFailure: if the relative
        tolerance of 1e-8 is not reached within the subdivision budget.
    """
    _check_implicit(params, curve, y)
    y = float(y)
    if y == params.j0:
        return 0.0
    return _quad_inverse_velocity(params, curve, params.j0, y)


def implicit_times(params, curve, ys):
    """Vectorised :py:func:`implicit_time` for nondecreasing ``ys``.

    Integrates piecewise between consecutive values and accumulates, which
    is much cheaper than integrating each value from ``j0``.
    """
    ys = np.asarray(ys, dtype=float)
    _check_implicit(params, curve, ys)
    if np.any(np.diff(ys) < 0):
        raise exceptions.ValidationError('ys', 'nondecreasing')

    times = np.empty_like(ys)
    lo, acc = params.j0, 0.0
    for idx, hi in enumerate(ys):
        if hi > lo:
            acc += _quad_inverse_velocity(params, curve, lo, hi)
            lo = hi
        times[idx] = acc
    return times


def first_integral_residual(trajectory, params, curve):
    """Largest relative deviation of a trajectory from the first integral.

    Evaluates ``|gamma*i - v(j)| / (gamma*i)`` at every point.

    :type trajectory: containment_lab.solver.Trajectory
    :rtype: float
    """
    if params.gamma == 0:
        raise exceptions.ValidationError('lambda', 'lambda > 0')
    gi = params.gamma * np.asarray(trajectory.i, dtype=float)
    closed = velocity(params, curve, np.asarray(trajectory.j, dtype=float))
    return float(np.max(np.abs(gi - closed) / gi))
