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

import logging

import numpy as np
from positional import positional
from scipy import integrate as sp_integrate

from containment_lab import _utils as utils
from containment_lab import exceptions


__all__ = ('SolverSettings',
           'Trajectory',
           'integrate',
           'output_grid',
           'RK4_FIXED',
           'RK45_ADAPTIVE')

RK4_FIXED = 'rk4'
RK45_ADAPTIVE = 'rk45'
METHODS = (RK4_FIXED, RK45_ADAPTIVE)

TRAJECTORY_COLUMNS = ('t', 'i', 'j', 'f')

_logger = utils.get_logger(__name__)


class SolverSettings(object):
    """How a system is integrated and sampled.

    :param str method: ``rk45`` (adaptive Dormand-Prince, the default) or
        ``rk4`` (classical fixed step, kept for convergence studies).
    :param float dt: Fixed step for ``rk4``, first step for ``rk45``.
    :param float rel_tol: Relative tolerance of ``rk45``.
    :param float abs_tol: Absolute tolerance of ``rk45``.
    :param float t_max: Integration horizon in hours.
    :param float output_every: Output sampling interval in hours.
    """

    @positional(1)
    def __init__(self,
                 method=RK45_ADAPTIVE,
                 dt=0.01,
                 rel_tol=1e-9,
                 abs_tol=1e-12,
                 t_max=2000.0,
                 output_every=1.0):
        if method not in METHODS:
            raise exceptions.ValidationError('method',
                                             'one of %s' % ', '.join(METHODS))
        for name, value in (('dt', dt), ('rel_tol', rel_tol),
                            ('abs_tol', abs_tol), ('t_max', t_max),
                            ('output_every', output_every)):
            if not value > 0:
                raise exceptions.ValidationError(name, '%s > 0' % name)
        if method == RK4_FIXED and output_every < dt:
            raise exceptions.ValidationError('output_every',
                                             'output_every >= dt')

        self.method = method
        self.dt = float(dt)
        self.rel_tol = float(rel_tol)
        self.abs_tol = float(abs_tol)
        self.t_max = float(t_max)
        self.output_every = float(output_every)

    def replace(self, **kwargs):
        values = self.describe()
        values.update(kwargs)
        return SolverSettings(**values)

    def describe(self):
        return {'method': self.method,
                'dt': self.dt,
                'rel_tol': self.rel_tol,
                'abs_tol': self.abs_tol,
                't_max': self.t_max,
                'output_every': self.output_every}

    def __eq__(self, other):
        return (type(self) == type(other) and
                self.describe() == other.describe())

    def __ne__(self, other):
        return not self.__eq__(other)


def output_grid(t_max, output_every):
    """Sample times ``0, h, 2h, ...`` plus ``t_max`` itself."""
    count = int(np.floor(t_max / output_every + 1e-9))
    grid = output_every * np.arange(count + 1, dtype=float)
    if t_max - grid[-1] > 1e-9 * t_max:
        grid = np.append(grid, t_max)
    else:
        grid[-1] = t_max
    return grid


class Trajectory(object):
    """A time-indexed series of model states.

    :param t: Strictly increasing sample times.
    :param dict columns: Named series sharing the length of ``t``; always
        ``i``, ``j`` and ``f``, plus ``r`` for the Kermack-McKendrick model.
    :param str params_fingerprint: Identifier of the generating system and
        solver settings.
    """

    def __init__(self, t, columns, params_fingerprint=None):
        self._t = np.array(t, dtype=float)
        self._t.setflags(write=False)
        self._columns = {}
        for name, values in columns.items():
            arr = np.array(values, dtype=float)
            if arr.shape != self._t.shape:
                raise ValueError('column %s has %d points, expected %d' %
                                 (name, arr.size, self._t.size))
            arr.setflags(write=False)
            self._columns[name] = arr
        self.params_fingerprint = params_fingerprint

    @property
    def t(self):
        return self._t

    @property
    def i(self):
        return self._columns['i']

    @property
    def j(self):
        return self._columns['j']

    @property
    def f(self):
        return self._columns['f']

    @property
    def column_names(self):
        extra = sorted(c for c in self._columns if c not in TRAJECTORY_COLUMNS)
        return TRAJECTORY_COLUMNS + tuple(extra)

    def column(self, name):
        if name == 't':
            return self._t
        return self._columns[name]

    @property
    def points(self):
        return list(zip(self._t, self.i, self.j, self.f))

    @property
    def final(self):
        return self.points[-1]

    def __len__(self):
        return self._t.size

    def at(self, t):
        """Linearly interpolate the infected count at time ``t``."""
        return float(np.interp(t, self._t, self.i))


def _rk4_step(rhs, t, y, h):
    k1 = rhs(t, y)
    k2 = rhs(t + h / 2.0, y + h / 2.0 * k1)
    k3 = rhs(t + h / 2.0, y + h / 2.0 * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _integrate_rk4(rhs, y0, grid, dt):
    states = np.empty((y0.size, grid.size))
    states[:, 0] = y0
    y = y0.copy()
    steps = 0
    for idx in range(1, grid.size):
        t0, t1 = grid[idx - 1], grid[idx]
        # equal steps per output segment so outputs land exactly on the grid
        n = max(1, int(np.ceil((t1 - t0) / dt - 1e-9)))
        h = (t1 - t0) / n
        for s in range(n):
            y = _rk4_step(rhs, t0 + s * h, y, h)
        steps += n
        if not np.all(np.isfinite(y)):
            raise exceptions.NonFiniteState(t1)
        states[:, idx] = y
    _logger.debug('rk4 finished in %d steps', steps)
    return states


def _integrate_rk45(rhs, y0, grid, settings):
    with np.errstate(all='ignore'):
        sol = sp_integrate.solve_ivp(rhs, (0.0, settings.t_max), y0,
                                     method='RK45',
                                     t_eval=grid,
                                     first_step=min(settings.dt,
                                                    settings.t_max),
                                     rtol=settings.rel_tol,
                                     atol=settings.abs_tol)

    if sol.status != 0:
        reached = sol.t[-1] if sol.t.size else 0.0
        if sol.y.size and not np.all(np.isfinite(sol.y)):
            bad = np.flatnonzero(~np.all(np.isfinite(sol.y), axis=0))[0]
            raise exceptions.NonFiniteState(sol.t[bad])
        raise exceptions.StepUnderflow(reached, sol.message)

    finite = np.all(np.isfinite(sol.y), axis=0)
    if not np.all(finite):
        raise exceptions.NonFiniteState(sol.t[np.flatnonzero(~finite)[0]])

    _logger.debug('rk45 finished: %d evaluations, %d output points',
                  sol.nfev, sol.t.size)
    return sol.y


def integrate(rhs, initial_state, settings):
    """Integrate ``rhs`` from ``t = 0`` to ``settings.t_max``.

    :param rhs: A callable ``rhs(t, y)`` returning ``dy/dt``. System objects
        from :py:mod:`containment_lab.systems` also provide the mapping from
        state to trajectory columns; for a bare callable the first component
        is reported as ``i`` and the second (if any) as ``j``.
    :param initial_state: State at ``t = 0``.
    :param settings: How to integrate and sample.
    :type settings: SolverSettings

    :returns: The trajectory sampled every ``settings.output_every`` hours
              plus the final point at ``t_max``.
    :rtype: Trajectory

    :raises containment_lab.exceptions.StepUnderflow: if the adaptive step
        collapses.
    :raises containment_lab.exceptions.NonFiniteState: if the state becomes
        NaN or infinite.
    """
    y0 = np.atleast_1d(np.array(initial_state, dtype=float))
    grid = output_grid(settings.t_max, settings.output_every)

    if _logger.isEnabledFor(logging.DEBUG):
        _logger.debug('integrating %s with %s over %d output points',
                      getattr(rhs, 'name', rhs), settings.method, grid.size)

    if settings.method == RK4_FIXED:
        states = _integrate_rk4(rhs, y0, grid, settings.dt)
    else:
        states = _integrate_rk45(rhs, y0, grid, settings)

    # the first sample is the initial state exactly
    states[:, 0] = y0

    if hasattr(rhs, 'columns'):
        columns = rhs.columns(states)
        fingerprint = utils.fingerprint(rhs, settings)
    else:
        zeros = np.zeros(grid.size)
        columns = {'i': states[0],
                   'j': states[1] if y0.size > 1 else zeros,
                   'f': zeros}
        fingerprint = utils.fingerprint(settings)

    return Trajectory(grid, columns, params_fingerprint=fingerprint)
