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

"""Stochastic worm propagation simulator.

Every infected host sends scans into the address space as a Poisson process
of rate ``eta``; the aggregate next-scan time is exponential with rate
``eta * i``. Each scan picks a uniform target among the ``n`` addresses, is
independently sampled by the classifier with probability ``lambda`` (which
increments the sample count ``l``), and is filtered with probability
``f(l)``, where ``l`` is the count *before* the packet's own sampling. An
unfiltered scan that reaches a susceptible host infects it.

Two engines implement this law:

``scan``
    Executes the loop literally, one scan per iteration. Only practical for
    small ``n * eta * t_max``.

``thinned``
    Splits the scan stream into independent Poisson streams (candidate
    infections at rate ``eta * i * h * (1 - f(l_ref))`` and everything else)
    and draws the number of scans and samples between candidates in bulk. A
    candidate passes the filter with probability
    ``(1 - f(l)) / (1 - f(l_ref))``; since ``f`` is nondecreasing this is the
    usual thinning construction and reproduces the per-scan law exactly.

Both engines draw the same random variates for both scenarios, so runs with
the same seed are paired across scenarios.
"""

import concurrent.futures
import logging
import math

import numpy as np
from positional import positional

from containment_lab import _utils as utils
from containment_lab import exceptions
from containment_lab import solver


__all__ = ('SimConfig',
           'SimRun',
           'Ensemble',
           'run_once',
           'run_ensemble',
           'seed_for_run',
           'filter_sample_count',
           'CONSTANT_P',
           'DEPLETING_P',
           'SCAN',
           'THINNED',
           'TRUE_SIGNATURE',
           'THOROUGH_INFECTION',
           'HORIZON_REACHED')

CONSTANT_P = 'constant-p'
DEPLETING_P = 'depleting-p'
SCENARIOS = (CONSTANT_P, DEPLETING_P)

SCAN = 'scan'
THINNED = 'thinned'
ENGINES = (SCAN, THINNED)

PER_SCAN_EXPONENTIAL = 'PerScanExponential'

TRUE_SIGNATURE = 'TrueSignature'
THOROUGH_INFECTION = 'ThoroughInfection'
HORIZON_REACHED = 'HorizonReached'

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15

_logger = utils.get_logger(__name__)


def seed_for_run(base_seed, index):
    """Derive the seed of run ``index`` from ``base_seed``.

    This is the splitmix64 output function applied to
    ``base_seed + (index + 1) * 0x9E3779B97F4A7C15 (mod 2**64)``.
    """
    z = (int(base_seed) + (int(index) + 1) * _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def filter_sample_count(l_before, l_after):
    """The sample count whose ``f`` decides whether a packet is filtered.

    A packet can't be blocked by a signature learned from itself, so the
    count before its own sampling applies.
    """
    return l_before


def _check_seed(seed):
    if (not isinstance(seed, (int, np.integer)) or isinstance(seed, bool) or
            not 0 <= seed <= _MASK64):
        raise exceptions.ValidationError('seed', '0 <= seed < 2**64')
    return int(seed)


class SimConfig(object):
    """One simulator configuration.

    :param params: Scenario parameters; ``i0`` and ``j0`` must be whole.
    :type params: containment_lab.model.ModelParams
    :param curve: The defender's learning curve.
    :param str scenario: ``constant-p`` keeps the hit probability at
        ``k/n`` (hits on already infected hosts are no-ops);
        ``depleting-p`` removes infected hosts from the target pool.
    :param float t_max: Horizon in hours.
    :param float f_terminate: A filtering probability at or above which the
        defender is deemed to hold the true signature.
    :param int seed: Unsigned 64-bit seed.
    :param float output_every: Sampling cadence of the run series, hours.
    :param str engine: ``thinned`` (default) or ``scan``.
    """

    time_model = PER_SCAN_EXPONENTIAL

    @positional(3)
    def __init__(self, params, curve,
                 scenario=CONSTANT_P,
                 t_max=2000.0,
                 f_terminate=1.0,
                 seed=0,
                 output_every=1.0,
                 engine=THINNED):
        if scenario not in SCENARIOS:
            raise exceptions.ValidationError(
                'scenario', 'one of %s' % ', '.join(SCENARIOS))
        if engine not in ENGINES:
            raise exceptions.ValidationError(
                'engine', 'one of %s' % ', '.join(ENGINES))
        if not t_max > 0:
            raise exceptions.ValidationError('t_max', 't_max > 0')
        if not 0 < f_terminate <= 1:
            raise exceptions.ValidationError('f_terminate',
                                             '0 < f_terminate <= 1')
        if not output_every > 0:
            raise exceptions.ValidationError('output_every',
                                             'output_every > 0')
        if params.i0 != int(params.i0) or params.j0 != int(params.j0):
            raise exceptions.ValidationError('i0', 'whole initial counts')

        self.params = params
        self.curve = curve
        self.scenario = scenario
        self.t_max = float(t_max)
        self.f_terminate = float(f_terminate)
        self.seed = _check_seed(seed)
        self.output_every = float(output_every)
        self.engine = engine

    def replace(self, **kwargs):
        values = {'scenario': self.scenario,
                  't_max': self.t_max,
                  'f_terminate': self.f_terminate,
                  'seed': self.seed,
                  'output_every': self.output_every,
                  'engine': self.engine}
        values.update(kwargs)
        params = values.pop('params', self.params)
        curve = values.pop('curve', self.curve)
        return SimConfig(params, curve, **values)

    def describe(self):
        return {'params': self.params.describe(),
                'curve': self.curve.describe(),
                'scenario': self.scenario,
                'time_model': self.time_model,
                't_max': self.t_max,
                'f_terminate': self.f_terminate,
                'seed': self.seed,
                'output_every': self.output_every,
                'engine': self.engine}


class SimRun(object):
    """The outcome of one realization.

    :param series: dict with arrays ``t``, ``i``, ``l`` and ``f``.
    """

    def __init__(self, series, termination, final_infected, final_samples,
                 scans_executed, seed, t_end):
        self.series = series
        self.termination = termination
        self.final_infected = final_infected
        self.final_samples = final_samples
        self.scans_executed = scans_executed
        self.seed = seed
        self.t_end = t_end

    @property
    def t(self):
        return self.series['t']

    @property
    def i(self):
        return self.series['i']

    def infected_at(self, grid):
        """Last-value interpolation of the infected step function."""
        idx = np.searchsorted(self.series['t'], grid, side='right') - 1
        return self.series['i'][np.maximum(idx, 0)]

    def summary(self):
        return {'seed': self.seed,
                'termination': self.termination,
                'final_infected': self.final_infected,
                'final_samples': self.final_samples,
                'scans_executed': self.scans_executed,
                't_end': self.t_end}


class _Recorder(object):

    def __init__(self, config):
        self.grid = solver.output_grid(config.t_max, config.output_every)
        self.next = 0
        self.t = []
        self.i = []
        self.l = []

    @property
    def next_time(self):
        if self.next < self.grid.size:
            return self.grid[self.next]
        return float('inf')

    def record_until(self, t, i, l):
        """Record the state at every grid time strictly before ``t``."""
        while self.next < self.grid.size and self.grid[self.next] < t:
            self._append(self.grid[self.next], i, l)
            self.next += 1

    def record_grid_point(self, i, l):
        self._append(self.grid[self.next], i, l)
        self.next += 1

    def finish(self, t, i, l):
        if not self.t or self.t[-1] < t:
            self._append(t, i, l)

    def _append(self, t, i, l):
        self.t.append(float(t))
        self.i.append(i)
        self.l.append(l)

    def series(self, curve):
        l = np.array(self.l, dtype=np.int64)
        return {'t': np.array(self.t, dtype=float),
                'i': np.array(self.i, dtype=np.int64),
                'l': l,
                'f': np.asarray(curve.value(l), dtype=float)}


def _initial_state(config):
    return int(config.params.i0), int(config.params.j0)


def _run_scan(config, rng, rec):
    params, curve = config.params, config.curve
    n, k, eta, lam = params.n, params.k, params.eta, params.lam
    i, l = _initial_state(config)
    infected = np.zeros(k, dtype=bool)
    infected[:i] = True
    t, scans = 0.0, 0

    if i >= k:
        rec.finish(t, i, l)
        return THOROUGH_INFECTION, i, l, scans, t

    while True:
        t_next = t + rng.standard_exponential() / (eta * i)
        rec.record_until(min(t_next, config.t_max), i, l)
        if t_next > config.t_max:
            rec.record_until(float('inf'), i, l)
            return HORIZON_REACHED, i, l, scans, config.t_max
        t = t_next
        scans += 1

        # addresses [0, k) are the vulnerable ones
        target = int(rng.integers(n))
        u_sample = rng.random()
        u_filter = rng.random()

        l_before = l
        sampled = u_sample < lam
        if sampled:
            l += 1
        filtered = u_filter < curve.value(filter_sample_count(l_before, l))

        if target < k and not filtered and not infected[target]:
            infected[target] = True
            i += 1

        if sampled and curve.value(l) >= config.f_terminate:
            rec.finish(t, i, l)
            return TRUE_SIGNATURE, i, l, scans, t
        if i == k:
            rec.finish(t, i, l)
            return THOROUGH_INFECTION, i, l, scans, t


def _first_crossing(curve, l, count, threshold):
    """Smallest m in [1, count] with f(l + m) >= threshold, or None."""
    if count <= 0 or curve.value(l + count) < threshold:
        return None
    lo, hi = 1, count
    while lo < hi:
        mid = (lo + hi) // 2
        if curve.value(l + mid) >= threshold:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _run_thinned(config, rng, rec):
    params, curve = config.params, config.curve
    n, k, eta, lam = params.n, params.k, params.eta, params.lam
    depleting = config.scenario == DEPLETING_P
    i, l = _initial_state(config)
    t, scans = 0.0, 0

    if i >= k:
        rec.finish(t, i, l)
        return THOROUGH_INFECTION, i, l, scans, t

    while True:
        hit = (k - i) / n if depleting else k / n
        s_ref = float(curve.survival(l))
        cand_rate = eta * i * hit * s_ref
        other_rate = eta * i * (1.0 - hit * s_ref)
        e = rng.standard_exponential()
        t_cand = t + e / cand_rate if cand_rate > 0 else float('inf')

        # bulk-advance through grid points until the next candidate
        while True:
            stop = min(t_cand, rec.next_time, config.t_max)
            span = stop - t
            m = int(rng.poisson(other_rate * span)) if span > 0 else 0
            s = int(rng.binomial(m, lam)) if m > 0 else 0
            cross = _first_crossing(curve, l, s, config.f_terminate)
            if cross is not None:
                frac = rng.beta(cross, s - cross + 1)
                scans += cross + int(rng.binomial(m - s, frac))
                l += cross
                t += frac * span
                rec.finish(t, i, l)
                return TRUE_SIGNATURE, i, l, scans, t
            l += s
            scans += m
            t = stop
            if stop == t_cand:
                break
            if stop == rec.next_time:
                rec.record_grid_point(i, l)
            if stop >= config.t_max:
                rec.record_until(float('inf'), i, l)
                return HORIZON_REACHED, i, l, scans, config.t_max

        scans += 1
        u_accept = rng.random()
        u_target = rng.random()
        u_sample = rng.random()

        l_before = l
        sampled = u_sample < lam
        if sampled:
            l += 1
        passes = (u_accept * s_ref <
                  curve.survival(filter_sample_count(l_before, l)))
        if passes and (depleting or u_target >= i / k):
            i += 1

        if sampled and curve.value(l) >= config.f_terminate:
            rec.finish(t, i, l)
            return TRUE_SIGNATURE, i, l, scans, t
        if i == k:
            rec.finish(t, i, l)
            return THOROUGH_INFECTION, i, l, scans, t


_ENGINES = {SCAN: _run_scan, THINNED: _run_thinned}


def run_once(config):
    """Run one realization of the worm propagation process.

    :type config: SimConfig
    :rtype: SimRun
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    rec = _Recorder(config)
    termination, i, l, scans, t_end = _ENGINES[config.engine](config, rng,
                                                              rec)

    if _logger.isEnabledFor(logging.DEBUG):
        _logger.debug('seed %d: %s at t=%.6g with %d infected, %d samples, '
                      '%d scans', config.seed, termination, t_end, i, l,
                      scans)

    return SimRun(series=rec.series(config.curve),
                  termination=termination,
                  final_infected=i,
                  final_samples=l,
                  scans_executed=scans,
                  seed=config.seed,
                  t_end=t_end)


class Ensemble(object):
    """Aggregated Monte-Carlo runs on a common time grid.

    .. py:attribute:: stderr_i

        Standard error of the mean, ``std(ddof=1) / sqrt(runs)``; zero for a
        single run.
    """

    def __init__(self, t, mean_i, stderr_i, runs, base_seed):
        self.t = t
        self.mean_i = mean_i
        self.stderr_i = stderr_i
        self.runs = runs
        self.base_seed = base_seed

    @property
    def n_runs(self):
        return len(self.runs)

    @property
    def seeds(self):
        return [r.seed for r in self.runs]


def _run_indexed(item):
    index, config = item
    return index, run_once(config)


@positional(3)
def run_ensemble(config, runs, base_seed, workers=1):
    """Run ``runs`` independent realizations and aggregate them.

    Run ``r`` uses ``seed_for_run(base_seed, r)``. With ``workers > 1`` the
    runs execute in a process pool; results are ordered by run index before
    aggregation so the outcome does not depend on scheduling.

    :rtype: Ensemble
    """
    if runs < 1:
        raise exceptions.ValidationError('runs', 'runs >= 1')
    base_seed = _check_seed(base_seed)
    items = [(r, config.replace(seed=seed_for_run(base_seed, r)))
             for r in range(runs)]

    if workers > 1 and runs > 1:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=workers) as pool:
            results = list(pool.map(_run_indexed, items))
    else:
        results = [_run_indexed(item) for item in items]
    results.sort(key=lambda item: item[0])
    done = [run for _, run in results]

    grid = solver.output_grid(config.t_max, config.output_every)
    values = np.array([run.infected_at(grid) for run in done], dtype=float)
    mean = values.mean(axis=0)
    if runs > 1:
        stderr = values.std(axis=0, ddof=1) / math.sqrt(runs)
    else:
        stderr = np.zeros_like(mean)

    _logger.debug('ensemble of %d runs from base seed %d: final mean %.6g',
                  runs, base_seed, mean[-1])
    return Ensemble(grid, mean, stderr, done, base_seed)
