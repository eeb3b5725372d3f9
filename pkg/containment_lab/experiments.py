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
"""Experiment presets reproducing the published figures, and sweeps.

A preset is a list of series. Each series is one ODE integration or one
Monte-Carlo ensemble; running a preset turns every series into a
:py:class:`Dataset`, a set of equally long columns together with the metadata
needed to regenerate it.
"""

import math
import os

import numpy as np
from positional import positional

import containment_lab
from containment_lab import _utils as utils
from containment_lab import bounds
from containment_lab import exceptions
from containment_lab import formats
from containment_lab import learning
from containment_lab import model
from containment_lab import simulator
from containment_lab import solver
from containment_lab import systems


__all__ = ('section_iv_params',
           'Series',
           'ExperimentPreset',
           'Dataset',
           'preset_classical',
           'preset_alpha_sweep',
           'preset_A_sweep',
           'preset_lambda_sweep',
           'preset_simulation_comparison',
           'run_preset',
           'sweep',
           'get_preset',
           'write_datasets',
           'read_dataset',
           'PRESETS',
           'SWEEP_AXES',
           'ODE',
           'MC')

ODE = 'ODE'
MC = 'MC'
BOTH = 'Both'

SWEEP_AXES = ('alpha', 'A', 'lambda', 'eta')

MANIFEST = 'manifest.json'

_logger = utils.get_logger(__name__)


def section_iv_params(**kwargs):
    """Code Red v2 style scenario: the whole IPv4 space, 350000 targets."""
    values = {'n': model.IPV4_ADDRESSES,
              'k': 350000,
              'eta': 10188,
              'lam': 0.001}
    values.update(kwargs)
    return model.derive_params(**values)


class Series(object):
    """One job of a preset.

    :param str label: Unique label within the preset, used in file names.
    :param str engine: ``ODE`` or ``MC``.
    :param params: Scenario parameters.
    :param curve: The defender's learning curve.
    :param str model: Model name for ``ODE`` series.
    :param str scenario: Simulator scenario for ``MC`` series.
    :param int runs: Ensemble size for ``MC`` series.
    :param float t_max: Horizon override for this series.
    :param sweep_value: Value of the preset's sweep axis, if any.
    """

    @positional(5)
    def __init__(self, label, engine, params, curve,
                 model='learning',
                 beta=None,
                 zeta=0.0,
                 scenario=None,
                 runs=None,
                 t_max=None,
                 sweep_value=None):
        if engine not in (ODE, MC):
            raise exceptions.ValidationError('engine', 'ODE or MC')
        if engine == MC and (scenario is None or not runs):
            raise exceptions.ValidationError('runs',
                                             'MC series need scenario and runs')
        self.label = label
        self.engine = engine
        self.params = params
        self.curve = curve
        self.model = model
        self.beta = beta
        self.zeta = zeta
        self.scenario = scenario
        self.runs = runs
        self.t_max = t_max
        self.sweep_value = sweep_value


class ExperimentPreset(object):
    """A named, fully determined set of series.

    Given a base seed, running a preset always yields the same datasets.
    """

    @positional(3)
    def __init__(self, name, series,
                 title='',
                 horizon=2000.0,
                 output_every=1.0,
                 settings=None,
                 sweep_axis=None,
                 artifact_chosen=False):
        labels = [s.label for s in series]
        if len(set(labels)) != len(labels):
            raise exceptions.ValidationError('series', 'unique labels')
        self.name = name
        self.series = list(series)
        self.title = title
        self.horizon = float(horizon)
        self.output_every = float(output_every)
        self.settings = settings or solver.SolverSettings()
        self.sweep_axis = sweep_axis
        self.artifact_chosen = artifact_chosen

    @property
    def engine(self):
        engines = set(s.engine for s in self.series)
        return BOTH if len(engines) > 1 else engines.pop()

    @property
    def sweep_values(self):
        return [s.sweep_value for s in self.series
                if s.sweep_value is not None]

    def describe(self):
        return {'name': self.name,
                'title': self.title,
                'engine': self.engine,
                'horizon': self.horizon,
                'output_every': self.output_every,
                'sweep_axis': self.sweep_axis,
                'sweep_values': self.sweep_values,
                'series': [s.label for s in self.series],
                'artifact_chosen': self.artifact_chosen}


class Dataset(object):
    """Named columns of equal length plus their metadata.

    :param str name: Dataset name; also the CSV file stem.
    :param columns: Sequence of ``(column name, values)`` pairs.
    :param dict metadata: JSON-serializable description of the run.
    """

    def __init__(self, name, columns, metadata):
        columns = [(c, np.asarray(v)) for c, v in columns]
        if len(set(len(v) for _, v in columns)) > 1:
            raise exceptions.ValidationError('columns', 'equal lengths')
        self.name = name
        self._columns = columns
        self.metadata = metadata

    @property
    def column_names(self):
        return [c for c, _ in self._columns]

    def column(self, name):
        for c, values in self._columns:
            if c == name:
                return values
        raise KeyError(name)

    def __len__(self):
        return len(self._columns[0][1]) if self._columns else 0

    @property
    def filename(self):
        return '%s.csv' % self.name

    def to_dict(self):
        return {'name': self.name,
                'file': self.filename,
                'columns': self.column_names,
                'rows': len(self),
                'metadata': self.metadata}

    @classmethod
    def from_dict(cls, doc, columns=None):
        """Rebuild a dataset from :py:meth:`to_dict` output.

        :param columns: Mapping of column name to values; without it the
            columns are empty placeholders.
        """
        columns = columns or {}
        return cls(doc['name'],
                   [(c, columns.get(c, ())) for c in doc['columns']],
                   doc['metadata'])

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        if (self.name, self.column_names, self.metadata) != (
                other.name, other.column_names, other.metadata):
            return False
        return all(np.array_equal(a, other.column(c))
                   for c, a in self._columns)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result


def _t95(t, i, asymptote):
    """First sample time at which ``i`` reaches 95% of its plateau."""
    reached = np.nonzero(i >= 0.95 * asymptote)[0]
    return float(t[reached[0]]) if reached.size else None


def _base_metadata(preset, series):
    return {'preset': preset.name,
            'title': preset.title,
            'series': series.label,
            'engine': series.engine,
            'sweep_axis': preset.sweep_axis,
            'sweep_value': series.sweep_value,
            'artifact_chosen': preset.artifact_chosen,
            'code_version': containment_lab.__version__,
            'params': series.params.describe(),
            'curve': series.curve.describe()}


def _run_ode(preset, series):
    settings = preset.settings.replace(
        t_max=series.t_max or preset.horizon,
        output_every=preset.output_every)
    system = systems.build_system(series.model, series.params, series.curve,
                                  beta=series.beta, zeta=series.zeta)
    traj = solver.integrate(system, system.initial_state, settings)

    meta = _base_metadata(preset, series)
    meta.update({'model': series.model,
                 'seed': None,
                 'solver': settings.describe(),
                 'fingerprint': traj.params_fingerprint,
                 'i_at_horizon': float(traj.i[-1])})

    curve = series.curve
    if (series.model == 'learning' and
            isinstance(curve, learning.PaperFamily) and curve.alpha > 1):
        report = bounds.theorem1_report(series.params, curve)
        asymptote = report.upper_asymptote
        meta['asymptote'] = report.describe()['upper_asymptote']
        meta['paper_rounded_bound'] = report.paper_rounded_bound
        if not math.isinf(asymptote):
            meta['t95'] = _t95(traj.t, traj.i, asymptote)

    columns = [(c, traj.column(c)) for c in traj.column_names]
    return Dataset('%s-%s' % (preset.name, series.label), columns, meta)


def _run_mc(preset, series, base_seed, workers):
    config = simulator.SimConfig(series.params, series.curve,
                                 scenario=series.scenario,
                                 t_max=series.t_max or preset.horizon,
                                 output_every=preset.output_every)
    ensemble = simulator.run_ensemble(config, series.runs, base_seed,
                                      workers=workers)

    simulation = config.describe()
    del simulation['seed']
    meta = _base_metadata(preset, series)
    meta.update({'seed': base_seed,
                 'seeds': ensemble.seeds,
                 'simulation': simulation,
                 'runs': ensemble.n_runs,
                 'i_at_horizon': float(ensemble.mean_i[-1])})

    n_runs = np.full(ensemble.t.size, ensemble.n_runs, dtype=np.int64)
    columns = list(zip(formats.ENSEMBLE_COLUMNS,
                       (ensemble.t, ensemble.mean_i, ensemble.stderr_i,
                        n_runs)))
    return Dataset('%s-%s' % (preset.name, series.label), columns, meta)


@positional(1)
def run_preset(preset, base_seed=0, workers=1):
    """Execute every series of a preset.

    Every Monte-Carlo series of the preset shares ``base_seed``, so ensembles
    of different scenarios are driven by the same random streams.

    :raises containment_lab.exceptions.PresetError: wrapping the first engine
        failure together with the preset and series that raised it.
    :rtype: list of Dataset
    """
    datasets = []
    for series in preset.series:
        _logger.info('preset %s: running %s series %s',
                     preset.name, series.engine, series.label)
        try:
            if series.engine == ODE:
                datasets.append(_run_ode(preset, series))
            else:
                datasets.append(_run_mc(preset, series, base_seed, workers))
        except exceptions.PresetError:
            raise
        except exceptions.ContainmentLabException as e:
            raise exceptions.PresetError(preset.name, series.label, e)
    return datasets


def preset_classical():
    """Learning disabled: the simple epidemic saturating at ``k``."""
    params = section_iv_params()
    series = [Series('classical', ODE, params, learning.Disabled(),
                     model='classical')]
    return ExperimentPreset('fig1', series,
                            title='No learning, classical epidemic model',
                            horizon=600.0,
                            output_every=0.1)


def preset_alpha_sweep():
    params = section_iv_params()
    series = [Series('alpha-%s' % a, ODE, params,
                     learning.PaperFamily(A=1000.0, alpha=a),
                     sweep_value=a)
              for a in (0.5, 1.0, 2.0, 3.0)]
    return ExperimentPreset('fig2', series,
                            title='Amplification factor sweep',
                            sweep_axis='alpha')


def preset_A_sweep():
    params = section_iv_params()
    series = [Series('A-%d' % a, ODE, params,
                     learning.PaperFamily(A=float(a), alpha=2.0),
                     sweep_value=a)
              for a in (100, 1000, 10000)]
    return ExperimentPreset('fig3', series,
                            title='Deceleration factor sweep',
                            sweep_axis='A',
                            artifact_chosen=True)


def preset_lambda_sweep():
    """Sampling probability sweep with a ``lambda = 0`` control.

    Without samples nothing is learned and growth is exponential, so the
    control series stops at 40 hours before the state overflows.
    """
    curve = learning.PaperFamily(A=1000.0, alpha=2.0)
    series = [Series('lambda-%s' % lam, ODE, section_iv_params(lam=lam),
                     curve, sweep_value=lam)
              for lam in (0.0001, 0.001, 0.01)]
    series.append(Series('lambda-0-control', ODE, section_iv_params(lam=0.0),
                         curve, t_max=40.0, sweep_value=0.0))
    return ExperimentPreset('fig4', series,
                            title='Sampling probability sweep',
                            sweep_axis='lambda',
                            artifact_chosen=True)


@positional()
def preset_simulation_comparison(name='fig5',
                                 scenarios=(simulator.CONSTANT_P,
                                            simulator.DEPLETING_P),
                                 with_ode=True,
                                 runs=100):
    """Monte-Carlo ensembles of the worm next to the ODE solution.

    ``fig5`` compares the two hit-probability scenarios, ``fig6`` the
    constant hit probability ensemble with the ODE.
    """
    params = section_iv_params()
    curve = learning.PaperFamily(A=1000.0, alpha=2.0)
    series = [Series(s, MC, params, curve, scenario=s, runs=runs)
              for s in scenarios]
    if with_ode:
        series.append(Series('ode', ODE, params, curve))
    return ExperimentPreset(name, series,
                            title='Simulation against the ODE model')


def _fig6():
    return preset_simulation_comparison(name='fig6',
                                        scenarios=(simulator.CONSTANT_P,))


PRESETS = {'fig1': preset_classical,
           'fig2': preset_alpha_sweep,
           'fig3': preset_A_sweep,
           'fig4': preset_lambda_sweep,
           'fig5': preset_simulation_comparison,
           'fig6': _fig6}


def get_preset(name):
    """Return the preset registered under ``name``.

    :raises containment_lab.exceptions.UnknownPreset: for unknown names.
    """
    try:
        return PRESETS[name]()
    except KeyError:
        raise exceptions.UnknownPreset(name, sorted(PRESETS))


def _swept(axis, value, params, curve):
    if axis == 'lambda':
        return params.replace(lam=value), curve
    if axis == 'eta':
        return params.replace(eta=value), curve
    if not isinstance(curve, learning.PaperFamily):
        raise exceptions.ValidationError(
            'axis', '%s sweeps need the paper learning curve' % axis)
    if axis == 'alpha':
        return params, learning.PaperFamily(A=curve.A, alpha=value)
    return params, learning.PaperFamily(A=value, alpha=curve.alpha)


@positional(3)
def sweep(axis, values, params, curve=None, settings=None, model='learning',
          beta=None, zeta=0.0):
    """Build an ad-hoc ODE preset varying one parameter.

    :param str axis: One of ``alpha``, ``A``, ``lambda`` or ``eta``.
    :param values: The values taken by the axis, in order.
    :param params: Base scenario parameters.
    :param curve: Base learning curve.
    :param settings: Solver settings; ``t_max`` and ``output_every`` are the
        preset horizon and cadence.
    :rtype: ExperimentPreset
    """
    if axis not in SWEEP_AXES:
        raise exceptions.ValidationError('axis',
                                         'one of %s' % ', '.join(SWEEP_AXES))
    if not values:
        raise exceptions.ValidationError('values', 'at least one value')
    curve = curve or learning.Disabled()
    settings = settings or solver.SolverSettings()

    series = []
    for value in values:
        p, c = _swept(axis, value, params, curve)
        series.append(Series('%s-%s' % (axis, value), ODE, p, c,
                             model=model, beta=beta, zeta=zeta,
                             sweep_value=value))
    return ExperimentPreset('sweep-%s' % axis, series,
                            title='Sweep over %s' % axis,
                            horizon=settings.t_max,
                            output_every=settings.output_every,
                            settings=settings,
                            sweep_axis=axis,
                            artifact_chosen=True)


def write_datasets(directory, datasets, extra=None):
    """Write one CSV per dataset and a manifest describing all of them.

    :returns: Path of the manifest.
    """
    for ds in datasets:
        formats.write_csv(os.path.join(directory, ds.filename),
                          ds.column_names,
                          [ds.column(c) for c in ds.column_names])
    doc = dict(extra or {})
    doc['datasets'] = [ds.to_dict() for ds in datasets]
    return formats.write_json(os.path.join(directory, MANIFEST), doc)


def read_dataset(directory, name):
    """Load a dataset written by :py:func:`write_datasets`."""
    manifest = formats.read_json(os.path.join(directory, MANIFEST))
    for doc in manifest.get('datasets', ()):
        if doc['name'] == name:
            _, columns = formats.read_csv(os.path.join(directory,
                                                       doc['file']))
            return Dataset.from_dict(doc, columns)
    raise KeyError(name)
