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
"""The ``containment-lab`` command.

Exit codes: 0 on success, 2 for configuration errors, 3 for numerical
failures and 4 for output errors. Diagnostics go to stderr; stdout only ever
carries the document printed by ``--print-config``.
"""

import argparse
import json
import logging
import os
import sys

import numpy as np

import containment_lab
from containment_lab import _utils as utils
from containment_lab import bounds
from containment_lab import exceptions
from containment_lab import experiments
from containment_lab import formats
from containment_lab import loading
from containment_lab import simulator
from containment_lab import solver


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_OUTPUT = 4

TRAJECTORY_FILE = 'trajectory.csv'
RUNS_FILE = 'runs.csv'
ENSEMBLE_FILE = 'ensemble.csv'
BOUNDS_FILE = 'bounds.json'
LOWER_BOUND_FILE = 'lower_bound.csv'
MANIFEST_FILE = experiments.MANIFEST

_logger = utils.get_logger(__name__)


def exit_code(exc):
    """Map an exception to the process exit code."""
    if isinstance(exc, exceptions.PresetError):
        exc = exc.original
    if isinstance(exc, exceptions.NumericalFailure):
        return EXIT_NUMERICAL
    if isinstance(exc, exceptions.OutputError):
        return EXIT_OUTPUT
    return EXIT_CONFIG


def _setup_logging(argv):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: '
                                           '%(message)s'))
    logger = utils.get_logger('containment_lab')
    if '--debug' in argv:
        logger.setLevel(logging.DEBUG)
    elif '--quiet' in argv:
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)
    logger.addHandler(handler)
    return logger, handler


def _out_dir(cfg):
    out = cfg.run['out']
    try:
        if not os.path.isdir(out):
            os.makedirs(out)
    except OSError as e:
        raise exceptions.OutputError(out, e)
    return out


def _config_snapshot(cfg):
    """The resolved configuration minus values that never change results."""
    doc = cfg.to_dict()
    for key in ('out', 'quiet', 'threads'):
        doc['run'].pop(key, None)
    return doc


def _manifest(cfg, **kwargs):
    doc = {'code_version': containment_lab.__version__,
           'config': _config_snapshot(cfg)}
    doc.update(kwargs)
    return doc


def _require_learning(cfg, command):
    if cfg.model.name != 'learning':
        raise exceptions.ConfigError('%s needs the learning model, not %s' %
                                     (command, cfg.model.name))


def cmd_solve(args, cfg):
    """Integrate the configured model and write its trajectory."""
    system = cfg.system
    traj = solver.integrate(system, system.initial_state, cfg.settings)
    out = _out_dir(cfg)
    formats.write_trajectory(os.path.join(out, TRAJECTORY_FILE), traj)
    formats.write_json(os.path.join(out, MANIFEST_FILE),
                       _manifest(cfg,
                                 files=[TRAJECTORY_FILE],
                                 fingerprint=traj.params_fingerprint,
                                 i_at_horizon=float(traj.i[-1])))
    _logger.info('%s: i(%g) = %.6g', system.name, traj.t[-1], traj.i[-1])
    return EXIT_OK


def cmd_simulate(args, cfg):
    """Run the Monte-Carlo ensemble and write per-run and mean series."""
    _require_learning(cfg, 'simulate')
    seed = cfg.run['seed']
    ensemble = simulator.run_ensemble(cfg.sim_config(seed),
                                      cfg.simulation['runs'], seed,
                                      workers=cfg.run['threads'])
    out = _out_dir(cfg)
    formats.write_run_summaries(os.path.join(out, RUNS_FILE), ensemble)
    formats.write_ensemble(os.path.join(out, ENSEMBLE_FILE), ensemble)
    formats.write_json(os.path.join(out, MANIFEST_FILE),
                       _manifest(cfg,
                                 files=[RUNS_FILE, ENSEMBLE_FILE],
                                 base_seed=seed,
                                 runs=ensemble.n_runs,
                                 seeds=ensemble.seeds))
    _logger.info('%d runs: mean i(%g) = %.6g +- %.2g', ensemble.n_runs,
                 ensemble.t[-1], ensemble.mean_i[-1], ensemble.stderr_i[-1])
    return EXIT_OK


def _implicit_time_error(cfg, report, traj):
    params = cfg.params
    if report.regime == bounds.ONE or params.gamma == 0:
        return None
    j = np.asarray(traj.j, dtype=float)
    if np.any(np.diff(j) < 0):
        return None
    times = bounds.implicit_times(params, cfg.curve, j)
    t = np.asarray(traj.t, dtype=float)
    return float(np.max(np.abs(times - t) / np.maximum(t, 1.0)))


def cmd_bounds(args, cfg):
    """Evaluate the closed-form bounds and check a trajectory against them.

    The trajectory is read from ``--trajectory`` when given and integrated
    from the configuration otherwise.
    """
    _require_learning(cfg, 'bounds')
    report = bounds.theorem1_report(cfg.params, cfg.curve)

    if args.trajectory:
        traj = formats.read_trajectory(args.trajectory)
        source = os.path.basename(args.trajectory)
    else:
        system = cfg.system
        traj = solver.integrate(system, system.initial_state, cfg.settings)
        source = 'integrated'

    doc = report.describe()
    doc['trajectory'] = source
    doc['i_at_horizon'] = float(traj.i[-1])
    doc['first_integral_residual'] = None
    doc['implicit_time_error'] = None
    if cfg.params.gamma > 0:
        doc['first_integral_residual'] = bounds.first_integral_residual(
            traj, cfg.params, cfg.curve)
        doc['implicit_time_error'] = _implicit_time_error(cfg, report, traj)

    out = _out_dir(cfg)
    files = [BOUNDS_FILE]
    if report.lower_bound_fn is not None:
        lower = np.atleast_1d(report.lower_bound_fn(traj.t))
        formats.write_csv(os.path.join(out, LOWER_BOUND_FILE),
                          ('t', 'lower_bound', 'i'),
                          [traj.t, lower, traj.i])
        doc['lower_bound_holds'] = bool(np.all(lower <= traj.i))
        files.append(LOWER_BOUND_FILE)

    formats.write_json(os.path.join(out, BOUNDS_FILE),
                       _manifest(cfg, report=doc, files=files))
    _logger.info('regime %s, asymptote %s', report.regime,
                 doc['upper_asymptote'])
    return EXIT_OK


def _write_presets(cfg, presets, seed):
    datasets = []
    for preset in presets:
        datasets.extend(experiments.run_preset(preset, base_seed=seed,
                                               workers=cfg.run['threads']))
    out = _out_dir(cfg)
    experiments.write_datasets(
        out, datasets,
        extra={'code_version': containment_lab.__version__,
               'base_seed': seed,
               'presets': [p.describe() for p in presets]})
    _logger.info('wrote %d datasets to %s', len(datasets), out)
    return EXIT_OK


def cmd_figures(args, cfg):
    """Run the named figure presets."""
    presets = [experiments.get_preset(name) for name in args.names]
    return _write_presets(cfg, presets, cfg.run['seed'])


def _parse_values(text):
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise exceptions.ValidationError('values',
                                         'comma separated numbers')


def cmd_sweep(args, cfg):
    """Integrate the configured model once per value of one parameter."""
    preset = experiments.sweep(args.axis, _parse_values(args.values),
                               cfg.params,
                               curve=cfg.curve,
                               settings=cfg.settings,
                               model=cfg.model.name,
                               beta=cfg.model.beta,
                               zeta=cfg.model.zeta)
    return _write_presets(cfg, [preset], cfg.run['seed'])


COMMANDS = {'solve': cmd_solve,
            'simulate': cmd_simulate,
            'bounds': cmd_bounds,
            'figures': cmd_figures,
            'sweep': cmd_sweep}


def build_parser(argv):
    """Build the argument parser for ``argv``.

    :returns: ``(parser, config document)``
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--debug',
                        action='store_true',
                        help='Log debugging output to stderr')
    common.add_argument('--print-config',
                        action='store_true',
                        help='Print the resolved configuration and exit')
    doc = loading.register_argparse_arguments(common, argv)

    parser = argparse.ArgumentParser(
        prog='containment-lab',
        description='Learning-based containment of scanning worms.')
    parser.add_argument('--version',
                        action='version',
                        version=containment_lab.__version__)
    subparsers = parser.add_subparsers(dest='command', metavar='<command>')
    subparsers.required = True

    for name, func in sorted(COMMANDS.items()):
        sub = subparsers.add_parser(name, parents=[common],
                                    help=func.__doc__.splitlines()[0])
        if name == 'bounds':
            sub.add_argument('--trajectory',
                             metavar='<csv>',
                             help='Check this trajectory instead of '
                                  'integrating the configured model')
        elif name == 'figures':
            sub.add_argument('names',
                             nargs='+',
                             metavar='<preset>',
                             help='Presets to run: %s' %
                                  ', '.join(sorted(experiments.PRESETS)))
        elif name == 'sweep':
            sub.add_argument('--axis',
                             required=True,
                             choices=experiments.SWEEP_AXES,
                             help='Parameter to vary')
            sub.add_argument('--values',
                             required=True,
                             metavar='<v1,v2,...>',
                             help='Comma separated values of the axis')

    return parser, doc


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    logger, handler = _setup_logging(argv)
    try:
        try:
            parser, doc = build_parser(argv)
            args = parser.parse_args(argv)
            cfg = loading.load_from_argparse_arguments(args, doc)
        except exceptions.ContainmentLabException as e:
            _logger.error('%s', e)
            return exit_code(e)

        if cfg.run['quiet'] and not args.debug:
            logger.setLevel(logging.WARNING)

        if args.print_config:
            sys.stdout.write(json.dumps(cfg.to_dict(), sort_keys=True,
                                        indent=2) + '\n')
            return EXIT_OK

        try:
            return COMMANDS[args.command](args, cfg)
        except exceptions.ContainmentLabException as e:
            _logger.error('%s', e)
            return exit_code(e)
    finally:
        logger.removeHandler(handler)


if __name__ == '__main__':
    sys.exit(main())
