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
"""Loaders for the configuration sections that are not plugins."""

from containment_lab import _utils as utils
from containment_lab import exceptions
from containment_lab import simulator
from containment_lab import solver
from containment_lab.loading import base
from containment_lab.loading import opts


__all__ = ('Solver',
           'Simulation',
           'Run',
           'OUTPUT_FORMATS')

OUTPUT_FORMATS = ('csv',)


def _u64(value):
    value = utils.integer(value)
    if not 0 <= value < 2 ** 64:
        raise ValueError('seed out of range')
    return value


class Solver(base.BaseLoader):

    @property
    def plugin_class(self):
        return solver.SolverSettings

    def get_options(self):
        return [
            opts.Opt('method',
                     default=solver.RK45_ADAPTIVE,
                     metavar='<method>',
                     help='Integrator: rk45 (adaptive) or rk4 (fixed step)'),
            opts.Opt('dt',
                     type=float,
                     default=0.01,
                     metavar='<hours>',
                     help='Step of rk4, first step of rk45'),
            opts.Opt('rel-tol',
                     type=float,
                     default=1e-9,
                     metavar='<tolerance>',
                     help='Relative tolerance of rk45'),
            opts.Opt('abs-tol',
                     type=float,
                     default=1e-12,
                     metavar='<tolerance>',
                     help='Absolute tolerance of rk45'),
            opts.Opt('t-max',
                     type=float,
                     default=2000.0,
                     metavar='<hours>',
                     help='Horizon of integrations and simulations'),
            opts.Opt('output-every',
                     type=float,
                     default=1.0,
                     metavar='<hours>',
                     help='Output sampling interval'),
        ]


class Simulation(base.BaseLoader):
    """Monte-Carlo options; the resulting mapping feeds ``SimConfig``."""

    @property
    def plugin_class(self):
        return dict

    def get_options(self):
        return [
            opts.Opt('scenario',
                     default=simulator.CONSTANT_P,
                     metavar='<scenario>',
                     help='constant-p or depleting-p'),
            opts.Opt('runs',
                     type=utils.integer,
                     default=100,
                     metavar='<runs>',
                     help='Number of Monte-Carlo runs'),
            opts.Opt('f-terminate',
                     type=float,
                     default=1.0,
                     metavar='<probability>',
                     help='Filtering probability that counts as the true '
                          'signature'),
            opts.Opt('engine',
                     default=simulator.THINNED,
                     metavar='<engine>',
                     help='thinned or scan'),
        ]

    def create_plugin(self, **kwargs):
        if kwargs['scenario'] not in simulator.SCENARIOS:
            raise exceptions.ValidationError(
                'scenario', 'one of %s' % ', '.join(simulator.SCENARIOS))
        if kwargs['engine'] not in simulator.ENGINES:
            raise exceptions.ValidationError(
                'engine', 'one of %s' % ', '.join(simulator.ENGINES))
        if kwargs['runs'] < 1:
            raise exceptions.ValidationError('runs', 'runs >= 1')
        if not 0 < kwargs['f_terminate'] <= 1:
            raise exceptions.ValidationError('f-terminate',
                                             '0 < f-terminate <= 1')
        return dict(kwargs)


class Run(base.BaseLoader):
    """Seed, parallelism and output options shared by all commands."""

    @property
    def plugin_class(self):
        return dict

    def get_options(self):
        return [
            opts.Opt('seed',
                     type=_u64,
                     default=0,
                     metavar='<u64>',
                     help='Base seed of all random streams'),
            opts.Opt('threads',
                     type=utils.integer,
                     default=1,
                     metavar='<n>',
                     help='Maximum number of worker processes'),
            opts.Opt('quiet',
                     type=utils.to_bool,
                     default=False,
                     help='Only report warnings and errors'),
            opts.Opt('out',
                     default='.',
                     metavar='<dir>',
                     help='Output directory'),
            opts.Opt('format',
                     default='csv',
                     metavar='<format>',
                     help='Output format'),
        ]

    def create_plugin(self, **kwargs):
        if kwargs['threads'] < 1:
            raise exceptions.ValidationError('threads', 'threads >= 1')
        if kwargs['format'] not in OUTPUT_FORMATS:
            raise exceptions.ValidationError(
                'format', 'one of %s' % ', '.join(OUTPUT_FORMATS))
        return dict(kwargs)
