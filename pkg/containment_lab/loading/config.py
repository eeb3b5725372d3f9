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
"""JSON configuration files and their resolution into a RunConfig.

A config file is a JSON object whose keys are sections::

    {"model": {"type": "learning", "eta": 10188},
     "learning": {"kind": "paper", "A": 1000, "alpha": 2},
     "solver": {"t-max": 2000},
     "run": {"seed": 7}}

The ``model`` and ``learning`` sections select a plugin with their ``type``
and ``kind`` keys; every other key must be an option of the selected plugin
or section. A value is taken from the first of: a command line flag, the
config file, the ``CONTAINMENT_LAB_<DEST>`` environment variable and the
option default.
"""

import copy
import os

from containment_lab import _utils as utils
from containment_lab import exceptions
from containment_lab import formats
from containment_lab import simulator
from containment_lab.loading import base
from containment_lab.loading import opts
from containment_lab.loading import sections


__all__ = ('RunConfig',
           'load_file',
           'check_document',
           'section_loader',
           'resolve',
           'SECTIONS')

SECTIONS = ('model', 'learning', 'solver', 'simulation', 'run')

# section -> (selector key, entry point namespace, default plugin)
_SELECTORS = {'model': ('type', base.MODEL_NAMESPACE, 'learning'),
              'learning': ('kind', base.CURVE_NAMESPACE, 'paper')}

_FIXED = {'solver': sections.Solver,
          'simulation': sections.Simulation,
          'run': sections.Run}

_logger = utils.get_logger(__name__)


def check_document(doc):
    """Reject anything but an object of known sections holding objects."""
    if not isinstance(doc, dict):
        raise exceptions.ConfigError('A config file must hold a JSON object')
    unknown = [k for k in doc if k not in SECTIONS]
    if unknown:
        raise exceptions.UnknownConfigKeys(unknown)
    for section, values in doc.items():
        if not isinstance(values, dict):
            raise exceptions.ConfigError(
                'Config section %s must be a JSON object' % section)
    return doc


def load_file(path):
    """Read and structurally check a JSON config file.

    :raises containment_lab.exceptions.ConfigError: if the file can not be
        read, is not JSON or has unknown sections.
    """
    try:
        doc = formats.read_json(path)
    except exceptions.OutputError as e:
        raise exceptions.ConfigError('Cannot read config file %s: %s' %
                                     (path, e.original))
    _logger.debug('loaded config file %s', path)
    return check_document(doc)


def section_loader(section, doc=None, cli_values=None):
    """Return ``(plugin name, loader)`` for one section.

    The plugin name is None for sections that are not plugins.
    """
    if section in _FIXED:
        return None, _FIXED[section]()

    key, namespace, default = _SELECTORS[section]
    name = ((cli_values or {}).get(section) or
            (doc or {}).get(section, {}).get(key) or
            os.environ.get(opts.ENV_PREFIX + section.upper()) or
            default)
    return name, base.get_plugin_loader(namespace, name)


def _unknown_keys(section, loader, values):
    allowed = set()
    if section in _SELECTORS:
        allowed.add(_SELECTORS[section][0])
    for opt in loader.get_options():
        allowed.update((opt.name, opt.dest))
    return ['%s.%s' % (section, k) for k in values if k not in allowed]


def _load_section(section, name, loader, doc, cli_values):
    values = doc.get(section, {})

    raw = {}

    def getter(opt):
        v = cli_values.get(opt.dest)
        if v is None:
            v = values.get(opt.name, values.get(opt.dest))
        if v is None:
            v = opt.env_value
        if v is None:
            v = opt.default
        raw[opt.name] = (opt, v)
        return v

    obj = loader.load_from_options_getter(getter)

    resolved = {}
    if name is not None:
        resolved[_SELECTORS[section][0]] = name
    for opt, v in raw.values():
        resolved[opt.name] = opt.type(v) if v is not None else None
    return obj, resolved


class RunConfig(object):
    """The fully resolved configuration of one command.

    .. py:attribute:: model

        The selected :py:class:`ModelSpec`, holding the scenario parameters.

    .. py:attribute:: curve

        The selected learning curve.

    .. py:attribute:: settings

        :py:class:`containment_lab.solver.SolverSettings`; ``t_max`` and
        ``output_every`` also drive simulations.

    .. py:attribute:: simulation

        dict with ``scenario``, ``runs``, ``f_terminate`` and ``engine``.

    .. py:attribute:: run

        dict with ``seed``, ``threads``, ``quiet``, ``out`` and ``format``.
    """

    def __init__(self, model, curve, settings, simulation, run, values):
        self.model = model
        self.curve = curve
        self.settings = settings
        self.simulation = simulation
        self.run = run
        self._values = values
        # building the system validates model-specific parameters
        self.system = model.system(curve)

    @property
    def params(self):
        return self.model.params

    def sim_config(self, seed=None):
        """The simulator configuration of a single run."""
        return simulator.SimConfig(
            self.params, self.curve,
            scenario=self.simulation['scenario'],
            t_max=self.settings.t_max,
            f_terminate=self.simulation['f_terminate'],
            seed=self.run['seed'] if seed is None else seed,
            output_every=self.settings.output_every,
            engine=self.simulation['engine'])

    def to_dict(self):
        """Every resolved value, in config file layout."""
        return copy.deepcopy(self._values)


def resolve(doc=None, cli_values=None):
    """Resolve a config document and command line values.

    :param dict doc: A parsed config file, or None.
    :param dict cli_values: Values given on the command line, keyed by option
        dest. None values count as not given.
    :rtype: RunConfig

    :raises containment_lab.exceptions.ConfigError: if the configuration is
        invalid in any way.
    """
    doc = check_document(doc or {})
    cli_values = cli_values or {}

    loaders = dict((s, section_loader(s, doc, cli_values)) for s in SECTIONS)
    unknown = []
    for section, (_name, loader) in loaders.items():
        unknown.extend(_unknown_keys(section, loader, doc.get(section, {})))
    if unknown:
        raise exceptions.UnknownConfigKeys(unknown)

    loaded, values = {}, {}
    for section in SECTIONS:
        name, loader = loaders[section]
        loaded[section], values[section] = _load_section(
            section, name, loader, doc, cli_values)

    return RunConfig(loaded['model'], loaded['learning'], loaded['solver'],
                     loaded['simulation'], loaded['run'], values)
