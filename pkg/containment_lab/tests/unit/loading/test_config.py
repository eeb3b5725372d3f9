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
import io
import json
import os
import uuid

import fixtures

from containment_lab import exceptions
from containment_lab import learning
from containment_lab import loading
from containment_lab.loading import config
from containment_lab import simulator
from containment_lab import solver
from containment_lab import systems
from containment_lab.tests.unit.loading import utils


class ResolveTests(utils.TestCase):

    def env(self, name, value=None):
        if value is not None:
            # environment variables are always strings
            value = str(value)

        return self.useFixture(fixtures.EnvironmentVariable(name, value))

    def test_defaults(self):
        cfg = loading.resolve_config()

        self.assertEqual(self.params(), cfg.params)
        self.assertEqual(learning.PaperFamily(A=1000.0, alpha=2.0), cfg.curve)
        self.assertEqual(solver.SolverSettings(), cfg.settings)
        self.assertEqual({'scenario': simulator.CONSTANT_P,
                          'runs': 100,
                          'f_terminate': 1.0,
                          'engine': simulator.THINNED},
                         cfg.simulation)
        self.assertEqual({'seed': 0,
                          'threads': 1,
                          'quiet': False,
                          'out': '.',
                          'format': 'csv'},
                         cfg.run)
        self.assertIsInstance(cfg.system, systems.LearningBasedSystem)

    def test_to_dict(self):
        values = loading.resolve_config({'solver': {'t-max': 10}}).to_dict()
        self.assertEqual(['learning', 'model', 'run', 'simulation', 'solver'],
                         sorted(values))
        self.assertEqual('learning', values['model']['type'])
        self.assertEqual(0.001, values['model']['lambda'])
        self.assertEqual('paper', values['learning']['kind'])
        self.assertEqual(10.0, values['solver']['t-max'])
        self.assertEqual(0, values['run']['seed'])

    def test_precedence(self):
        self.env('CONTAINMENT_LAB_ETA', 20)

        cfg = loading.resolve_config()
        self.assertEqual(20.0, cfg.params.eta)

        doc = {'model': {'eta': 30}}
        cfg = loading.resolve_config(doc)
        self.assertEqual(30.0, cfg.params.eta)

        cfg = loading.resolve_config(doc, {'eta': '40', 'seed': None})
        self.assertEqual(40.0, cfg.params.eta)
        self.assertEqual(0, cfg.run['seed'])

    def test_dest_is_accepted(self):
        cfg = loading.resolve_config({'model': {'lam': 0.01},
                                      'solver': {'output_every': 2}})
        self.assertEqual(0.01, cfg.params.lam)
        self.assertEqual(2.0, cfg.settings.output_every)

    def test_model_selection(self):
        cfg = loading.resolve_config({'model': {'type': 'classical',
                                                'beta': 1e-6}})
        self.assertEqual('classical', cfg.model.name)
        self.assertEqual(1e-6, cfg.model.beta)
        self.assertIsInstance(cfg.system, systems.ClassicalSystem)

        cfg = loading.resolve_config(cli_values={'model': 'km',
                                                 'zeta': '0.5'})
        self.assertEqual(0.5, cfg.model.zeta)
        self.assertIsInstance(cfg.system, systems.KermackMcKendrickSystem)

    def test_model_from_env(self):
        self.env('CONTAINMENT_LAB_MODEL', 'classical')
        self.env('CONTAINMENT_LAB_LEARNING', 'disabled')
        cfg = loading.resolve_config()
        self.assertEqual('classical', cfg.model.name)
        self.assertEqual(learning.Disabled(), cfg.curve)

    def test_unknown_plugin(self):
        e = self.assertRaises(exceptions.NoMatchingPlugin,
                              loading.resolve_config,
                              {'learning': {'kind': 'logistic'}})
        self.assertIsInstance(e, exceptions.ConfigError)

    def test_unknown_section(self):
        e = self.assertRaises(exceptions.UnknownConfigKeys,
                              loading.resolve_config, {'solvr': {}})
        self.assertEqual(['solvr'], e.names)

    def test_unknown_key(self):
        e = self.assertRaises(exceptions.UnknownConfigKeys,
                              loading.resolve_config,
                              {'solver': {'tmax': 5}, 'run': {'sed': 1}})
        self.assertEqual(['run.sed', 'solver.tmax'], e.names)

    def test_options_of_other_models_are_unknown(self):
        self.assertRaises(exceptions.UnknownConfigKeys,
                          loading.resolve_config,
                          {'model': {'zeta': 0.1}})

    def test_invalid_values(self):
        for doc, field in (({'model': {'eta': 'fast'}}, 'eta'),
                           ({'model': {'eta': -1}}, 'eta'),
                           ({'model': {'k': 350000.7}}, 'k'),
                           ({'model': {'n': '4294967296.5'}}, 'n'),
                           ({'run': {'seed': 7.5}}, 'seed'),
                           ({'simulation': {'runs': 2.5}}, 'runs'),
                           ({'run': {'seed': -1}}, 'seed'),
                           ({'run': {'threads': 0}}, 'threads'),
                           ({'simulation': {'scenario': 'x'}}, 'scenario'),
                           ({'simulation': {'runs': 0}}, 'runs'),
                           ({'solver': {'method': 'euler'}}, 'method')):
            e = self.assertRaises(exceptions.ValidationError,
                                  loading.resolve_config, doc)
            self.assertEqual(field, e.field)

    def test_whole_float_counts(self):
        cfg = loading.resolve_config({'model': {'k': 350000.0, 'n': '1e6'}})
        self.assertEqual(350000, cfg.params.k)
        self.assertEqual(10 ** 6, cfg.params.n)
        self.assertIsInstance(cfg.params.k, int)

    def test_bad_documents(self):
        self.assertRaises(exceptions.ConfigError,
                          loading.resolve_config, [1])
        self.assertRaises(exceptions.ConfigError,
                          loading.resolve_config, {'solver': 5})

    def test_sim_config(self):
        cfg = loading.resolve_config({'run': {'seed': 7},
                                      'simulation': {'engine': 'scan'},
                                      'solver': {'t-max': 50}})
        sim = cfg.sim_config()
        self.assertEqual(7, sim.seed)
        self.assertEqual(simulator.SCAN, sim.engine)
        self.assertEqual(50.0, sim.t_max)
        self.assertEqual(9, cfg.sim_config(seed=9).seed)

    @utils.mock_plugin()
    def test_section_loader(self, m):
        name = uuid.uuid4().hex
        found, loader = config.section_loader('model', {}, {'model': name})
        self.assertEqual(name, found)
        self.assertIsInstance(loader, utils.MockLoader)
        m.assert_called_once_with(loading.MODEL_NAMESPACE, name)


class LoadFileTests(utils.TestCase):

    def setUp(self):
        super(LoadFileTests, self).setUp()
        self.tmp = self.useFixture(fixtures.TempDir()).path

    def _write(self, text):
        path = os.path.join(self.tmp, 'config.json')
        with io.open(path, 'w', encoding='utf-8') as fh:
            fh.write(text)
        return path

    def test_load(self):
        doc = {'learning': {'kind': 'paper', 'alpha': 3}}
        path = self._write(json.dumps(doc))
        self.assertEqual(doc, loading.load_config_file(path))

    def test_missing_file(self):
        self.assertRaises(exceptions.ConfigError, loading.load_config_file,
                          os.path.join(self.tmp, 'nothing.json'))

    def test_not_json(self):
        path = self._write(u'model: learning')
        self.assertRaises(exceptions.ConfigError, loading.load_config_file,
                          path)

    def test_unknown_section(self):
        path = self._write(json.dumps({'output': {}}))
        self.assertRaises(exceptions.UnknownConfigKeys,
                          loading.load_config_file, path)
