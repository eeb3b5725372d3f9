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
import os

import fixtures
import numpy as np

from containment_lab import exceptions
from containment_lab import formats
from containment_lab import simulator
from containment_lab import solver
from containment_lab.tests.unit import utils


class CsvTests(utils.TestCase):

    def setUp(self):
        super(CsvTests, self).setUp()
        self.tmp = self.useFixture(fixtures.TempDir()).path

    def _read_text(self, path):
        with io.open(path, 'r', encoding='utf-8', newline='') as fh:
            return fh.read()

    def test_layout(self):
        path = os.path.join(self.tmp, 'a.csv')
        formats.write_csv(path, ['t', 'i', 'n', 'ok'],
                          [[0.0, 0.5], [0.1, 1.0 / 3.0], [3, 4],
                           [True, False]])
        self.assertEqual('t,i,n,ok\n'
                         '0,0.10000000000000001,3,true\n'
                         '0.5,0.33333333333333331,4,false\n',
                         self._read_text(path))

    def test_values_survive(self):
        path = os.path.join(self.tmp, 'b.csv')
        values = np.array([np.pi, 1e-300, 82.490722656250011, 2.0 ** 32])
        formats.write_csv(path, ['x'], [values])
        header, columns = formats.read_csv(path)
        self.assertEqual(['x'], header)
        self.assertTrue(np.array_equal(values, columns['x']))

    def test_text_column(self):
        path = os.path.join(self.tmp, 'c.csv')
        formats.write_csv(path, ['run', 'termination'],
                          [[0, 1], ['horizon', 'contained']])
        _, columns = formats.read_csv(path)
        self.assertEqual(['horizon', 'contained'], columns['termination'])

    def test_unequal_columns(self):
        self.assertRaises(ValueError, formats.write_csv,
                          os.path.join(self.tmp, 'd.csv'), ['a', 'b'],
                          [[1], [1, 2]])

    def test_unwritable(self):
        path = os.path.join(self.tmp, 'missing', 'e.csv')
        e = self.assertRaises(exceptions.OutputError, formats.write_csv,
                              path, ['a'], [[1]])
        self.assertEqual(path, e.path)

    def test_empty_file(self):
        path = os.path.join(self.tmp, 'f.csv')
        io.open(path, 'w').close()
        self.assertRaises(exceptions.OutputError, formats.read_csv, path)


class JsonTests(utils.TestCase):

    def test_sorted_and_stable(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        a = formats.write_json(os.path.join(tmp, 'a.json'),
                               {'b': 1, 'a': [0.1, 'x']})
        b = formats.write_json(os.path.join(tmp, 'b.json'),
                               {'a': [0.1, 'x'], 'b': 1})
        with io.open(a, 'rb') as fa, io.open(b, 'rb') as fb:
            self.assertEqual(fa.read(), fb.read())
        self.assertEqual({'a': [0.1, 'x'], 'b': 1}, formats.read_json(a))

    def test_invalid(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        path = os.path.join(tmp, 'bad.json')
        with io.open(path, 'w') as fh:
            fh.write(u'{"a": ')
        self.assertRaises(exceptions.ConfigError, formats.read_json, path)


class TrajectoryFileTests(utils.TestCase):

    def test_round_trip(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        traj = solver.Trajectory([0.0, 1.0, 2.0],
                                 {'i': [1.0, 2.5, 3.0],
                                  'j': [0.0, 0.1, 0.3],
                                  'f': [0.0, 0.01, 0.02],
                                  'r': [0.0, 0.5, 1.0]})
        path = formats.write_trajectory(os.path.join(tmp, 'tr.csv'), traj)
        header, _ = formats.read_csv(path)
        self.assertEqual(['t', 'i', 'j', 'f', 'r'], header)

        again = formats.read_trajectory(path)
        self.assertEqual(traj.column_names, again.column_names)
        for name in traj.column_names:
            self.assertTrue(np.array_equal(traj.column(name),
                                           again.column(name)))

    def test_missing_columns(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        path = os.path.join(tmp, 'partial.csv')
        formats.write_csv(path, ['t', 'i'], [[0.0], [1.0]])
        e = self.assertRaises(exceptions.ConfigError,
                              formats.read_trajectory, path)
        self.assertIn('j, f', str(e))

    def test_malformed_rows(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        for name, text in (('text.csv', u't,i,j,f\n0,1,0,0\n1,x,1,0\n'),
                           ('ragged.csv', u't,i,j,f\n0,1,0,0\n1,2\n'),
                           ('header.csv', u't,i,j,f\n')):
            path = os.path.join(tmp, name)
            with io.open(path, 'w', encoding='utf-8') as fh:
                fh.write(text)
            self.assertRaises(exceptions.ConfigError,
                              formats.read_trajectory, path)

    def test_trailing_blank_line(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        path = os.path.join(tmp, 'blank.csv')
        with io.open(path, 'w', encoding='utf-8') as fh:
            fh.write(u't,i,j,f\n0,1,0,0\n1,2,1,0\n\n')
        self.assertEqual(2, len(formats.read_trajectory(path)))


class EnsembleFileTests(utils.TestCase):

    def test_ensemble_and_runs(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        config = simulator.SimConfig(self.params(n=2000, k=200, eta=50.0,
                                                 lam=0.01),
                                     self.curve(A=10.0, alpha=2.0),
                                     t_max=20.0, output_every=5.0)
        ensemble = simulator.run_ensemble(config, 3, 5)

        path = formats.write_ensemble(os.path.join(tmp, 'ens.csv'), ensemble)
        header, columns = formats.read_csv(path)
        self.assertEqual(list(formats.ENSEMBLE_COLUMNS), header)
        self.assertEqual([0.0, 5.0, 10.0, 15.0, 20.0], list(columns['t']))
        self.assertEqual([3.0] * 5, list(columns['n_runs']))

        path = formats.write_run_summaries(os.path.join(tmp, 'runs.csv'),
                                           ensemble)
        header, columns = formats.read_csv(path)
        self.assertEqual(list(formats.RUN_COLUMNS), header)
        self.assertEqual([0.0, 1.0, 2.0], list(columns['run']))
        self.assertEqual([float(s) for s in ensemble.seeds],
                         list(columns['seed']))
