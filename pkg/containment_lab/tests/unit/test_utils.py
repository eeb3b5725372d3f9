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
import testtools

from containment_lab import _utils
from containment_lab import learning


class UtilsTests(testtools.TestCase):

    def test_get_logger(self):
        self.assertEqual('containment_lab.tests.unit.test_utils',
                         _utils.get_logger(__name__).name)

    def test_fingerprint_is_stable(self):
        a = _utils.fingerprint(learning.PaperFamily(A=1000.0, alpha=2.0),
                               {'t_max': 10.0})
        b = _utils.fingerprint(learning.PaperFamily(A=1000.0, alpha=2.0),
                               {'t_max': 10.0})
        c = _utils.fingerprint(learning.PaperFamily(A=1000.0, alpha=3.0),
                               {'t_max': 10.0})
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)
        self.assertEqual(64, len(a))

    def test_format_float(self):
        self.assertEqual('0.10000000000000001', _utils.format_float(0.1))
        self.assertEqual('82', _utils.format_float(82.0))

    def test_to_bool(self):
        for value in (True, 'true', 'Yes', '1', 1):
            self.assertTrue(_utils.to_bool(value))
        for value in (False, 'false', 'no', '0', ''):
            self.assertFalse(_utils.to_bool(value))

    def test_integer(self):
        for value in (350000, '350000', 350000.0, '3.5e5', ' 7 '):
            self.assertEqual(int(float(value)), _utils.integer(value))
        self.assertEqual(2 ** 32, _utils.integer(str(2 ** 32)))
        for value in (350000.7, '350000.7', float('nan'), float('inf'), 'x'):
            self.assertRaises(ValueError, _utils.integer, value)
