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

import fixtures
import numpy as np
import testtools

from containment_lab import learning
from containment_lab import model


class TestCase(testtools.TestCase):

    # the scenario used throughout the numerical section
    N = model.IPV4_ADDRESSES
    K = 350000
    ETA = 10188.0
    LAM = 0.001

    def setUp(self):
        super(TestCase, self).setUp()
        self.logger = self.useFixture(fixtures.FakeLogger(level=logging.DEBUG))

    def params(self, **kwargs):
        values = {'n': self.N, 'k': self.K, 'eta': self.ETA, 'lam': self.LAM}
        values.update(kwargs)
        return model.derive_params(**values)

    def curve(self, A=1000.0, alpha=2.0):
        return learning.PaperFamily(A=A, alpha=alpha)

    def assertClose(self, expected, actual, rel=1e-9, abs_tol=0.0):
        """Assert ``actual`` is within a relative tolerance of ``expected``."""
        ok = np.allclose(actual, expected, rtol=rel, atol=abs_tol)
        self.assertTrue(ok, '%r is not within rel=%g of %r' %
                        (actual, rel, expected))

    def assertBetween(self, low, high, value):
        self.assertTrue(low <= value <= high,
                        '%r is not in [%r, %r]' % (value, low, high))
