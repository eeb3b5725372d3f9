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
import fixtures


class HackingCode(fixtures.Fixture):
    """A fixture to house the various code examples.

    Examples contains various containment_lab hacking style checks.
    """

    global_numpy_random = {
        'code': """
            import numpy as np
            np.random.seed(4)
            x = np.random.rand(3)
            rng = np.random.default_rng(4)
            y = rng.random(3)
            gen = np.random.Generator(np.random.PCG64(4))
            state = np.random.RandomState(1)
            z = np.random.exponential(scale=2.0)
        """,
        'expected_errors': [
            (2, 0, 'CL301'),
            (3, 0, 'CL301'),
            (7, 0, 'CL301'),
            (8, 0, 'CL301'),
        ],
    }

    loggers_from_utils = {
        'code': """
            import logging

            from containment_lab import _utils as utils

            LOG = logging.getLogger(__name__)
            _logger = utils.get_logger(__name__)
            log = logging.getLogger('containment_lab.solver')
        """,
        'expected_errors': [
            (5, 0, 'CL302'),
            (7, 0, 'CL302'),
        ],
    }
