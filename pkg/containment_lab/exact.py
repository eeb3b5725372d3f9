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

"""Exact expected infection curve of the learning-free stochastic model.

Without learning the infected count is a pure birth chain: from ``i`` hosts
the next infection happens at rate ``eta * i * (k - i) / n`` in both
scenarios (a constant-p hit on an infected host is a no-op, which leaves the
same effective rate). The transient distribution is ``pi0 * expm(Q t)``.
"""

import numpy as np
from positional import positional
from scipy import linalg

from containment_lab import exceptions


__all__ = ('generator_matrix',
           'expected_infected',
           'MAX_STATES')

MAX_STATES = 4096


def generator_matrix(params):
    """Generator ``Q`` over states ``i0, i0 + 1, ..., k``."""
    i0 = int(params.i0)
    states = np.arange(i0, params.k + 1, dtype=float)
    if states.size > MAX_STATES:
        raise exceptions.ValidationError('k', 'k - i0 < %d for exact '
                                         'enumeration' % MAX_STATES)
    rates = params.eta * states * (params.k - states) / params.n
    q = np.diag(-rates)
    q[np.arange(states.size - 1), np.arange(1, states.size)] = rates[:-1]
    return states, q


@positional(2)
def expected_infected(params, times):
    """``E[i(t)]`` at each of ``times``.

    :type params: containment_lab.model.ModelParams
    :rtype: numpy.ndarray
    """
    states, q = generator_matrix(params)
    pi0 = np.zeros(states.size)
    pi0[0] = 1.0
    out = []
    for t in np.atleast_1d(np.asarray(times, dtype=float)):
        dist = pi0.dot(linalg.expm(q * t))
        out.append(dist.dot(states))
    return np.array(out)
