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

"""Right-hand sides of the propagation models.

Each model is available twice: as a plain function computing the derivative
of one state, and as a system object that ``solver.integrate`` can drive.
System objects are callables ``system(t, y)`` with an ``initial_state`` and a
``columns`` method that turns an integrated state matrix into the named
trajectory columns.
"""

import numpy as np

from containment_lab import learning
from containment_lab import model


__all__ = ('rhs_learning_based',
           'rhs_classical',
           'rhs_km',
           'LearningBasedSystem',
           'ClassicalSystem',
           'KermackMcKendrickSystem',
           'build_system',
           'MODELS')


def rhs_learning_based(state, params, curve):
    """Derivatives of the learning-based model.

    ``di/dt = p * i * (1 - f(j))`` and ``dj/dt = gamma * i``.

    :param state: ``(i, j)``, infected hosts and collected samples.
    :returns: ``(di/dt, dj/dt)``
    """
    i, j = state
    return (params.p * i * curve.survival(j), params.gamma * i)


def rhs_classical(state, params):
    """Simple epidemic: ``di/dt = beta * i * (k - i)``.

    :param state: ``i``, or a one element sequence holding it.
    :type params: containment_lab.model.KMParams
    """
    i = np.ravel(state)[0] if np.ndim(state) else state
    return params.beta * i * (params.base.k - i)


def rhs_km(state, params):
    """Kermack-McKendrick: removal at rate ``zeta`` on top of the SI model.

    :param state: ``(i, r)``, infected and removed hosts.
    :returns: ``(di/dt, dr/dt)``
    """
    i, r = state
    removal = params.zeta * i
    return (params.beta * i * (params.base.k - i - r) - removal, removal)


class LearningBasedSystem(object):

    name = 'learning'
    monotone_infected = True

    def __init__(self, params, curve):
        self.params = params
        self.curve = curve

    def __call__(self, t, y):
        return np.array(rhs_learning_based(y, self.params, self.curve),
                        dtype=float)

    @property
    def initial_state(self):
        return np.array([self.params.i0, self.params.j0], dtype=float)

    def columns(self, y):
        j = y[1]
        return {'i': y[0], 'j': j, 'f': self.curve.value(j)}

    def describe(self):
        return {'model': self.name,
                'params': self.params.describe(),
                'curve': self.curve.describe()}


class ClassicalSystem(object):
    """The classical simple epidemic, learning disabled."""

    name = 'classical'
    monotone_infected = True

    def __init__(self, params):
        self.params = params
        self.curve = learning.Disabled()

    def __call__(self, t, y):
        return np.array([rhs_classical(y[0], self.params)], dtype=float)

    @property
    def initial_state(self):
        return np.array([self.params.base.i0], dtype=float)

    def columns(self, y):
        zeros = np.zeros_like(y[0])
        return {'i': y[0], 'j': zeros, 'f': zeros}

    def describe(self):
        return {'model': self.name, 'params': self.params.describe()}


class KermackMcKendrickSystem(object):

    name = 'km'

    def __init__(self, params):
        self.params = params
        self.curve = learning.Disabled()

    @property
    def monotone_infected(self):
        return self.params.zeta == 0

    def __call__(self, t, y):
        return np.array(rhs_km(y, self.params), dtype=float)

    @property
    def initial_state(self):
        return np.array([self.params.base.i0, 0.0], dtype=float)

    def columns(self, y):
        zeros = np.zeros_like(y[0])
        return {'i': y[0], 'j': zeros, 'f': zeros, 'r': y[1]}

    def describe(self):
        return {'model': self.name, 'params': self.params.describe()}


MODELS = ('learning', 'classical', 'km')


def build_system(name, params, curve=None, beta=None, zeta=0.0):
    """Create the system object for a model name.

    :param str name: ``learning``, ``classical`` or ``km``.
    :type params: containment_lab.model.ModelParams
    :param curve: Learning curve, used by the learning model only.
    :param float beta: Pairwise infection rate of the classical and
        Kermack-McKendrick models, ``eta / n`` when omitted.
    :param float zeta: Removal rate of the Kermack-McKendrick model.
    """
    if name == 'learning':
        return LearningBasedSystem(params, curve or learning.Disabled())
    if name == 'classical':
        return ClassicalSystem(model.KMParams(params, beta=beta))
    if name == 'km':
        return KermackMcKendrickSystem(
            model.KMParams(params, beta=beta, zeta=zeta))
    raise ValueError('unknown model %s' % name)
