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

"""Learning functions of the defender.

A learning curve maps the number of attack samples collected so far, ``l``, to
the probability ``f(l)`` that the next malicious payload is filtered. ``l`` is
real valued: the ODE engine evaluates the curve at a continuous ``j(t)`` and
the simulator at integer sample counts, through the same code path.
"""

import abc
import numbers

import numpy as np
from positional import positional
import six

from containment_lab import exceptions


__all__ = ('LearningCurve',
           'PaperFamily',
           'Disabled',
           'learning_value',
           'PAPER_FAMILY',
           'DISABLED')

PAPER_FAMILY = 'paper'
DISABLED = 'disabled'


@six.add_metaclass(abc.ABCMeta)
class LearningCurve(object):
    """Base class of all learning curves.

    Subclasses implement :py:meth:`survival`, the probability ``1 - f(l)``
    that a payload passes the filter. Working with the survival function
    keeps full precision when ``f`` is close to 1.
    """

    kind = None

    @abc.abstractmethod
    def survival(self, l):
        """Return ``1 - f(l)`` for a scalar or an array of sample counts."""

    def value(self, l):
        """Return ``f(l)``, the filtering probability after ``l`` samples."""
        return 1.0 - self.survival(l)

    def __call__(self, l):
        return self.value(l)

    @abc.abstractmethod
    def describe(self):
        """Return a JSON-serializable description of the curve."""

    def __eq__(self, other):
        return (type(self) == type(other) and
                self.describe() == other.describe())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(sorted(self.describe().items())))

    def __repr__(self):
        return '<%s %r>' % (type(self).__name__, self.describe())


class PaperFamily(LearningCurve):
    """``1 - f(l) = (A / (l + A)) ** alpha``.

    :param float A: Deceleration factor, delays the onset of learning.
    :param float alpha: Amplification factor, how fast ``f`` approaches 1.
    """

    kind = PAPER_FAMILY

    @positional(1)
    def __init__(self, A, alpha):
        if (not isinstance(A, numbers.Real) or isinstance(A, bool) or
                not A > 0 or not np.isfinite(A)):
            raise exceptions.ValidationError('A', 'A > 0')
        if (not isinstance(alpha, numbers.Real) or isinstance(alpha, bool) or
                not alpha >= 0 or not np.isfinite(alpha)):
            raise exceptions.ValidationError('alpha', 'alpha >= 0')

        self._A = float(A)
        self._alpha = float(alpha)

    @property
    def A(self):
        return self._A

    @property
    def alpha(self):
        return self._alpha

    def survival(self, l):
        A = self._A
        return np.power(A / (np.asarray(l, dtype=float) + A), self._alpha)[()]

    def describe(self):
        return {'kind': self.kind, 'A': self._A, 'alpha': self._alpha}


class Disabled(LearningCurve):
    """No learning: every payload passes, ``f(l) = 0``."""

    kind = DISABLED

    def survival(self, l):
        return np.ones_like(np.asarray(l, dtype=float))[()]

    def describe(self):
        return {'kind': self.kind}


def learning_value(curve, l):
    """Evaluate ``f(l)`` for ``curve``.

    :param curve: The learning curve to evaluate.
    :type curve: LearningCurve
    :param l: Sample count, ``l >= 0``. Real values are accepted.
    :returns: A probability in ``[0, 1)`` for the paper family.
    """
    if np.any(np.asarray(l) < 0):
        raise exceptions.ValidationError('l', 'l >= 0')
    return curve.value(l)
