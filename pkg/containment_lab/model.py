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

"""Model parameters for the learning-based propagation model.

All rates are per hour. The derived constants are never stored separately
from their inputs:

- ``p = eta * k / n`` is the infection pressure of one infected host when the
  whole susceptible population is available.
- ``gamma = lambda * eta`` is the rate at which one infected host hands attack
  samples to the defender.
"""

import numbers

from positional import positional

from containment_lab import exceptions


__all__ = ('ModelParams',
           'KMParams',
           'derive_params',
           'IPV4_ADDRESSES')

IPV4_ADDRESSES = 2 ** 32


def _check(ok, field, constraint):
    if not ok:
        raise exceptions.ValidationError(field, constraint)


def _is_int(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def _is_real(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


class ModelParams(object):
    """The immutable parameter bundle of one propagation scenario.

    :param int n: Size of the scanned address space.
    :param int k: Number of susceptible hosts in that space.
    :param float eta: Scan rate of one infected host (scans per hour).
    :param float lam: Probability that a malicious packet is sampled by the
        classifier and handed to the signature generator.
    :param float i0: Initially infected hosts.
    :param float j0: Samples collected before t=0.
    """

    __slots__ = ('_n', '_k', '_eta', '_lam', '_i0', '_j0')

    @positional(1)
    def __init__(self, n, k, eta, lam, i0=1, j0=0):
        _check(_is_int(n) and n >= 1, 'n', 'integer n >= 1')
        _check(_is_int(k) and 1 <= k <= n, 'k', 'integer 1 <= k <= n')
        _check(_is_real(eta) and eta > 0, 'eta', 'eta > 0')
        _check(_is_real(lam) and 0 <= lam <= 1, 'lambda',
               '0 <= lambda <= 1')
        _check(_is_real(i0) and i0 >= 1, 'i0', 'i0 >= 1')
        _check(_is_real(j0) and j0 >= 0, 'j0', 'j0 >= 0')

        object.__setattr__(self, '_n', int(n))
        object.__setattr__(self, '_k', int(k))
        object.__setattr__(self, '_eta', float(eta))
        object.__setattr__(self, '_lam', float(lam))
        object.__setattr__(self, '_i0', float(i0))
        object.__setattr__(self, '_j0', float(j0))

    def __setattr__(self, name, value):
        raise AttributeError('ModelParams is immutable')

    def __getstate__(self):
        return self.describe()

    def __setstate__(self, state):
        self.__init__(n=state['n'], k=state['k'], eta=state['eta'],
                      lam=state['lambda'], i0=state['i0'], j0=state['j0'])

    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def eta(self):
        return self._eta

    @property
    def lam(self):
        return self._lam

    @property
    def i0(self):
        return self._i0

    @property
    def j0(self):
        return self._j0

    @property
    def p(self):
        return self._eta * self._k / self._n

    @property
    def gamma(self):
        return self._lam * self._eta

    def replace(self, **kwargs):
        """Return a copy with some fields changed and p, gamma re-derived."""
        values = {'n': self._n, 'k': self._k, 'eta': self._eta,
                  'lam': self._lam, 'i0': self._i0, 'j0': self._j0}
        values.update(kwargs)
        return ModelParams(**values)

    def describe(self):
        return {'n': self._n,
                'k': self._k,
                'eta': self._eta,
                'lambda': self._lam,
                'i0': self._i0,
                'j0': self._j0,
                'p': self.p,
                'gamma': self.gamma}

    def __eq__(self, other):
        return (type(self) == type(other) and
                self.describe() == other.describe())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._n, self._k, self._eta, self._lam,
                     self._i0, self._j0))

    def __repr__(self):
        return ('<ModelParams n=%(n)d k=%(k)d eta=%(eta)r lambda=%(lambda)r '
                'i0=%(i0)r j0=%(j0)r>' % self.describe())


class KMParams(object):
    """Parameters of the classical and Kermack-McKendrick epidemic models.

    :param base: The shared scenario parameters; ``base.k`` is the
        susceptible population and ``base.i0`` the initial infection.
    :type base: ModelParams
    :param float beta: Pairwise infection rate. Defaults to ``eta / n``,
        which makes ``beta * k`` equal to ``p``.
    :param float zeta: Removal rate. ``zeta == 0`` is the classical model.
    """

    __slots__ = ('_base', '_beta', '_zeta')

    @positional(2)
    def __init__(self, base, beta=None, zeta=0.0):
        if beta is None:
            beta = base.eta / base.n
        _check(_is_real(beta) and beta > 0, 'beta', 'beta > 0')
        _check(_is_real(zeta) and zeta >= 0, 'zeta', 'zeta >= 0')

        object.__setattr__(self, '_base', base)
        object.__setattr__(self, '_beta', float(beta))
        object.__setattr__(self, '_zeta', float(zeta))

    def __setattr__(self, name, value):
        raise AttributeError('KMParams is immutable')

    def __getstate__(self):
        return (self._base, self._beta, self._zeta)

    def __setstate__(self, state):
        self.__init__(state[0], beta=state[1], zeta=state[2])

    @property
    def base(self):
        return self._base

    @property
    def beta(self):
        return self._beta

    @property
    def zeta(self):
        return self._zeta

    def describe(self):
        doc = self._base.describe()
        doc.update({'beta': self._beta, 'zeta': self._zeta})
        return doc

    def __eq__(self, other):
        return (type(self) == type(other) and
                self.describe() == other.describe())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._base, self._beta, self._zeta))


@positional(4)
def derive_params(n, k, eta, lam, i0=1, j0=0):
    """Validate raw scenario values and derive p and gamma.

    :raises containment_lab.exceptions.ValidationError: naming the first
        field whose constraint is violated.
    :rtype: ModelParams
    """
    return ModelParams(n=n, k=k, eta=eta, lam=lam, i0=i0, j0=j0)
