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

from containment_lab.exceptions import base


__all__ = ('NumericalFailure',
           'StepUnderflow',
           'NonFiniteState',
           'QuadratureFailure')


class NumericalFailure(base.ContainmentLabException):
    message = "A numerical method failed."


class StepUnderflow(NumericalFailure):
    """The adaptive step size shrank below what floating point can resolve.

    :param float t: The time at which the integrator gave up.
    """

    def __init__(self, t, detail=None):
        self.t = t
        msg = 'Step size underflow at t=%r' % t
        if detail:
            msg = '%s: %s' % (msg, detail)
        super(StepUnderflow, self).__init__(msg)


class NonFiniteState(NumericalFailure):
    """The integrated state became NaN or infinite.

    :param float t: The first output time with a non-finite component.
    """

    def __init__(self, t):
        self.t = t
        super(NonFiniteState, self).__init__('Non-finite state at t=%r' % t)


class QuadratureFailure(NumericalFailure):
    message = "Quadrature did not reach the requested tolerance."
