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

from containment_lab.exceptions import validation


__all__ = ('BoundsError',
           'UnsupportedCurve',
           'RegimeMismatch')


class BoundsError(validation.ConfigError):
    message = "The closed-form bounds do not apply."


class UnsupportedCurve(BoundsError):
    message = "Bounds are only defined for the paper learning family."


class RegimeMismatch(BoundsError):
    """An operation was asked for outside the regime it is derived for.

    :param float alpha: The amplification factor that was supplied.
    :param str expected: The regime the operation requires.
    """

    def __init__(self, alpha, expected):
        self.alpha = alpha
        self.expected = expected
        msg = 'alpha=%r is outside the %s regime' % (alpha, expected)
        super(RegimeMismatch, self).__init__(msg)
