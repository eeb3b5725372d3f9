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
from containment_lab import learning
from containment_lab.loading import base
from containment_lab.loading import opts


class PaperCurve(base.BaseLoader):
    """The ``1 - (A / (l + A))**alpha`` family of learning curves."""

    @property
    def plugin_class(self):
        return learning.PaperFamily

    def get_options(self):
        options = super(PaperCurve, self).get_options()

        options.extend([
            opts.Opt('A',
                     type=float,
                     default=1000.0,
                     metavar='<samples>',
                     help='Deceleration factor: samples before learning '
                          'becomes effective'),
            opts.Opt('alpha',
                     type=float,
                     default=2.0,
                     metavar='<exponent>',
                     help='Amplification factor; containment needs '
                          'alpha > 1'),
        ])

        return options


class DisabledCurve(base.BaseLoader):
    """No learning: nothing is ever filtered."""

    @property
    def plugin_class(self):
        return learning.Disabled

    def get_options(self):
        return []
