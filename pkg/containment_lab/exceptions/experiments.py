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
from containment_lab.exceptions import validation


__all__ = ('PresetError',
           'UnknownPreset')


class PresetError(base.ContainmentLabException):
    """An engine failed while running an experiment preset.

    :param str preset: Name of the preset being executed.
    :param str series: Label of the series that failed.
    :param original: The engine exception.
    """

    def __init__(self, preset, series, original):
        self.preset = preset
        self.series = series
        self.original = original
        msg = 'Preset %s, series %s: %s' % (preset, series, original)
        super(PresetError, self).__init__(msg)


class UnknownPreset(validation.ConfigError):
    """No preset is registered under the requested name.

    .. py:attribute:: available

        Sorted names of the registered presets.
    """

    def __init__(self, name, available):
        self.name = name
        self.available = available
        msg = 'Unknown preset %s, choose from: %s' % (name,
                                                       ', '.join(available))
        super(UnknownPreset, self).__init__(msg)
