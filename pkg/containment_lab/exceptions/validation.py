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


__all__ = ('ConfigError',
           'ValidationError',
           'UnknownConfigKeys',
           'OptionError',
           'MissingRequiredOptions')


class ConfigError(base.ContainmentLabException):
    message = "Invalid configuration."


class ValidationError(ConfigError):
    """A parameter is outside of its permitted range.

    :param str field: The name of the offending field.
    :param str constraint: A description of the violated constraint.

    .. py:attribute:: field

        The name of the offending field.
    """

    def __init__(self, field, constraint):
        self.field = field
        self.constraint = constraint
        msg = 'Invalid value for %s: must satisfy %s' % (field, constraint)
        super(ValidationError, self).__init__(msg)


class UnknownConfigKeys(ConfigError):
    """Configuration keys were given that nothing consumes.

    :param list(str) names: Names of the unknown keys.
    """

    def __init__(self, names):
        self.names = sorted(names)

        m = 'The following configuration keys are not recognised: %s'
        super(UnknownConfigKeys, self).__init__(m % ', '.join(self.names))


class OptionError(ConfigError):
    """A requirement of a section loader was not met.

    Raised by a loader during load_from_options when a combination of values
    is invalid in a way that per-option checking can't express.
    """


class MissingRequiredOptions(OptionError):
    """One or more required options were not provided.

    :param list(containment_lab.loading.Opt) options: Missing options.
    """

    def __init__(self, options):
        self.options = options

        names = ", ".join(o.dest for o in options)
        m = 'Configuration requires values which were not given: %s'
        super(MissingRequiredOptions, self).__init__(m % names)
