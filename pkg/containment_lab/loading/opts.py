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
import os

from positional import positional

from containment_lab import _utils as utils


__all__ = ('Opt',
           'ENV_PREFIX')

ENV_PREFIX = 'CONTAINMENT_LAB_'


class Opt(object):
    """A configuration value understood by a loader.

    Opts let section loaders and plugins declare the parameters they are
    created from, independently of where the values come from: a JSON config
    file, a command line flag or the environment.

    When defining an Opt with a - the - should be present in the name
    parameter. This will automatically be converted to an _ when passing the
    value on. For example::

        Opt('output-every')

    is passed as ``output_every``.

    :param str name: The name of the option.
    :param callable type: Converts the raw value (often a string) into the
        type the consumer expects.
    :param str help: The help text that is shown along with the option.
    :param str dest: The keyword the value is passed as. Defaults to the
        value of name with dashes turned into underscores.
    :param default: A default value that is used if none is provided.
    :param str metavar: The <metavar> that should be printed in CLI help text.
    :param bool required: If the option must be present to load.
    """

    @positional()
    def __init__(self,
                 name,
                 type=str,
                 help=None,
                 dest=None,
                 default=None,
                 metavar=None,
                 required=False):
        if not callable(type):
            raise TypeError('type must be callable')

        if dest is None:
            dest = name.replace('-', '_')

        self.name = name
        self.type = type
        self.help = help
        self.required = required
        self.dest = dest
        self.default = default
        self.metavar = metavar

    def __repr__(self):
        """Return string representation of option name."""
        return '<Opt: %s>' % self.name

    def __eq__(self, other):
        """Define equality operator on option parameters."""
        return (type(self) == type(other) and
                self.name == other.name and
                self.type == other.type and
                self.help == other.help and
                self.required == other.required and
                self.dest == other.dest and
                self.default == other.default and
                self.metavar == other.metavar)

    def __ne__(self, other):
        """Define inequality operator on option parameters."""
        return not self.__eq__(other)

    @property
    def is_flag(self):
        return self.type is utils.to_bool

    @property
    def argparse_args(self):
        return ['--%s' % self.name]

    @property
    def env_name(self):
        return ENV_PREFIX + self.dest.upper()

    @property
    def env_value(self):
        """The raw value of the option's environment variable, if set."""
        return os.environ.get(self.env_name) or None

    @property
    def argparse_default(self):
        return self.env_value or self.default
