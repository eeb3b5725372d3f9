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


__all__ = ('OutputError',)


class OutputError(base.ContainmentLabException):
    """Writing or reading a dataset file failed.

    :param str path: The file that could not be accessed.
    :param original: The underlying OS error.
    """

    def __init__(self, path, original=None):
        self.path = path
        self.original = original
        msg = 'Unable to access %s' % path
        if original is not None:
            msg = '%s: %s' % (msg, original)
        super(OutputError, self).__init__(msg)
