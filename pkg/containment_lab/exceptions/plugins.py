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


__all__ = ('NoMatchingPlugin',)


class NoMatchingPlugin(validation.ConfigError):
    """No plugin is registered under the requested name.

    :param str namespace: The entry point namespace that was searched.
    :param str name: The name of the plugin that was attempted to load.
    """

    def __init__(self, namespace, name):
        self.namespace = namespace
        self.name = name
        msg = 'The plugin %s could not be found in %s' % (name, namespace)
        super(NoMatchingPlugin, self).__init__(msg)
