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
from containment_lab.loading.base import *  # noqa
from containment_lab.loading import cli
from containment_lab.loading import config
from containment_lab.loading.opts import *  # noqa


register_argparse_arguments = cli.register_argparse_arguments
load_from_argparse_arguments = cli.load_from_argparse_arguments

load_config_file = config.load_file
resolve_config = config.resolve
RunConfig = config.RunConfig


__all__ = (
    # loading.base
    'BaseLoader',
    'get_available_plugin_names',
    'get_available_plugin_loaders',
    'get_plugin_loader',
    'get_plugin_options',
    'CURVE_NAMESPACE',
    'MODEL_NAMESPACE',

    # cli
    'register_argparse_arguments',
    'load_from_argparse_arguments',

    # config
    'load_config_file',
    'resolve_config',
    'RunConfig',

    # loading.opts
    'Opt',
    'ENV_PREFIX',
)
