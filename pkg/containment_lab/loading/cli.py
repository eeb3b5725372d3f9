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
import argparse

from positional import positional

from containment_lab.loading import config


__all__ = ('register_argparse_arguments',
           'load_from_argparse_arguments')

_SECTION_HELP = {
    'model': 'Propagation model parameters',
    'learning': 'Learning curve of the defender',
    'solver': 'ODE integration and output sampling',
    'simulation': 'Monte-Carlo simulation',
    'run': 'Seed, parallelism and output',
}


def _register_loader_arguments(parser, loader):
    for opt in loader.get_options():
        help = opt.help
        if help:
            help = '%s. Defaults to env[%s].' % (help, opt.env_name)
        if opt.is_flag:
            parser.add_argument(*opt.argparse_args,
                                action='store_const',
                                const=True,
                                default=None,
                                dest=opt.dest,
                                help=help)
        else:
            parser.add_argument(*opt.argparse_args,
                                default=None,
                                metavar=opt.metavar,
                                dest=opt.dest,
                                help=help)


def _add_selectors(parser):
    parser.add_argument('--config',
                        metavar='<path>',
                        help='JSON configuration file')
    parser.add_argument('--model',
                        metavar='<name>',
                        help='Propagation model: learning, classical or km. '
                             'Defaults to env[CONTAINMENT_LAB_MODEL].')
    parser.add_argument('--learning',
                        metavar='<name>',
                        help='Learning curve: paper or disabled. '
                             'Defaults to env[CONTAINMENT_LAB_LEARNING].')


@positional(2)
def register_argparse_arguments(parser, argv):
    """Register the CLI options of every configuration section.

    The function inspects the provided arguments and the config file they
    name so that it registers the options of the selected model and
    learning curve plugins only.

    :param parser: the parser to attach argparse options to.
    :type parser: argparse.ArgumentParser
    :param list argv: the arguments provided to the application.

    :returns: The parsed config file, or an empty dict without one.
    :rtype: dict

    :raises containment_lab.exceptions.ConfigError: if the config file is
        invalid or a plugin cannot be found.
    """
    in_parser = argparse.ArgumentParser(add_help=False)
    for p in (in_parser, parser):
        _add_selectors(p)

    options, _args = in_parser.parse_known_args(argv)
    doc = config.load_file(options.config) if options.config else {}

    for section in config.SECTIONS:
        name, loader = config.section_loader(section, doc, vars(options))
        title = '%s options' % section.capitalize()
        msg = _SECTION_HELP[section]
        if name is not None:
            msg = '%s: %s.' % (msg, name)
        group = parser.add_argument_group(title, msg)
        _register_loader_arguments(group, loader)

    return doc


def load_from_argparse_arguments(namespace, doc=None):
    """Resolve the parsed command line together with a config document.

    :param namespace: The result from CLI parsing.
    :type namespace: argparse.Namespace
    :param dict doc: The document returned by
        :py:func:`register_argparse_arguments`.

    :rtype: containment_lab.loading.config.RunConfig
    """
    return config.resolve(doc, vars(namespace))
