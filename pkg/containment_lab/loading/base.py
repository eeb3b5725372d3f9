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
import abc

import six
import stevedore

from containment_lab import exceptions

CURVE_NAMESPACE = 'containment_lab.curve'
MODEL_NAMESPACE = 'containment_lab.model'


__all__ = ('get_available_plugin_names',
           'get_available_plugin_loaders',
           'get_plugin_loader',
           'get_plugin_options',
           'BaseLoader',
           'CURVE_NAMESPACE',
           'MODEL_NAMESPACE')


def _plugin_available(ext):
    """Read the value of available for whether to load this plugin."""
    return ext.obj.available


def _manager(namespace):
    return stevedore.EnabledExtensionManager(namespace=namespace,
                                             check_func=_plugin_available,
                                             invoke_on_load=True,
                                             propagate_map_exceptions=True)


def get_available_plugin_names(namespace):
    """Get the names of all the plugins registered under a namespace.

    :param str namespace: ``containment_lab.curve`` or
        ``containment_lab.model``.
    :returns: A set of names.
    :rtype: frozenset
    """
    return frozenset(_manager(namespace).names())


def get_available_plugin_loaders(namespace):
    """Retrieve all the loaders available under a namespace.

    :returns: A dict with plugin entrypoint name as the key and the plugin
              loader as the value.
    :rtype: dict
    """
    mgr = _manager(namespace)
    return dict(mgr.map(lambda ext: (ext.entry_point.name, ext.obj)))


def get_plugin_loader(namespace, name):
    """Retrieve a plugin loader by its entrypoint name.

    :param str namespace: The entry point namespace to look in.
    :param str name: The name of the object to get.

    :rtype: :py:class:`containment_lab.loading.BaseLoader`

    :raises containment_lab.exceptions.NoMatchingPlugin: if a plugin cannot
        be created.
    """
    try:
        mgr = stevedore.DriverManager(namespace=namespace,
                                      invoke_on_load=True,
                                      name=name)
    except RuntimeError:
        raise exceptions.NoMatchingPlugin(namespace, name)

    return mgr.driver


def get_plugin_options(namespace, name):
    """Get the options of a specific plugin.

    :returns: A list of :py:class:`containment_lab.loading.Opt` options.

    :raises containment_lab.exceptions.NoMatchingPlugin: if a plugin cannot
        be created.
    """
    return get_plugin_loader(namespace, name).get_options()


@six.add_metaclass(abc.ABCMeta)
class BaseLoader(object):

    @property
    def plugin_class(self):
        raise NotImplementedError()

    def create_plugin(self, **kwargs):
        """Create the configured object from the loaded options.

        Override this function if the loaded values need translating before
        they are handed to :py:attr:`plugin_class`.
        """
        return self.plugin_class(**kwargs)

    @abc.abstractmethod
    def get_options(self):
        """Return the list of parameters associated with the loader.

        This list is used to validate config files and to generate CLI
        arguments.

        :returns: A list of Opt objects describing the parameters.
        :rtype: list
        """
        return []

    @property
    def available(self):
        """Return if the plugin is available for loading.

        :rtype: bool
        """
        return True

    def load_from_options(self, **kwargs):
        """Create the object from the arguments retrieved from get_options."""
        missing_required = [o for o in self.get_options()
                            if o.required and kwargs.get(o.dest) is None]

        if missing_required:
            raise exceptions.MissingRequiredOptions(missing_required)

        return self.create_plugin(**kwargs)

    def load_from_options_getter(self, getter, **kwargs):
        """Load from a getter function that returns raw values.

        The getter is a function that takes a
        :py:class:`containment_lab.loading.Opt` and returns the value to load
        with, or None if the option is not set anywhere.

        :raises containment_lab.exceptions.ValidationError: if a value can
            not be converted to the type of its option.
        """
        for opt in (o for o in self.get_options() if o.dest not in kwargs):
            val = getter(opt)
            if val is not None:
                try:
                    val = opt.type(val)
                except (TypeError, ValueError):
                    raise exceptions.ValidationError(
                        opt.name, 'a value of type %s' %
                        getattr(opt.type, '__name__', opt.type))
            kwargs[opt.dest] = val

        return self.load_from_options(**kwargs)
