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
from containment_lab import _utils as utils
from containment_lab import model
from containment_lab import systems
from containment_lab.loading import base
from containment_lab.loading import opts


class ModelSpec(object):
    """A selected propagation model together with its parameters.

    :param str name: ``learning``, ``classical`` or ``km``.
    :type params: containment_lab.model.ModelParams
    """

    def __init__(self, name, params, beta=None, zeta=0.0):
        self.name = name
        self.params = params
        self.beta = beta
        self.zeta = zeta

    def system(self, curve=None):
        return systems.build_system(self.name, self.params, curve,
                                    beta=self.beta, zeta=self.zeta)

    def describe(self):
        doc = {'model': self.name, 'params': self.params.describe()}
        if self.name != 'learning':
            doc['beta'] = self.beta
            doc['zeta'] = self.zeta
        return doc


class _ModelLoader(base.BaseLoader):

    name = None

    @property
    def plugin_class(self):
        return ModelSpec

    def get_options(self):
        options = super(_ModelLoader, self).get_options()

        options.extend([
            opts.Opt('n',
                     type=utils.integer,
                     default=model.IPV4_ADDRESSES,
                     metavar='<addresses>',
                     help='Size of the scanned address space'),
            opts.Opt('k',
                     type=utils.integer,
                     default=350000,
                     metavar='<hosts>',
                     help='Number of vulnerable hosts'),
            opts.Opt('eta',
                     type=float,
                     default=10188.0,
                     metavar='<scans/hour>',
                     help='Scans per hour of one infected host'),
            opts.Opt('lambda',
                     type=float,
                     dest='lam',
                     default=0.001,
                     metavar='<probability>',
                     help='Probability that a malicious flow is sampled'),
            opts.Opt('i0',
                     type=float,
                     default=1.0,
                     metavar='<hosts>',
                     help='Initially infected hosts'),
            opts.Opt('j0',
                     type=float,
                     default=0.0,
                     metavar='<samples>',
                     help='Samples collected before t = 0'),
        ])

        return options

    def _params(self, kwargs):
        return model.derive_params(n=kwargs['n'],
                                   k=kwargs['k'],
                                   eta=kwargs['eta'],
                                   lam=kwargs['lam'],
                                   i0=kwargs['i0'],
                                   j0=kwargs['j0'])

    def create_plugin(self, **kwargs):
        return self.plugin_class(self.name, self._params(kwargs))


class LearningModel(_ModelLoader):
    """Worm propagation slowed by a learning defender."""

    name = 'learning'


class ClassicalModel(_ModelLoader):
    """The simple epidemic, without learning."""

    name = 'classical'

    def get_options(self):
        options = super(ClassicalModel, self).get_options()

        options.append(
            opts.Opt('beta',
                     type=float,
                     metavar='<rate>',
                     help='Pairwise infection rate, eta / n if unset'))

        return options

    def create_plugin(self, **kwargs):
        return self.plugin_class(self.name, self._params(kwargs),
                                 beta=kwargs.get('beta'))


class KermackMcKendrickModel(ClassicalModel):
    """The simple epidemic with removal of infected hosts."""

    name = 'km'

    def get_options(self):
        options = super(KermackMcKendrickModel, self).get_options()

        options.append(
            opts.Opt('zeta',
                     type=float,
                     default=0.0,
                     metavar='<rate>',
                     help='Removal rate of infected hosts'))

        return options

    def create_plugin(self, **kwargs):
        return self.plugin_class(self.name, self._params(kwargs),
                                 beta=kwargs.get('beta'),
                                 zeta=kwargs['zeta'])
