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
"""containment_lab's pep8 extensions.

In order to make the review process faster and easier for core devs we are
adding some containment_lab specific pep8 checks. This will catch common
errors so that core devs don't have to.

"""


import os
import re


_global_random = re.compile(
    r".*\bnp\.random\.(seed|rand|randn|randint|random|random_sample|choice|"
    r"shuffle|permutation|uniform|normal|exponential|poisson|binomial|"
    r"beta|RandomState)\(")

_get_logger = re.compile(r".*\blogging\.getLogger\(")


def check_no_global_numpy_random(logical_line, filename):
    """CL301: random draws must come from a numpy Generator."""
    if _global_random.match(logical_line):
        yield (0, "CL301: use numpy.random.Generator instead of the global "
                  "numpy random state")


def check_loggers_from_utils(logical_line, filename):
    """CL302: loggers must be created with _utils.get_logger."""
    if os.path.basename(filename) == '_utils.py':
        return
    if _get_logger.match(logical_line):
        yield (0, "CL302: use containment_lab._utils.get_logger instead of "
                  "logging.getLogger")


def factory(register):
    register(check_no_global_numpy_random)
    register(check_loggers_from_utils)
