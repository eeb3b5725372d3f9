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


from containment_lab.exceptions.base import *  # noqa
from containment_lab.exceptions.bounds import *  # noqa
from containment_lab.exceptions.experiments import *  # noqa
from containment_lab.exceptions.numerical import *  # noqa
from containment_lab.exceptions.output import *  # noqa
from containment_lab.exceptions.plugins import *  # noqa
from containment_lab.exceptions.validation import *  # noqa
