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

import hashlib
import json
import logging

import six


def get_logger(name):
    name = name.replace(__name__.split('.')[0], 'containment_lab')
    return logging.getLogger(name)


logger = get_logger(__name__)


def fingerprint(*parts):
    """Return a stable identifier for a collection of describable objects.

    Each part is either a plain JSON-serializable value or an object with a
    ``describe()`` method returning one. The identifier is the hex SHA-256 of
    the canonical JSON encoding, so two runs configured identically share a
    fingerprint.
    """
    doc = [p.describe() if hasattr(p, 'describe') else p for p in parts]
    blob = json.dumps(doc, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(blob.encode('utf-8')).hexdigest()


def format_float(value):
    """Format a number with 17 significant digits."""
    return '%.17g' % value


def to_bool(value):
    if isinstance(value, bool):
        return value
    return six.text_type(value).lower() in ('1', 'true', 't', 'yes', 'y')


def integer(value):
    """Convert ``value`` to an int without dropping a fractional part."""
    if isinstance(value, six.string_types):
        try:
            return int(value)
        except ValueError:
            value = float(value)
    if isinstance(value, float) and not value.is_integer():
        raise ValueError('%r is not a whole number' % value)
    return int(value)
