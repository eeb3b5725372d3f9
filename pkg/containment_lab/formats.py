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

"""Dataset files.

CSV files have a header row, use ``.`` as the decimal point, ``\n`` as the
line terminator and 17 significant digits so values survive a round trip.
JSON documents are written with sorted keys so identical inputs give
identical bytes.
"""

import csv
import io
import json
import numbers
import os

import numpy as np
import six

from containment_lab import _utils as utils
from containment_lab import exceptions
from containment_lab import solver


__all__ = ('write_csv',
           'read_csv',
           'write_json',
           'read_json',
           'write_trajectory',
           'read_trajectory',
           'write_ensemble',
           'write_run_summaries',
           'ENSEMBLE_COLUMNS',
           'RUN_COLUMNS')

ENSEMBLE_COLUMNS = ('t', 'mean_i', 'stderr_i', 'n_runs')
RUN_COLUMNS = ('run', 'seed', 'termination', 'final_infected',
               'final_samples', 'scans_executed', 't_end')

_logger = utils.get_logger(__name__)


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return six.text_type(bool(value)).lower()
    if isinstance(value, numbers.Integral):
        return '%d' % value
    if isinstance(value, numbers.Real):
        return utils.format_float(value)
    return six.text_type(value)


def _open(path, mode):
    try:
        return io.open(path, mode, encoding='utf-8', newline='')
    except (IOError, OSError) as e:
        raise exceptions.OutputError(path, e)


def write_csv(path, header, columns):
    """Write equally long ``columns`` under ``header`` to ``path``."""
    lengths = set(len(c) for c in columns)
    if len(lengths) > 1:
        raise ValueError('columns differ in length: %s' % sorted(lengths))

    with _open(path, 'w') as fh:
        try:
            writer = csv.writer(fh, lineterminator='\n')
            writer.writerow(header)
            for row in zip(*columns):
                writer.writerow([_cell(v) for v in row])
        except (IOError, OSError) as e:
            raise exceptions.OutputError(path, e)
    _logger.debug('wrote %s', path)
    return path


def read_csv(path):
    """Read a CSV written by :py:func:`write_csv`.

    :returns: ``(header, columns)`` where numeric columns are float arrays
              and others stay lists of strings.
    """
    with _open(path, 'r') as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise exceptions.OutputError(path, 'empty file')
    header, body = rows[0], [row for row in rows[1:] if row]
    for lineno, row in enumerate(body, 2):
        if len(row) != len(header):
            raise exceptions.ConfigError(
                '%s row %d has %d fields, the header has %d' %
                (path, lineno, len(row), len(header)))
    columns = {}
    for idx, name in enumerate(header):
        raw = [row[idx] for row in body]
        try:
            columns[name] = np.array([float(v) for v in raw])
        except ValueError:
            columns[name] = raw
    return header, columns


def write_json(path, doc):
    text = json.dumps(doc, sort_keys=True, indent=2) + '\n'
    with _open(path, 'w') as fh:
        try:
            fh.write(six.text_type(text))
        except (IOError, OSError) as e:
            raise exceptions.OutputError(path, e)
    return path


def read_json(path):
    with _open(path, 'r') as fh:
        try:
            return json.load(fh)
        except ValueError as e:
            raise exceptions.ConfigError('%s is not valid JSON: %s' %
                                         (path, e))


def write_trajectory(path, trajectory):
    names = trajectory.column_names
    return write_csv(path, names, [trajectory.column(n) for n in names])


def read_trajectory(path):
    header, columns = read_csv(path)
    missing = [c for c in solver.TRAJECTORY_COLUMNS if c not in columns]
    if missing:
        raise exceptions.ConfigError('%s lacks trajectory columns: %s' %
                                     (path, ', '.join(missing)))
    if not len(columns['t']):
        raise exceptions.ConfigError('%s holds no trajectory points' % path)
    t = columns.pop('t')
    try:
        return solver.Trajectory(t, columns,
                                 params_fingerprint=os.path.basename(path))
    except ValueError as e:
        raise exceptions.ConfigError('%s is not a numeric trajectory: %s' %
                                     (path, e))


def write_ensemble(path, ensemble):
    n_runs = np.full(ensemble.t.size, ensemble.n_runs, dtype=np.int64)
    return write_csv(path, ENSEMBLE_COLUMNS,
                     [ensemble.t, ensemble.mean_i, ensemble.stderr_i, n_runs])


def write_run_summaries(path, ensemble):
    rows = [(idx,) + tuple(run.summary()[c] for c in RUN_COLUMNS[1:])
            for idx, run in enumerate(ensemble.runs)]
    return write_csv(path, RUN_COLUMNS, list(zip(*rows)))
