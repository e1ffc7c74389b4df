# Copyright (c) 2026, DjaoDjin inc.
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice,
#    this list of conditions and the following disclaimer.
# 2. Redistributions in binary form must reproduce the above copyright
#    notice, this list of conditions and the following disclaimer in the
#    documentation and/or other materials provided with the distribution.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
# "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED
# TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR
# PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR
# CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL,
# EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO,
# PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS;
# OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY,
# WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR
# OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF
# ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

import ast, hashlib, logging, os, re
from collections import OrderedDict

from django.core.exceptions import ValidationError

from . import settings
from .models import USERS


LOGGER = logging.getLogger(__name__)

SCENARIO_EXT = '.cfg'
KEY_VALUE_RE = re.compile(r'^\s*(?P<key>[\w.]+)\s*=\s*(?P<value>.*?)\s*$')
SECTION_RE = re.compile(r'^\s*\[(?P<section>[\w.]+)\]\s*$')


def parse_literal(text):
    """
    Returns *text* as a Python literal when it is one, otherwise as a
    bare string (ex: ``phase_error = ideal``).
    """
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def parse_scenario_text(text):
    """
    Returns the ``key = value`` pairs of a scenario document.

    ``[section]`` headers prefix the keys that follow with ``section.``
    and ``#`` starts a comment.
    """
    data = OrderedDict()
    prefix = ''
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0]
        if not line.strip():
            continue
        look = SECTION_RE.match(line)
        if look:
            prefix = look.group('section') + '.'
            continue
        look = KEY_VALUE_RE.match(line)
        if not look:
            raise ValidationError(
                "line %(lineno)d: expected 'key = value', got '%(line)s'",
                code='syntax', params={'lineno': lineno, 'line': line.strip()})
        key = prefix + look.group('key')
        if key in data:
            raise ValidationError("line %(lineno)d: duplicate key '%(key)s'",
                code='duplicate', params={'lineno': lineno, 'key': key})
        data[key] = parse_literal(look.group('value'))
    return data


def find_scenario(path):
    """
    Returns the path to a scenario file, looking into ``SCENARIOS_DIRS``
    when *path* is not a file itself.
    """
    candidates = [path]
    if not os.path.isabs(path):
        candidates += [os.path.join(scenario_dir, name)
            for scenario_dir in settings.SCENARIOS_DIRS
                for name in (path, path + SCENARIO_EXT)]
    for candidate in candidates:
        if os.path.isfile(candidate):
            LOGGER.debug("starfas: using scenario '%s'", candidate)
            return candidate
    raise OSError("cannot find scenario '%s'" % path)


def read_scenario_file(path):
    with open(find_scenario(path)) as scenario_file:
        return scenario_file.read()


def _format(value):
    if isinstance(value, tuple):
        trailing = ',' if len(value) == 1 else ''
        return '(%s%s)' % (
            ', '.join(_format(item) for item in value), trailing)
    if isinstance(value, list):
        return '[%s]' % ', '.join(_format(item) for item in value)
    return repr(value)


def scenario_as_items(cfg, sweep=None):
    """
    Returns the ``(key, value)`` pairs that reproduce *cfg* (and *sweep*)
    when written to a scenario file.
    """
    items = [
        ('scenario_id', cfg.scenario_id),
        ('bs_position', tuple(cfg.bs_position)),
        ('ris_position', tuple(cfg.ris_position)),
        ('user_r_position', tuple(cfg.user_r_position)),
        ('user_t_position', tuple(cfg.user_t_position)),
        ('chi', float(cfg.chi)),
        ('k_elements', int(cfg.k_elements)),
        ('beta_r', float(cfg.beta_r)),
        ('alpha_c', float(cfg.alpha_c)),
        ('private_split_r', float(cfg.private_split_r)),
        ('rice_k', float(cfg.rice_k)),
        ('phase_error', cfg.phase_error.kind),
    ]
    if not cfg.phase_error.is_ideal:
        items += [('phase_error.kappa', float(cfg.phase_error.kappa))]
    for user in USERS:
        grid = cfg.grid(user)
        items += [('grid_%s.n1' % user, int(grid.n1)),
            ('grid_%s.n2' % user, int(grid.n2)),
            ('grid_%s.w1' % user, float(grid.w1)),
            ('grid_%s.w2' % user, float(grid.w2))]
    items += [('copula_nu', float(cfg.copula_nu))]
    for user in USERS:
        thresholds = cfg.user_thresholds(user)
        items += [
            ('thresholds.%s.gamma_th_c_db' % user,
             float(thresholds.gamma_th_c_db)),
            ('thresholds.%s.gamma_th_p_db' % user,
             float(thresholds.gamma_th_p_db))]
    items += [('snr_grid_db', [float(val) for val in cfg.snr_grid_db]),
        ('kernel', cfg.kernel), ('ac_sigma', cfg.ac_sigma)]
    if sweep is not None:
        items += [('sweep.variable', sweep.variable),
            ('sweep.values', list(sweep.values)),
            ('sweep.outputs', list(sweep.outputs))]
    return items


def scenario_as_text(cfg, sweep=None):
    return ''.join(['%s = %s\n' % (key, _format(value))
        for key, value in scenario_as_items(cfg, sweep=sweep)])


def scenario_digest(cfg, sweep=None):
    """
    Returns a short hash identifying the canonical text of a scenario.
    """
    return hashlib.sha1(
        scenario_as_text(cfg, sweep=sweep).encode('utf-8')).hexdigest()[:10]
