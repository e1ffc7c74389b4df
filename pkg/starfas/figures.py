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

"""
Renders result CSV files as static SVG plots. Nothing is recomputed,
the plots only show what the CSV file holds.
"""
import logging, math, os
from collections import OrderedDict

from matplotlib.figure import Figure

from .campaigns import SWEEP_SNR, read_csv


LOGGER = logging.getLogger(__name__)

COLORS = ['#1f77b4', '#ff7f0e', '#17becf', '#2ca02c', '#d62728', '#9467bd',
    '#8c564b', '#7f7f7f']

# (column, label suffix, line style, marker) per plotted metric.
OP_SERIES = (
    ('op_exact', "exact", '-', None),
    ('op_asym', "asymptotic", '--', None),
    ('op_mc', "Monte Carlo", '', 'o'),
)
AC_SERIES = (
    ('ac_sum', "analytic", '-', None),
    ('ac_mc_sum', "Monte Carlo", '', 's'),
)


def _as_float(text):
    try:
        return float(text)
    except (TypeError, ValueError):
        return None


def _x_axis(rows):
    """
    Returns the column plotted along the x axis: the swept variable when
    it is numeric and the SNR is fixed, the SNR otherwise.
    """
    sweep_var = rows[0]['sweep_var']
    if sweep_var == SWEEP_SNR:
        return 'snr_db', sweep_var
    numeric = all(_as_float(row['sweep_value']) is not None for row in rows)
    snr_points = set(row['snr_db'] for row in rows)
    if numeric and len(snr_points) == 1:
        return 'sweep_value', sweep_var
    return 'snr_db', sweep_var


def group_series(rows):
    """
    Returns ``{label: [row, ...]}`` with one entry per curve, each sorted
    along the x axis.
    """
    x_column, sweep_var = _x_axis(rows)
    groups = OrderedDict()
    for row in rows:
        if x_column == 'snr_db' and sweep_var != SWEEP_SNR:
            label = "user %s, %s=%s" % (
                row['user'], sweep_var, row['sweep_value'])
        elif x_column == 'sweep_value':
            label = "user %s, %s dB" % (row['user'], row['snr_db'])
        else:
            label = "user %s" % row['user']
        groups.setdefault(label, []).append(row)
    for series in groups.values():
        series.sort(key=lambda row: _as_float(row[x_column]))
    return x_column, groups


def _has_column(rows, column):
    return any(row.get(column) for row in rows)


def _plot(rows, series_specs, ylabel, log_scale, title):
    #pylint:disable=too-many-locals
    x_column, groups = group_series(rows)
    fig = Figure(figsize=(6, 5))
    axes = fig.subplots()
    for idx, (label, series) in enumerate(groups.items()):
        color = COLORS[idx % len(COLORS)]
        for column, suffix, linestyle, marker in series_specs:
            if not _has_column(series, column):
                continue
            xvalues = [_as_float(row[x_column]) for row in series]
            yvalues = [_as_float(row[column]) for row in series]
            if log_scale:
                # Zero and missing values have no place on a log axis.
                yvalues = [val if val is not None and val > 0 else math.nan
                    for val in yvalues]
            else:
                yvalues = [val if val is not None else math.nan
                    for val in yvalues]
            axes.plot(xvalues, yvalues, linestyle=linestyle or 'none',
                marker=marker, color=color, label="%s (%s)" % (label, suffix))
    if log_scale:
        axes.set_yscale('log')
    axes.set_xlabel("average SNR (dB)" if x_column == 'snr_db'
        else rows[0]['sweep_var'])
    axes.set_ylabel(ylabel)
    axes.set_title(title)
    axes.grid(which='both')
    axes.legend(loc='best', frameon=True, fontsize=8)
    return fig


def render_figures(csv_path, out_dir=None):
    """
    Writes ``<name>_op.svg`` and/or ``<name>_ac.svg`` next to *csv_path*
    (or into *out_dir*) and returns the list of written paths.
    """
    rows = read_csv(csv_path)
    if not rows:
        LOGGER.warning("starfas: %s has no rows, nothing to plot", csv_path)
        return []
    stem = os.path.splitext(os.path.basename(csv_path))[0]
    if out_dir is None:
        out_dir = os.path.dirname(csv_path)
    if out_dir and not os.path.isdir(out_dir):
        os.makedirs(out_dir)
    title = rows[0]['scenario_id']
    written = []
    plots = (
        ('op', OP_SERIES, "outage probability", True),
        ('ac', AC_SERIES, "average capacity (bps/Hz)", False),
    )
    for suffix, series_specs, ylabel, log_scale in plots:
        if not any(_has_column(rows, spec[0]) for spec in series_specs):
            continue
        fig = _plot(rows, series_specs, ylabel, log_scale, title)
        path = os.path.join(out_dir, '%s_%s.svg' % (stem, suffix))
        fig.savefig(path, format='svg', metadata={'Date': None})
        LOGGER.info("starfas: wrote %s", path)
        written += [path]
    return written
