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
Sweeps over one scenario parameter, evaluated point by point and written
as CSV rows in sweep order.
"""
import csv, json, logging, math, os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from . import __version__, analysis, simkit, specfun
from .models import FasGrid, PhaseError, USERS, PHASE_IDEAL
from .utils import scenario_as_text, scenario_digest


LOGGER = logging.getLogger(__name__)

SWEEP_SNR = 'snr_db'
SWEEP_VARIABLES = (SWEEP_SNR, 'k_elements', 'beta_r', 'alpha_c', 'grid',
    'kappa')

OUTPUT_OP = 'op'
OUTPUT_OP_ASYM = 'op_asym'
OUTPUT_AC = 'ac'
OUTPUT_MC_OP = 'mc_op'
OUTPUT_MC_AC = 'mc_ac'
OUTPUTS = (OUTPUT_OP, OUTPUT_OP_ASYM, OUTPUT_AC, OUTPUT_MC_OP, OUTPUT_MC_AC)
ANALYTIC_OUTPUTS = (OUTPUT_OP, OUTPUT_OP_ASYM, OUTPUT_AC)
MC_OUTPUTS = (OUTPUT_MC_OP, OUTPUT_MC_AC)

CSV_HEADER = ('scenario_id', 'user', 'sweep_var', 'sweep_value', 'snr_db',
    'op_exact', 'op_asym', 'op_mc', 'op_mc_hw', 'ac_c', 'ac_p', 'ac_sum',
    'ac_mc_sum', 'ac_mc_hw', 'valid', 'err_est', 'seed')

# Agreement band between exact and Monte Carlo outage probabilities.
OP_AGREEMENT_FLOOR = 0.02
# Outage probabilities where the high-SNR expansion is compared.
ASYMPTOTIC_REGION = 1e-3


def _normalize_value(variable, value):
    #pylint:disable=too-many-return-statements
    if variable == SWEEP_SNR:
        return float(value)
    if variable == 'k_elements':
        if float(value) != int(value) or int(value) < 1:
            raise ValueError("expected a positive integer")
        return int(value)
    if variable == 'beta_r':
        if not 0 <= float(value) <= 1:
            raise ValueError("expected a value in [0, 1]")
        return float(value)
    if variable == 'alpha_c':
        if not 0 < float(value) < 1:
            raise ValueError("expected a value in (0, 1)")
        return float(value)
    if variable == 'kappa':
        if value == PHASE_IDEAL:
            return value
        if float(value) <= 0:
            raise ValueError("expected 'ideal' or a positive number")
        return float(value)
    # grid: (N, W) on a square layout or explicit (n1, n2, w1, w2).
    value = tuple(value)
    if len(value) == 2:
        FasGrid.from_ports(value[0], value[1])
        if float(value[1]) < 0:
            raise ValueError("expected a nonnegative area")
        return (int(value[0]), float(value[1]))
    if len(value) == 4:
        if int(value[0]) < 1 or int(value[1]) < 1 \
           or float(value[2]) < 0 or float(value[3]) < 0:
            raise ValueError("expected positive port counts and"
                " nonnegative lengths")
        return (int(value[0]), int(value[1]),
            float(value[2]), float(value[3]))
    raise ValueError("expected (N, W) or (n1, n2, w1, w2)")


@dataclass(frozen=True)
class SweepSpec:
    """
    Values taken by one scenario parameter and the metrics to compute
    at each of them.
    """
    variable: str
    values: tuple
    outputs: tuple = ANALYTIC_OUTPUTS

    def __post_init__(self):
        errors = []
        if self.variable not in SWEEP_VARIABLES:
            errors += [ValidationError(
                "sweep.variable '%(value)s' is not one of %(choices)s",
                code='invalid_choice', params={'value': self.variable,
                'choices': ', '.join(SWEEP_VARIABLES)})]
        if not self.values:
            errors += [ValidationError("sweep.values must not be empty",
                code='required')]
        for output in self.outputs:
            if output not in OUTPUTS:
                errors += [ValidationError(
                    "sweep.outputs '%(value)s' is not one of %(choices)s",
                    code='invalid_choice', params={'value': output,
                    'choices': ', '.join(OUTPUTS)})]
        normalized = []
        if not errors:
            for value in self.values:
                try:
                    normalized += [_normalize_value(self.variable, value)]
                except (TypeError, ValueError) as err:
                    errors += [ValidationError(
                        "sweep.values %(value)s: %(reason)s for %(variable)s",
                        code='range', params={'value': value,
                        'reason': str(err), 'variable': self.variable})]
        if errors:
            raise ValidationError(errors)
        object.__setattr__(self, 'values', tuple(normalized))
        object.__setattr__(self, 'outputs', tuple(self.outputs))


def format_sweep_value(value):
    if isinstance(value, tuple):
        return '(%s)' % ', '.join(format_sweep_value(item) for item in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def apply_sweep_value(cfg, variable, value):
    """
    Returns a copy of *cfg* where *variable* takes *value*.
    """
    if variable == SWEEP_SNR:
        return cfg.replace(snr_grid_db=(value,))
    if variable in ('k_elements', 'beta_r', 'alpha_c'):
        return cfg.replace(**{variable: value})
    if variable == 'kappa':
        if value == PHASE_IDEAL:
            return cfg.replace(phase_error=PhaseError.ideal())
        return cfg.replace(phase_error=PhaseError.von_mises(value))
    if len(value) == 2:
        grid = FasGrid.from_ports(*value)
    else:
        grid = FasGrid(*value)
    return cfg.replace(grid_r=grid, grid_t=grid)


@dataclass(frozen=True)
class SweepPoint:
    index: int
    cfg: object
    user: str
    sweep_value: object
    snr_db: float


def expand_points(cfg, sweep):
    """
    Returns the points of *sweep* in output order: sweep value,
    then SNR, then user.
    """
    points = []
    for value in sweep.values:
        point_cfg = apply_sweep_value(cfg, sweep.variable, value)
        for snr_db in point_cfg.snr_grid_db:
            for user in USERS:
                points += [SweepPoint(index=len(points), cfg=point_cfg,
                    user=user, sweep_value=value, snr_db=float(snr_db))]
    return points


def _format_number(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float) and math.isnan(value):
        return 'nan'
    return repr(float(value))


def evaluate_point(point, sweep, qmc, samples, seed):
    """
    Returns the CSV fields of one sweep point.
    """
    outputs = sweep.outputs
    row = {'user': point.user, 'sweep_var': sweep.variable,
        'sweep_value': format_sweep_value(point.sweep_value),
        'snr_db': _format_number(point.snr_db), 'seed': str(seed)}
    valid = analysis.gain_thresholds(
        point.cfg, point.user, point.snr_db).valid
    analytic = [output for output in outputs if output in ANALYTIC_OUTPUTS]
    if analytic:
        result = analysis.evaluate(point.cfg, point.user, point.snr_db,
            qmc.derive(point.index), outputs=analytic)
        valid = result.valid
        row.update({'op_exact': _format_number(result.op_exact),
            'op_asym': _format_number(result.op_asymptotic),
            'ac_c': _format_number(result.ac_common),
            'ac_p': _format_number(result.ac_private),
            'ac_sum': _format_number(result.ac_sum),
            'err_est': _format_number(result.err_estimate)})
    if any(output in MC_OUTPUTS for output in outputs):
        estimates = simkit.simulate(point.cfg, point.user, point.snr_db,
            samples, specfun.derive_seed(seed, point.index))
        if OUTPUT_MC_OP in outputs:
            row.update({
                'op_mc': _format_number(estimates[simkit.METRIC_OP].value),
                'op_mc_hw': _format_number(
                    estimates[simkit.METRIC_OP].half_width_95)})
        if OUTPUT_MC_AC in outputs:
            mc_sum = estimates[simkit.METRIC_AC_SUM]
            row.update({'ac_mc_sum': _format_number(mc_sum.value),
                'ac_mc_hw': _format_number(mc_sum.half_width_95)})
            if OUTPUT_AC in outputs:
                row['ac_gaps'] = {convention: abs(analysis.average_capacity(
                    point.cfg, point.user, point.snr_db,
                    ac_sigma=convention)[2] - mc_sum.value)
                    for convention in (analysis.AC_SIGMA_PAPER,
                        analysis.AC_SIGMA_STD)}
    row['valid'] = _format_number(bool(valid))
    LOGGER.debug("starfas: point %d (user %s, %s=%s, %s dB) done",
        point.index, point.user, sweep.variable, row['sweep_value'],
        point.snr_db)
    return row


def run_campaign(cfg, sweep, qmc, samples=None, seed=0, threads=1):
    """
    Returns the rows of *sweep*, in sweep order whatever the number
    of worker *threads* (0 for one per CPU).
    """
    if not threads:
        threads = os.cpu_count() or 1
    points = expand_points(cfg, sweep)
    LOGGER.info("starfas: %d points over %s on %d thread(s)",
        len(points), sweep.variable, threads)
    scenario_id = '%s-%s' % (cfg.scenario_id, scenario_digest(cfg, sweep))

    def _evaluate(point):
        return evaluate_point(point, sweep, qmc, samples, seed)

    if threads == 1:
        rows = [_evaluate(point) for point in points]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            rows = list(executor.map(_evaluate, points))
    for row in rows:
        row['scenario_id'] = scenario_id
    return rows


def compare_ac_conventions(rows):
    """
    Returns, per user, the mean distance between each analytic capacity
    convention and the Monte Carlo mean, and the closer convention.
    """
    summary = {}
    for row in rows:
        gaps = row.get('ac_gaps')
        if not gaps:
            continue
        totals = summary.setdefault(row['user'], {'points': 0})
        totals['points'] += 1
        for convention, gap in gaps.items():
            totals[convention] = totals.get(convention, 0.0) + gap
    for totals in summary.values():
        for convention in (analysis.AC_SIGMA_PAPER, analysis.AC_SIGMA_STD):
            totals[convention] /= totals['points']
        totals['better'] = min(
            (analysis.AC_SIGMA_PAPER, analysis.AC_SIGMA_STD),
            key=lambda convention, totals=totals: totals[convention])
    return summary


def _parse_number(text):
    if text is None or text == '':
        return None
    return float(text)


def compare_op_estimates(rows):
    """
    Returns, per user, how far the Monte Carlo and the high-SNR outage
    probabilities lie from the exact one.

    A Monte Carlo point disagrees when the gap exceeds
    ``max(0.02, 3 half-widths)``. High-SNR errors are relative and only
    reported where the exact OP is at most 1e-3.
    """
    summary = {}
    for row in rows:
        exact = _parse_number(row.get('op_exact'))
        if exact is None:
            continue
        point = '%s@%s' % (row['sweep_value'], row['snr_db'])
        estimate = _parse_number(row.get('op_mc'))
        if estimate is not None:
            totals = summary.setdefault(row['user'], {}).setdefault(
                'mc', {'points': 0, 'max_gap': 0.0, 'disagreements': []})
            gap = abs(estimate - exact)
            totals['points'] += 1
            totals['max_gap'] = max(totals['max_gap'], gap)
            if gap > max(OP_AGREEMENT_FLOOR,
                         3.0 * _parse_number(row['op_mc_hw'])):
                totals['disagreements'] += [point]
        asymptotic = _parse_number(row.get('op_asym'))
        if asymptotic is not None and 0 < exact <= ASYMPTOTIC_REGION:
            totals = summary.setdefault(row['user'], {}).setdefault(
                'asymptotic', {'points': 0, 'max_rel_error': 0.0})
            totals['points'] += 1
            totals['max_rel_error'] = max(totals['max_rel_error'],
                abs(asymptotic - exact) / exact)
    return summary


def write_csv(rows, path):
    with open(path, 'w', newline='') as csv_file:
        writer = csv.writer(csv_file, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([row.get(column, '') for column in CSV_HEADER])
    return path


def read_csv(path):
    with open(path, newline='') as csv_file:
        return list(csv.DictReader(csv_file))


def write_results(rows, out_dir, name, cfg, sweep, command, flags):
    """
    Writes ``<name>.csv`` and the ``<name>.meta.json`` needed to
    regenerate it, and returns the path to the CSV file.
    """
    if not os.path.isdir(out_dir):
        os.makedirs(out_dir)
    csv_path = write_csv(rows, os.path.join(out_dir, name + '.csv'))
    meta = {
        'command': command,
        'flags': flags,
        'scenario_digest': scenario_digest(cfg, sweep),
        'scenario': scenario_as_text(cfg, sweep),
        'version': __version__,
    }
    ac_summary = compare_ac_conventions(rows)
    if ac_summary:
        meta['ac_sigma_comparison'] = ac_summary
    op_summary = compare_op_estimates(rows)
    if op_summary:
        meta['op_comparison'] = op_summary
    for user, totals in sorted(op_summary.items()):
        if totals.get('mc', {}).get('disagreements'):
            LOGGER.warning("starfas: Monte Carlo and exact OP of user %s"
                " disagree at %s", user,
                ', '.join(totals['mc']['disagreements']))
    with open(os.path.join(out_dir, name + '.meta.json'), 'w') as meta_file:
        json.dump(meta, meta_file, indent=2, sort_keys=True)
        meta_file.write('\n')
    LOGGER.info("starfas: wrote %d rows to %s", len(rows), csv_path)
    return csv_path
