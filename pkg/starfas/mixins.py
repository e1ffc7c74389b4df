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

import logging

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from . import settings
from .campaigns import SweepSpec, run_campaign, write_results, SWEEP_SNR
from .exceptions import DomainError
from .forms import load_scenario
from .specfun import QmcSettings


LOGGER = logging.getLogger(__name__)

CONFIG_ERROR = 2


class ScenarioCommandMixin(object):
    """
    Options shared by the commands that evaluate a scenario file.

    Command-line flags override the scenario file, which overrides
    the ``STARFAS`` settings.
    """
    command_name = None
    outputs = ()

    def add_arguments(self, parser):
        parser.add_argument('--config', action='store', dest='config',
            required=True, help="scenario file (path or name of a shipped"
            " scenario)")
        parser.add_argument('--out', action='store', dest='out',
            default=None, help="directory where results are written")
        parser.add_argument('--seed', action='store', dest='seed', type=int,
            default=None, help="master seed of every random stream")
        parser.add_argument('--samples', action='store', dest='samples',
            type=int, default=None, help="Monte Carlo samples per point")
        parser.add_argument('--threads', action='store', dest='threads',
            type=int, default=None, help="worker threads (0 = one per CPU)")
        parser.add_argument('--tol', action='store', dest='tol', type=float,
            default=None, help="absolute tolerance of the copula integrals")
        parser.add_argument('--kernel', action='store', dest='kernel',
            choices=settings.KERNEL_CHOICES, default=None,
            help="port correlation kernel")
        parser.add_argument('--ac-sigma', action='store', dest='ac_sigma',
            choices=settings.AC_SIGMA_CHOICES, default=None,
            help="spread used by the average capacity estimate")

    @staticmethod
    def _option(options, key, default):
        value = options.get(key)
        return default if value is None else value

    def get_flags(self, options):
        return {
            'out': self._option(options, 'out', settings.OUTPUT_DIR),
            'seed': self._option(options, 'seed', settings.SEED),
            'samples': self._option(options, 'samples', settings.MC_SAMPLES),
            'threads': self._option(options, 'threads', settings.THREADS),
            'tol': self._option(
                options, 'tol', settings.QMC_TARGET_ABS_TOL),
            'kernel': options.get('kernel'),
            'ac_sigma': options.get('ac_sigma'),
        }

    def get_scenario(self, options):
        """
        Returns the ``(ScenarioConfig, SweepSpec or None)`` pair of
        the ``--config`` file with flag overrides applied.
        """
        cfg, sweep = load_scenario(options['config'])
        changes = {key: options[key] for key in ('kernel', 'ac_sigma')
            if options.get(key)}
        if changes:
            cfg = cfg.replace(**changes)
        return cfg, sweep

    def get_sweep(self, cfg, sweep):
        #pylint:disable=unused-argument
        return SweepSpec(variable=SWEEP_SNR, values=cfg.snr_grid_db,
            outputs=self.outputs)

    def get_qmc_settings(self, flags):
        try:
            return QmcSettings.from_settings(
                target_abs_tol=flags['tol'], seed=flags['seed'])
        except DomainError as err:
            raise ValidationError(str(err), code='range')

    def run_scenario(self, options):
        cfg, sweep = self.get_scenario(options)
        sweep = self.get_sweep(cfg, sweep)
        flags = self.get_flags(options)
        if flags['samples'] < 1 or flags['threads'] < 0:
            raise ValidationError(
                "--samples must be positive and --threads nonnegative",
                code='range')
        qmc = self.get_qmc_settings(flags)
        rows = run_campaign(cfg, sweep, qmc, samples=flags['samples'],
            seed=flags['seed'], threads=flags['threads'])
        return write_results(rows, flags['out'],
            '%s_%s' % (cfg.scenario_id, self.command_name), cfg, sweep,
            self.command_name, flags)

    def handle(self, *args, **options):
        if options.get('verbosity', 1) > 1:
            logging.getLogger('starfas').setLevel(logging.DEBUG)
        try:
            csv_path = self.run_scenario(options)
        except ValidationError as err:
            raise CommandError("\n".join(err.messages),
                returncode=CONFIG_ERROR)
        except DomainError as err:
            # Scenario values the models cannot evaluate.
            raise CommandError(str(err), returncode=CONFIG_ERROR)
        except OSError as err:
            raise CommandError(str(err), returncode=CONFIG_ERROR)
        self.stdout.write(csv_path)
