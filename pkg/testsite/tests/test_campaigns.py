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

import json, math, os, tempfile

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from starfas import campaigns
from starfas.campaigns import SweepSpec
from starfas.models import FasGrid, ScenarioConfig
from starfas.specfun import QmcSettings


class SweepSpecTests(SimpleTestCase):

    def test_grid_values(self):
        sweep = SweepSpec(variable='grid', values=[[4, 0.5], (1, 2, 0, 1)])
        self.assertEqual(sweep.values, ((4, 0.5), (1, 2, 0.0, 1.0)))
        cfg = campaigns.apply_sweep_value(
            ScenarioConfig(), 'grid', sweep.values[0])
        self.assertEqual(cfg.grid_r, FasGrid(
            n1=2, n2=2, w1=math.sqrt(0.5), w2=math.sqrt(0.5)))
        self.assertEqual(cfg.grid_t, cfg.grid_r)
        cfg = campaigns.apply_sweep_value(
            ScenarioConfig(), 'grid', sweep.values[1])
        self.assertEqual(cfg.grid_t.port_count, 2)

    def test_kappa_values(self):
        sweep = SweepSpec(variable='kappa', values=['ideal', 8])
        self.assertEqual(sweep.values, ('ideal', 8.0))
        self.assertTrue(campaigns.apply_sweep_value(
            ScenarioConfig(), 'kappa', 'ideal').phase_error.is_ideal)
        self.assertEqual(campaigns.apply_sweep_value(
            ScenarioConfig(), 'kappa', 2.0).phase_error.kappa, 2.0)

    def test_invalid_values(self):
        for variable, values in (('grid', [(3, 0.5)]),
                                 ('kappa', ['perfect']),
                                 ('kappa', [0]),
                                 ('alpha_c', [1.0]),
                                 ('beta_r', [-0.1]),
                                 ('k_elements', [2.5]),
                                 ('chi', [2.2]),
                                 ('snr_db', [])):
            with self.assertRaises(ValidationError, msg=variable):
                SweepSpec(variable=variable, values=values)

    def test_invalid_output(self):
        with self.assertRaises(ValidationError):
            SweepSpec(variable='snr_db', values=[0], outputs=('ber',))

    def test_format(self):
        self.assertEqual(campaigns.format_sweep_value(55), '55')
        self.assertEqual(campaigns.format_sweep_value(0.1), '0.1')
        self.assertEqual(campaigns.format_sweep_value('ideal'), 'ideal')
        self.assertEqual(
            campaigns.format_sweep_value((4, 0.5)), '(4, 0.5)')


class ExpandPointsTests(SimpleTestCase):

    def test_order(self):
        cfg = ScenarioConfig(snr_grid_db=(10.0, 20.0))
        points = campaigns.expand_points(
            cfg, SweepSpec(variable='k_elements', values=[5, 10]))
        self.assertEqual([(point.sweep_value, point.snr_db, point.user)
            for point in points], [
            (5, 10.0, 'r'), (5, 10.0, 't'), (5, 20.0, 'r'), (5, 20.0, 't'),
            (10, 10.0, 'r'), (10, 10.0, 't'), (10, 20.0, 'r'),
            (10, 20.0, 't')])
        self.assertEqual([point.index for point in points], list(range(8)))
        self.assertEqual(points[-1].cfg.k_elements, 10)

    def test_snr_sweep(self):
        points = campaigns.expand_points(ScenarioConfig(),
            SweepSpec(variable='snr_db', values=[0, 30]))
        self.assertEqual([point.snr_db for point in points],
            [0.0, 0.0, 30.0, 30.0])


class RunCampaignTests(SimpleTestCase):

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.qmc = QmcSettings(sample_budget=2 ** 10)

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_rows(self):
        sweep = SweepSpec(variable='alpha_c', values=[0.4, 0.6])
        rows = campaigns.run_campaign(
            ScenarioConfig(snr_grid_db=(50.0,)), sweep, self.qmc, seed=3)
        self.assertEqual(len(rows), 4)
        self.assertTrue(rows[0]['scenario_id'].startswith('default-'))
        self.assertEqual(rows[0]['op_exact'], '1.0')
        self.assertEqual(rows[0]['valid'], 'false')
        self.assertEqual(rows[2]['valid'], 'true')
        self.assertLess(float(rows[2]['op_exact']), 1.0)
        self.assertEqual(rows[0]['seed'], '3')
        self.assertNotIn('op_mc', rows[0])

    def test_threads(self):
        cfg = ScenarioConfig(snr_grid_db=(40.0, 50.0))
        sweep = SweepSpec(variable='k_elements', values=[20, 30],
            outputs=('op', 'mc_op'))
        serial = campaigns.run_campaign(
            cfg, sweep, self.qmc, samples=500, seed=1, threads=1)
        parallel = campaigns.run_campaign(
            cfg, sweep, self.qmc, samples=500, seed=1, threads=4)
        self.assertEqual(serial, parallel)

    def test_write_results(self):
        cfg = ScenarioConfig(snr_grid_db=(30.0,))
        sweep = SweepSpec(variable='snr_db', values=[30],
            outputs=('ac', 'mc_ac'))
        rows = campaigns.run_campaign(cfg, sweep, self.qmc, samples=500)
        path = campaigns.write_results(rows, self.tmpdir.name, 'smoke', cfg,
            sweep, 'sweep', {'samples': 500})
        self.assertEqual(path, os.path.join(self.tmpdir.name, 'smoke.csv'))
        with open(path) as csv_file:
            self.assertEqual(csv_file.readline().strip(),
                ','.join(campaigns.CSV_HEADER))
        written = campaigns.read_csv(path)
        self.assertEqual(len(written), 2)
        self.assertEqual(written[0]['op_exact'], '')
        self.assertTrue(float(written[0]['ac_mc_sum']) > 0)
        with open(os.path.join(self.tmpdir.name, 'smoke.meta.json')) as meta:
            meta = json.load(meta)
        self.assertEqual(meta['command'], 'sweep')
        self.assertIn('scenario_digest', meta)
        self.assertEqual(set(meta['ac_sigma_comparison']), {'r', 't'})
        self.assertIn(meta['ac_sigma_comparison']['r']['better'],
            ('paper', 'std'))
        self.assertNotIn('op_comparison', meta)

    def test_compare_conventions(self):
        rows = [{'user': 'r', 'ac_gaps': {'paper': 0.1, 'std': 0.3}},
            {'user': 'r', 'ac_gaps': {'paper': 0.3, 'std': 0.1}},
            {'user': 't', 'ac_gaps': {'paper': 0.5, 'std': 0.1}},
            {'user': 't'}]
        summary = campaigns.compare_ac_conventions(rows)
        self.assertAlmostEqual(summary['r']['paper'], 0.2)
        self.assertEqual(summary['r']['points'], 2)
        self.assertEqual(summary['t']['better'], 'std')
        self.assertEqual(campaigns.compare_ac_conventions([{'user': 'r'}]),
            {})

    def test_compare_op_estimates(self):
        def _row(user, value, exact, **columns):
            row = {'user': user, 'sweep_value': value, 'snr_db': 50,
                'op_exact': exact, 'op_asym': '', 'op_mc': '',
                'op_mc_hw': ''}
            row.update(columns)
            return row
        rows = [_row('r', 30, '2e-4', op_asym='3e-4', op_mc='0.0215',
                op_mc_hw='0.002'),
            _row('r', 40, '0.5', op_asym='1.0', op_mc='0.49',
                op_mc_hw='0.01'),
            _row('t', 30, '0.7354', op_mc='0.7552', op_mc_hw='0.004'),
            _row('t', 40, '')]
        summary = campaigns.compare_op_estimates(rows)
        self.assertEqual(summary['r']['mc']['points'], 2)
        self.assertAlmostEqual(summary['r']['mc']['max_gap'], 0.0213)
        self.assertEqual(summary['r']['mc']['disagreements'], ['30@50'])
        self.assertEqual(summary['r']['asymptotic']['points'], 1)
        self.assertAlmostEqual(
            summary['r']['asymptotic']['max_rel_error'], 0.5)
        self.assertEqual(summary['t']['mc']['disagreements'], [])
        self.assertNotIn('asymptotic', summary['t'])
        self.assertEqual(campaigns.compare_op_estimates(
            [_row('r', 30, '0.1')]), {})
