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

import math, warnings

import numpy as np
from django.test import SimpleTestCase

from starfas import analysis
from starfas.copula import BestPortGainLaw
from starfas.exceptions import LowSnrWarning
from starfas.models import (CorrelationModel, FasGrid, GammaMarginal,
    PhaseError, ScenarioConfig, path_loss, user_marginal)
from starfas.specfun import QmcSettings


TAS = FasGrid(n1=1, n2=1, w1=0, w2=0)

CEILING_R = math.log2(2.5) + math.log2(4.0)
CEILING_T = math.log2(2.5) + math.log2(4.0 / 3.0)


def _tas(cfg):
    return cfg.replace(grid_r=TAS, grid_t=TAS)


class SinrTests(SimpleTestCase):

    def test_limits(self):
        cfg = ScenarioConfig()
        self.assertEqual(analysis.sinr_common(0, cfg, 'r', 40), 0.0)
        self.assertEqual(analysis.sinr_private(0, cfg, 't', 40), 0.0)
        self.assertAlmostEqual(
            analysis.sinr_common(1e12, cfg, 'r', 40), 1.5, places=6)
        self.assertAlmostEqual(
            analysis.sinr_private(1e12, cfg, 'r', 40), 3.0, places=6)
        self.assertAlmostEqual(
            analysis.sinr_private(1e12, cfg, 't', 40), 1 / 3.0, places=6)

    def test_no_interference(self):
        cfg = ScenarioConfig(alpha_c=1)
        gain = 1.0 / (path_loss(cfg, 'r') * cfg.k_elements ** 2)
        self.assertAlmostEqual(
            analysis.sinr_common(gain, cfg, 'r', 0.0), 1.0, places=12)

    def test_vectorized(self):
        values = analysis.sinr_common(
            np.array([0.1, 0.2]), ScenarioConfig(), 'r', 50)
        self.assertEqual(values.shape, (2,))


class GainThresholdsTests(SimpleTestCase):

    def test_reference_split(self):
        thresholds = analysis.gain_thresholds(ScenarioConfig(), 'r', 50)
        self.assertTrue(thresholds.valid)
        scale = analysis.link_scale(ScenarioConfig(), 'r', 50)
        self.assertAlmostEqual(thresholds.gamma_hat_c, 1 / (scale * 0.2),
            places=10)
        self.assertEqual(thresholds.gamma_th,
            max(thresholds.gamma_hat_c, thresholds.gamma_hat_p))

    def test_invalid_boundary(self):
        thresholds = analysis.gain_thresholds(
            ScenarioConfig(alpha_c=0.5), 'r', 50)
        self.assertFalse(thresholds.valid)
        self.assertEqual(thresholds.violations, ('common',))
        self.assertEqual(thresholds.gamma_hat_c, math.inf)
        self.assertTrue(analysis.gain_thresholds(
            ScenarioConfig(alpha_c=0.5 + 1e-9), 'r', 50).valid)

    def test_transmit_private_margin(self):
        cfg = ScenarioConfig()
        thresholds = analysis.gain_thresholds(cfg, 't', 50)
        self.assertTrue(thresholds.valid)
        margin = 0.1 - 0.3 * 10 ** -0.7
        self.assertAlmostEqual(margin, 0.04014, places=5)
        self.assertAlmostEqual(thresholds.gamma_hat_p, 10 ** -0.7
            / (analysis.link_scale(cfg, 't', 50) * margin), places=10)

    def test_private_violation(self):
        cfg = ScenarioConfig(private_split_r=0.1)
        self.assertEqual(
            analysis.gain_thresholds(cfg, 'r', 50).violations, ('private',))


class OutageTests(SimpleTestCase):

    def setUp(self):
        self.settings = QmcSettings()

    def test_single_port(self):
        cfg = _tas(ScenarioConfig())
        result = analysis.outage_probability(cfg, 'r', 50, self.settings)
        gamma_th = analysis.gain_thresholds(cfg, 'r', 50).gamma_th
        self.assertAlmostEqual(result.op_exact,
            user_marginal(cfg, 'r').cdf(gamma_th), places=14)
        self.assertTrue(result.valid)

    def test_high_snr(self):
        result = analysis.outage_probability(
            ScenarioConfig(), 'r', 80, self.settings)
        self.assertLess(result.op_exact, 1e-6)

    def test_invalid_region(self):
        result = analysis.outage_probability(
            ScenarioConfig(alpha_c=0.4), 't', 50, self.settings)
        self.assertEqual(result.op_exact, 1.0)
        self.assertFalse(result.valid)
        self.assertEqual(analysis.outage_asymptotic(
            ScenarioConfig(alpha_c=0.4), 't', 50, self.settings), 1.0)

    def test_nonincreasing_in_snr(self):
        cfg = ScenarioConfig()
        for user in ('r', 't'):
            results = [analysis.outage_probability(
                cfg, user, snr_db, self.settings)
                for snr_db in (40, 45, 50, 55, 60)]
            for prev, curr in zip(results[:-1], results[1:]):
                self.assertLessEqual(curr.op_exact, prev.op_exact
                    + 3 * (prev.err_estimate + curr.err_estimate))

    def test_nonincreasing_in_elements(self):
        values = [analysis.outage_probability(ScenarioConfig(
            k_elements=k_elements), 'r', 50, self.settings).op_exact
            for k_elements in (10, 20, 30, 40)]
        for prev, curr in zip(values[:-1], values[1:]):
            self.assertLessEqual(curr, prev + 1e-3)

    def test_ideal_phase_ordering(self):
        cfg = ScenarioConfig()
        ideal = cfg.replace(phase_error=PhaseError.ideal())
        for snr_db in (45, 50, 55):
            for user in ('r', 't'):
                self.assertLessEqual(analysis.outage_probability(
                    ideal, user, snr_db, self.settings).op_exact,
                    analysis.outage_probability(
                    cfg, user, snr_db, self.settings).op_exact + 1e-3)

    def test_fas_below_tas(self):
        cfg = ScenarioConfig()
        for snr_db in (45, 50, 55, 60):
            for user in ('r', 't'):
                self.assertLessEqual(analysis.outage_probability(
                    cfg, user, snr_db, self.settings).op_exact,
                    analysis.outage_probability(
                    _tas(cfg), user, snr_db, self.settings).op_exact + 1e-3)

    def test_beta_r_tradeoff(self):
        cfg = ScenarioConfig(k_elements=55)
        reflect = []
        transmit = []
        for beta_r in np.linspace(0.45, 0.9, 10):
            point = cfg.replace(beta_r=beta_r)
            reflect += [analysis.outage_probability(
                point, 'r', 50, self.settings).op_exact]
            transmit += [analysis.outage_probability(
                point, 't', 50, self.settings).op_exact]
        self.assertTrue(np.all(np.diff(reflect) <= 1e-3))
        self.assertTrue(np.all(np.diff(transmit) >= -1e-3))

    def test_alpha_c_interior_minimum(self):
        cfg = ScenarioConfig(k_elements=55)
        alphas = [0.3, 0.4, 0.5, 0.55, 0.6, 0.65, 0.7, 0.8, 0.9, 0.95]
        for user in ('r', 't'):
            results = [analysis.outage_probability(cfg.replace(
                alpha_c=alpha_c), user, 45, self.settings)
                for alpha_c in alphas]
            for alpha_c, result in zip(alphas, results):
                if alpha_c <= 0.5:
                    self.assertFalse(result.valid)
                    self.assertEqual(result.op_exact, 1.0)
                else:
                    self.assertTrue(result.valid)
            valid = [result.op_exact for result in results if result.valid]
            best = int(np.argmin(valid))
            self.assertNotIn(best, (0, len(valid) - 1))
            self.assertEqual(alphas[3 + best], 0.6)


class AsymptoticTests(SimpleTestCase):

    def test_relative_error(self):
        # With few elements the Gamma shape is close to 1 and the leading
        # term of the expansion is accurate as soon as OP <= 1e-3.
        cfg = _tas(ScenarioConfig(k_elements=2))
        settings = QmcSettings()
        for snr_db in range(40, 131, 2):
            exact = analysis.outage_probability(
                cfg, 'r', snr_db, settings).op_exact
            if exact <= 1e-3:
                break
        self.assertLessEqual(exact, 1e-3)
        asymptotic = analysis.outage_asymptotic(cfg, 'r', snr_db, settings)
        self.assertLessEqual(abs(exact - asymptotic) / exact, 0.05)

    def test_reference_point_clamps(self):
        # At the first grid point of the reference scenario where OP falls
        # below 1e-3, the Gamma shape (about 14) keeps the leading term
        # above 1 and it clamps.
        cfg = ScenarioConfig()
        settings = QmcSettings()
        self.assertGreater(analysis.outage_probability(
            cfg, 'r', 40, settings).op_exact, 1e-3)
        exact = analysis.outage_probability(cfg, 'r', 50, settings).op_exact
        self.assertLess(exact, 1e-3)
        self.assertGreater(exact, 1e-5)
        with self.assertWarns(LowSnrWarning):
            self.assertEqual(
                analysis.outage_asymptotic(cfg, 'r', 50, settings), 1.0)

    def test_unit_shape(self):
        marginal = GammaMarginal(mean_gain=0.4, shape=1.0)
        self.assertAlmostEqual(
            analysis.asymptotic_marginal_cdf(marginal, 0.01), 0.01 / 0.4,
            places=14)
        self.assertAlmostEqual(
            analysis.asymptotic_marginal_cdf(marginal, 1e-4),
            1 - math.exp(-1e-4 / 0.4), delta=1e-7)

    def test_power_law(self):
        marginal = GammaMarginal(mean_gain=0.4, shape=2.0)
        self.assertAlmostEqual(
            analysis.asymptotic_marginal_cdf(marginal, 0.01)
            / analysis.asymptotic_marginal_cdf(marginal, 0.001), 100.0,
            places=8)

    def test_low_snr_clamp(self):
        marginal = GammaMarginal(mean_gain=1.0, shape=2.0)
        with self.assertWarns(LowSnrWarning):
            self.assertEqual(
                analysis.asymptotic_marginal_cdf(marginal, 10.0), 1.0)


class AverageCapacityTests(SimpleTestCase):

    def test_expected_max_gain(self):
        marginal = GammaMarginal(mean_gain=0.4, shape=10.0)
        single = BestPortGainLaw(marginal=marginal,
            correlation=CorrelationModel(matrix=np.eye(1)))
        self.assertEqual(analysis.expected_max_gain(single), 0.4)
        uncorrelated = BestPortGainLaw(marginal=marginal,
            correlation=CorrelationModel(matrix=np.eye(4)))
        self.assertAlmostEqual(analysis.expected_max_gain(uncorrelated),
            0.4 + 0.016 * 0.6744897501960817, places=12)
        self.assertAlmostEqual(analysis.expected_max_gain(uncorrelated,
            ac_sigma=analysis.AC_SIGMA_STD),
            0.4 + 0.4 / math.sqrt(10) * 0.6744897501960817, places=12)
        with self.assertRaises(ValueError):
            analysis.expected_max_gain(uncorrelated, ac_sigma='median')

    def test_effective_correlation(self):
        self.assertEqual(analysis.effective_correlation(np.ones((4, 4))), 1.0)
        self.assertEqual(analysis.effective_correlation(np.eye(3)), 0.0)
        self.assertEqual(analysis.effective_correlation(np.eye(1)), 0.0)

    def test_ceilings(self):
        cfg = ScenarioConfig()
        _, _, ac_sum = analysis.average_capacity(cfg, 'r', 90)
        self.assertAlmostEqual(ac_sum, CEILING_R, delta=1e-3)
        self.assertAlmostEqual(CEILING_R, 3.3219, places=4)
        _, _, ac_sum = analysis.average_capacity(cfg, 't', 90)
        self.assertAlmostEqual(ac_sum, CEILING_T, delta=1e-3)
        self.assertAlmostEqual(CEILING_T, 1.7370, places=4)

    def test_no_private_power(self):
        _, ac_private, _ = analysis.average_capacity(
            ScenarioConfig(alpha_c=1), 'r', 40)
        self.assertEqual(ac_private, 0.0)

    def test_ideal_phase_ordering(self):
        cfg = ScenarioConfig()
        ideal = cfg.replace(phase_error=PhaseError.ideal())
        for snr_db in (20, 40, 60):
            for user in ('r', 't'):
                self.assertGreaterEqual(
                    analysis.average_capacity(ideal, user, snr_db)[2],
                    analysis.average_capacity(cfg, user, snr_db)[2])

    def test_nondecreasing_in_elements(self):
        for snr_db in (20, 40, 60):
            for user in ('r', 't'):
                values = [analysis.average_capacity(ScenarioConfig(
                    k_elements=k_elements), user, snr_db)[2]
                    for k_elements in (15, 30, 55)]
                self.assertTrue(np.all(np.diff(values) >= 0))

    def test_fas_above_tas(self):
        cfg = ScenarioConfig()
        self.assertGreaterEqual(analysis.expected_max_gain(
            BestPortGainLaw.for_user(cfg, 'r')),
            user_marginal(cfg, 'r').mean_gain)


class EvaluateTests(SimpleTestCase):

    def test_outputs(self):
        result = analysis.evaluate(
            ScenarioConfig(), 'r', 50, QmcSettings(), outputs=('ac',))
        self.assertIsNone(result.op_exact)
        self.assertIsNone(result.op_asymptotic)
        self.assertGreater(result.ac_sum, 0)
        self.assertTrue(result.valid)

    def test_all_outputs(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', LowSnrWarning)
            result = analysis.evaluate(
                ScenarioConfig(), 't', 50, QmcSettings())
        self.assertTrue(0 <= result.op_exact <= 1)
        self.assertTrue(0 <= result.op_asymptotic <= 1)
        self.assertIsNotNone(result.err_estimate)

    def test_no_power(self):
        for beta_r, user in ((1.0, 't'), (0.0, 'r')):
            cfg = ScenarioConfig(beta_r=beta_r)
            result = analysis.evaluate(cfg, user, 50, QmcSettings())
            self.assertEqual(result.op_exact, 1.0)
            self.assertEqual(result.op_asymptotic, 1.0)
            self.assertEqual(result.err_estimate, 0.0)
            self.assertEqual(
                (result.ac_common, result.ac_private, result.ac_sum),
                (0.0, 0.0, 0.0))
            self.assertTrue(result.valid)
        served = analysis.evaluate(
            ScenarioConfig(beta_r=1.0), 'r', 50, QmcSettings())
        self.assertLess(served.op_exact, 1.0)
        self.assertGreater(served.ac_sum, 0.0)
