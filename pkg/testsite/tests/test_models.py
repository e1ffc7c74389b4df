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

import math

import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from starfas import specfun
from starfas.exceptions import GeometryError, ModelDomainError
from starfas.models import (CircularMoments, FasGrid, PhaseError,
    ScenarioConfig, a_tilde, circular_moments, db_to_linear, distances,
    gamma_marginal, path_loss, port_correlation, rsma_power_split,
    user_correlation, user_marginal, KERNEL_CYLINDRICAL)


class ScenarioConfigTests(SimpleTestCase):

    def test_energy_conservation(self):
        for beta_r in np.linspace(0, 1, 11):
            cfg = ScenarioConfig(beta_r=beta_r)
            self.assertAlmostEqual(cfg.beta_r ** 2 + cfg.beta_t ** 2, 1.0,
                places=14)

    def test_thresholds(self):
        cfg = ScenarioConfig()
        self.assertEqual(cfg.user_thresholds('r').gamma_th_p, 1.0)
        self.assertAlmostEqual(cfg.user_thresholds('t').gamma_th_p,
            0.19953, places=5)
        self.assertAlmostEqual(db_to_linear(-7), 10 ** -0.7, places=14)
        with self.assertRaises(ValueError):
            cfg.user_thresholds('x')

    def test_fas_grid(self):
        grid = FasGrid.from_ports(4, 0.5)
        self.assertEqual(grid.port_count, 4)
        self.assertAlmostEqual(grid.area, 0.5, places=14)
        self.assertEqual(FasGrid.from_ports(1, 0).port_count, 1)
        with self.assertRaises(ValueError):
            FasGrid.from_ports(3, 1)


class PathLossTests(SimpleTestCase):

    def test_reference_geometry(self):
        cfg = ScenarioConfig()
        d_sris, d_user = distances(cfg, 'r')
        self.assertAlmostEqual(d_sris, 40 * math.sqrt(2), places=12)
        self.assertAlmostEqual(d_user, 20 * math.sqrt(2), places=12)
        self.assertAlmostEqual(path_loss(cfg, 'r') / 1600 ** -2.1, 1.0,
            places=12)

    def test_unit_distances(self):
        cfg = ScenarioConfig(chi=2.0, bs_position=(1, 0, 0),
            ris_position=(0, 0, 0), user_r_position=(0, 1, 0))
        self.assertAlmostEqual(path_loss(cfg, 'r'), 1.0, places=14)

    def test_homogeneity(self):
        cfg = ScenarioConfig()
        farther = cfg.replace(bs_position=(-40, -40, 0),
            user_r_position=(0, 0, 0))
        self.assertAlmostEqual(path_loss(farther, 'r') / path_loss(cfg, 'r'),
            2 ** -4.2, places=12)

    def test_colocated(self):
        cfg = ScenarioConfig(user_t_position=(40, 40, 0))
        with self.assertRaises(GeometryError):
            path_loss(cfg, 't')


class CircularMomentsTests(SimpleTestCase):

    def test_special_cases(self):
        self.assertEqual(circular_moments(PhaseError.ideal()),
            CircularMoments(phi1=1.0, phi2=1.0))
        self.assertEqual(circular_moments(PhaseError.von_mises(0)),
            CircularMoments(phi1=0.0, phi2=0.0))
        moments = circular_moments(PhaseError.von_mises(8))
        self.assertAlmostEqual(moments.phi1, 0.9367, places=4)
        self.assertAlmostEqual(moments.phi2, 0.8228, places=4)

    def test_ordering(self):
        for kappa in (0, 0.5, 1, 2, 4, 8, 16, 64):
            moments = circular_moments(PhaseError.von_mises(kappa))
            self.assertTrue(
                0 <= moments.phi2 <= moments.phi1 <= 1, msg=str(kappa))


class GammaMarginalTests(SimpleTestCase):

    def test_reference_marginal(self):
        cfg = ScenarioConfig()
        a_fourth = specfun.rician_mean_amplitude(1) ** 4
        self.assertAlmostEqual(a_tilde(cfg) ** 4, a_fourth, places=14)
        self.assertAlmostEqual(a_fourth, 0.6756, places=3)
        marginal = user_marginal(cfg, 'r')
        self.assertAlmostEqual(marginal.mean_gain, 0.3794, places=3)
        moments = circular_moments(cfg.phase_error)
        aligned = moments.phi1 ** 2 * a_fourth
        self.assertAlmostEqual(marginal.shape,
            15 * aligned / (1 + moments.phi2 - 2 * aligned), places=10)

    def test_ideal_phases(self):
        a_value = specfun.rician_mean_amplitude(1)
        marginal = gamma_marginal(CircularMoments(1.0, 1.0), a_value, 0.8, 30)
        self.assertAlmostEqual(marginal.shape,
            30 * a_value ** 4 / (4 * (1 - a_value ** 4)), places=10)

    def test_shape_increases(self):
        a_value = specfun.rician_mean_amplitude(1)
        moments = circular_moments(PhaseError.von_mises(8))
        shapes = [gamma_marginal(moments, a_value, 0.8, k_elements).shape
            for k_elements in (5, 10, 30, 55, 100)]
        self.assertTrue(np.all(np.diff(shapes) > 0))
        self.assertAlmostEqual(shapes[3] / shapes[2], 55 / 30, places=12)
        shapes = [gamma_marginal(circular_moments(PhaseError.von_mises(
            kappa)), a_value, 0.8, 30).shape for kappa in (1, 2, 4, 8, 16)]
        self.assertTrue(np.all(np.diff(shapes) > 0))

    def test_zero_amplitude(self):
        marginal = gamma_marginal(CircularMoments(0.9, 0.8), 0.9, 0.0, 30)
        self.assertEqual(marginal.mean_gain, 0.0)

    def test_uniform_phase(self):
        with self.assertRaises(ModelDomainError):
            gamma_marginal(CircularMoments(0.0, 0.0), 0.9, 0.8, 30)

    def test_cdf(self):
        marginal = user_marginal(ScenarioConfig(), 'r')
        self.assertEqual(marginal.cdf(0), 0.0)
        self.assertAlmostEqual(marginal.cdf(marginal.quantile(0.3)), 0.3,
            places=10)


class PortCorrelationTests(SimpleTestCase):

    def test_reference_grid(self):
        correlation = port_correlation(FasGrid())
        matrix = correlation.matrix
        self.assertEqual(matrix.shape, (4, 4))
        self.assertTrue(np.all(np.diag(matrix) == 1.0))
        self.assertTrue(np.allclose(matrix, matrix.T, atol=1e-15, rtol=0))
        self.assertAlmostEqual(matrix[0, 2], -0.2169, places=4)
        self.assertAlmostEqual(matrix[0, 1], -0.2169, places=4)
        # Opposite corners are one wavelength apart.
        self.assertAlmostEqual(matrix[0, 3], 0.0, places=12)
        self.assertTrue(np.all(np.abs(matrix) <= 1.0))
        specfun.correlation_cholesky(matrix, jitter=correlation.jitter)

    def test_colocated_ports(self):
        matrix = port_correlation(FasGrid(n1=2, n2=2, w1=0, w2=0)).matrix
        self.assertTrue(np.all(matrix == 1.0))

    def test_single_port(self):
        correlation = port_correlation(FasGrid(n1=1, n2=1, w1=0, w2=0))
        self.assertEqual(correlation.dimension, 1)

    def test_degenerate_dimension(self):
        matrix = port_correlation(FasGrid(n1=1, n2=3, w1=5, w2=1)).matrix
        self.assertAlmostEqual(matrix[0, 2],
            specfun.spherical_j0(2 * math.pi), places=12)

    def test_cylindrical_kernel(self):
        matrix = port_correlation(FasGrid(), kernel=KERNEL_CYLINDRICAL).matrix
        self.assertAlmostEqual(matrix[0, 1],
            specfun.cylindrical_j0(2 * math.pi * math.sqrt(0.5)), places=12)

    def test_user_correlation_nu(self):
        cfg = ScenarioConfig(copula_nu=5)
        self.assertEqual(user_correlation(cfg, 't').nu, 5)


class PowerSplitTests(SimpleTestCase):

    def test_reference_split(self):
        split = rsma_power_split(ScenarioConfig())
        for value, expected in zip(split, (0.6, 0.3, 0.1)):
            self.assertAlmostEqual(value, expected, places=14)
        self.assertAlmostEqual(sum(split), 1.0, places=14)

    def test_symmetric_split(self):
        split = rsma_power_split(
            ScenarioConfig(alpha_c=0.5, private_split_r=0.5))
        self.assertEqual(split, (0.5, 0.25, 0.25))

    def test_no_private_power(self):
        _, alpha_p_r, alpha_p_t = rsma_power_split(ScenarioConfig(alpha_c=1))
        self.assertEqual((alpha_p_r, alpha_p_t), (0.0, 0.0))

    def test_out_of_range(self):
        with self.assertRaises(ValidationError):
            rsma_power_split(ScenarioConfig(alpha_c=0))
        with self.assertRaises(ValidationError):
            rsma_power_split(ScenarioConfig(private_split_r=1.2))
