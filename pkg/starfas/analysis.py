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
Closed-form performance metrics of a rate-splitting STAR-RIS link:
SINRs, outage probability, its high-SNR expansion and the average capacity.
"""
import logging, math, warnings
from dataclasses import dataclass

import numpy as np
from scipy import special

from . import specfun
from .copula import BestPortGainLaw, copula_cdf
from .exceptions import LowSnrWarning
from .models import (complement, db_to_linear, path_loss, private_power,
    rsma_power_split)


LOGGER = logging.getLogger(__name__)

AC_SIGMA_PAPER = 'paper'
AC_SIGMA_STD = 'std'


@dataclass(frozen=True)
class ThresholdSet:
    """
    SINR targets of a user and the channel gains they translate into.
    """
    gamma_th_c: float
    gamma_th_p: float
    gamma_hat_c: float
    gamma_hat_p: float
    gamma_th: float
    valid: bool
    violations: tuple = ()


@dataclass
class PerformanceResult:
    #pylint:disable=too-many-instance-attributes
    user: str
    snr_db: float
    op_exact: float = None
    op_asymptotic: float = None
    ac_common: float = None
    ac_private: float = None
    ac_sum: float = None
    valid: bool = True
    err_estimate: float = None


def link_scale(cfg, user, snr_db):
    """
    Returns ``snr L K^2``, the factor turning a port gain into
    a received SNR.
    """
    return float(db_to_linear(snr_db)) * path_loss(cfg, user) \
        * cfg.k_elements ** 2


def sinr_common(gain, cfg, user, snr_db):
    """
    SINR of the common stream, decoded while treating both private streams
    as interference.
    """
    alpha_c, alpha_p_r, alpha_p_t = rsma_power_split(cfg)
    received = link_scale(cfg, user, snr_db) * np.asarray(gain, dtype=float)
    return specfun._as_result(
        alpha_c * received / ((alpha_p_r + alpha_p_t) * received + 1.0))


def sinr_private(gain, cfg, user, snr_db):
    """
    SINR of the private stream of *user* once the common stream has been
    removed. The private stream of the other user remains as interference.
    """
    received = link_scale(cfg, user, snr_db) * np.asarray(gain, dtype=float)
    return specfun._as_result(private_power(cfg, user) * received
        / (private_power(cfg, complement(user)) * received + 1.0))


def gain_thresholds(cfg, user, snr_db):
    """
    Returns the channel gains below which the common or the private stream
    of *user* is in outage.

    When a target cannot be met at any gain, the corresponding threshold
    is infinite and the set is flagged invalid.
    """
    thresholds = cfg.user_thresholds(user)
    alpha_c, alpha_p_r, alpha_p_t = rsma_power_split(cfg)
    scale = link_scale(cfg, user, snr_db)
    gamma_th_c = thresholds.gamma_th_c
    gamma_th_p = thresholds.gamma_th_p
    violations = []

    common_margin = alpha_c - (alpha_p_r + alpha_p_t) * gamma_th_c
    if common_margin > 0:
        gamma_hat_c = gamma_th_c / (scale * common_margin)
    else:
        gamma_hat_c = math.inf
        violations += ['common']

    private_margin = private_power(cfg, user) \
        - private_power(cfg, complement(user)) * gamma_th_p
    if private_margin > 0:
        gamma_hat_p = gamma_th_p / (scale * private_margin)
    else:
        gamma_hat_p = math.inf
        violations += ['private']

    return ThresholdSet(gamma_th_c=gamma_th_c, gamma_th_p=gamma_th_p,
        gamma_hat_c=gamma_hat_c, gamma_hat_p=gamma_hat_p,
        gamma_th=max(gamma_hat_c, gamma_hat_p),
        valid=not violations, violations=tuple(violations))


def receives_power(cfg, user):
    """
    Returns False when the STAR-RIS sends no energy toward *user*
    (``beta_r`` of 0 or 1), in which case every port gain is zero.
    """
    if cfg.beta(user) > 0:
        return True
    LOGGER.debug("starfas: user %s receives no power (beta_r=%s)",
        user, cfg.beta_r)
    return False


def outage_probability(cfg, user, snr_db, settings, law=None):
    """
    Returns a result carrying the probability that either stream of *user*
    misses its SINR target at the best port.

    Unreachable targets give ``op_exact=1`` with ``valid=False``.
    """
    result = PerformanceResult(user=user, snr_db=snr_db)
    thresholds = gain_thresholds(cfg, user, snr_db)
    if not thresholds.valid:
        LOGGER.debug("starfas: user %s at %s dB, %s constraint violated",
            user, snr_db, ','.join(thresholds.violations))
        result.op_exact = 1.0
        result.valid = False
        result.err_estimate = 0.0
        return result
    if not receives_power(cfg, user):
        result.op_exact = 1.0
        result.err_estimate = 0.0
        return result
    if law is None:
        law = BestPortGainLaw.for_user(cfg, user)
    result.op_exact, result.err_estimate = copula_cdf(
        law, law.marginal.cdf(thresholds.gamma_th), settings)
    return result


def asymptotic_marginal_cdf(marginal, gain):
    """
    Returns the leading term ``(m g / g_bar)^m / (m Gamma(m))`` of the
    Gamma CDF near zero, clamped to 1.
    """
    if gain <= 0:
        return 0.0
    shape = marginal.shape
    log_value = shape * math.log(shape * gain / marginal.mean_gain) \
        - special.gammaln(shape + 1.0)
    if log_value > 0:
        warnings.warn(LowSnrWarning("high-SNR expansion is %g > 1 at"
            " gain %g, clamped to 1" % (math.exp(min(log_value, 700)), gain)))
        return 1.0
    return math.exp(log_value)


def outage_asymptotic(cfg, user, snr_db, settings, law=None):
    """
    Returns the outage probability with every port CDF replaced by its
    high-SNR expansion.
    """
    thresholds = gain_thresholds(cfg, user, snr_db)
    if not thresholds.valid or not receives_power(cfg, user):
        return 1.0
    if law is None:
        law = BestPortGainLaw.for_user(cfg, user)
    value, _ = copula_cdf(law,
        asymptotic_marginal_cdf(law.marginal, thresholds.gamma_th), settings)
    return value


def effective_correlation(matrix):
    """
    Returns the mean of the off-diagonal entries of *matrix*.
    """
    matrix = np.asarray(matrix, dtype=float)
    size = matrix.shape[0]
    if size < 2:
        return 0.0
    return float((matrix.sum() - np.trace(matrix)) / (size * (size - 1)))


def expected_max_gain(law, ac_sigma=AC_SIGMA_PAPER):
    """
    Returns the extreme-value estimate of the mean best port gain:
    ``g_bar + sigma sqrt(1 + rho_eff) Phi^-1((N - 1) / N)``.

    With ``ac_sigma='paper'`` sigma is ``g_bar^2 / m``, otherwise the
    standard deviation ``g_bar / sqrt(m)``.
    """
    mean_gain = law.marginal.mean_gain
    if law.port_count < 2:
        return mean_gain
    if ac_sigma == AC_SIGMA_STD:
        sigma = mean_gain / math.sqrt(law.marginal.shape)
    elif ac_sigma == AC_SIGMA_PAPER:
        sigma = mean_gain ** 2 / law.marginal.shape
    else:
        raise ValueError("unknown ac_sigma convention '%s'" % str(ac_sigma))
    rho_eff = effective_correlation(law.correlation.matrix)
    return mean_gain + sigma * math.sqrt(1.0 + rho_eff) \
        * specfun.std_normal_quantile(
            (law.port_count - 1.0) / law.port_count)


def average_capacity(cfg, user, snr_db, ac_sigma=None, law=None):
    """
    Returns ``(ac_common, ac_private, ac_sum)`` in bps/Hz, with the
    expectation moved inside the logarithm.
    """
    if ac_sigma is None:
        ac_sigma = cfg.ac_sigma
    if not receives_power(cfg, user):
        return 0.0, 0.0, 0.0
    if law is None:
        law = BestPortGainLaw.for_user(cfg, user)
    gain = expected_max_gain(law, ac_sigma=ac_sigma)
    ac_common = math.log2(1.0 + sinr_common(gain, cfg, user, snr_db))
    ac_private = math.log2(1.0 + sinr_private(gain, cfg, user, snr_db))
    return ac_common, ac_private, ac_common + ac_private


def evaluate(cfg, user, snr_db, settings, outputs=('op', 'op_asym', 'ac')):
    """
    Returns the analytic metrics listed in *outputs* at one SNR point.
    """
    law = None
    if receives_power(cfg, user):
        law = BestPortGainLaw.for_user(cfg, user)
    result = PerformanceResult(user=user, snr_db=snr_db)
    if 'op' in outputs:
        result = outage_probability(cfg, user, snr_db, settings, law=law)
    else:
        result.valid = gain_thresholds(cfg, user, snr_db).valid
    if 'op_asym' in outputs:
        result.op_asymptotic = outage_asymptotic(
            cfg, user, snr_db, settings, law=law)
    if 'ac' in outputs:
        result.ac_common, result.ac_private, result.ac_sum = \
            average_capacity(cfg, user, snr_db, law=law)
    return result
