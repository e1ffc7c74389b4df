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
Monte Carlo channel simulator for the STAR-RIS link.

Every realization draws Rician fading on both hops and a phase error per
element, forms the equivalent channel at each port and keeps the port with
the largest gain. Campaigns are split into fixed-size chunks, each with its
own random stream derived from ``(seed, chunk index)``, so estimates do not
depend on how chunks are scheduled.
"""
import logging, math
from dataclasses import dataclass

import numpy as np

from . import settings as app_settings, specfun
from .analysis import sinr_common, sinr_private
from .exceptions import DomainError
from .models import user_correlation

LOGGER = logging.getLogger(__name__)

METRIC_OP = 'op'
METRIC_AC_COMMON = 'ac_c'
METRIC_AC_PRIVATE = 'ac_p'
METRIC_AC_SUM = 'ac_sum'

Z_95 = 1.959963984540054

# Smallest sample count the standalone estimators accept.
MIN_ESTIMATE_SAMPLES = 1000


@dataclass(frozen=True)
class McEstimate:
    metric: str
    value: float
    half_width_95: float
    samples: int
    seed: int
    reliable: bool = True


def sample_von_mises(kappa, count, seed):
    """
    Returns *count* zero-mean von Mises angles in (-pi, pi].
    """
    if kappa < 0:
        raise DomainError("kappa=%s must be nonnegative" % kappa)
    rng = np.random.default_rng(seed)
    if math.isinf(kappa):
        return np.zeros(count)
    angles = rng.vonmises(0.0, kappa, size=count)
    return np.where(angles <= -np.pi, angles + 2.0 * np.pi, angles)


def _complex_normal(rng, shape):
    return (rng.standard_normal(shape)
        + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def _draw_channels(cfg, user, count, rng, chol):
    """
    Returns a (count, port_count) array of equivalent channels.
    """
    k_elements = cfg.k_elements
    port_count = chol.shape[0]
    los = math.sqrt(cfg.rice_k / (cfg.rice_k + 1.0))
    diffuse = math.sqrt(1.0 / (cfg.rice_k + 1.0))

    # BS to element k, seen identically by every port.
    h_bs = los * np.exp(2j * np.pi * rng.random((count, k_elements))) \
        + diffuse * _complex_normal(rng, (count, k_elements))
    # Element k to port n: the specular part is common to all ports,
    # the scattered part follows the port correlation.
    specular = np.exp(2j * np.pi * rng.random((count, k_elements)))
    scattered = _complex_normal(rng, (count, k_elements, port_count)) @ chol.T
    h_user = los * specular[:, :, np.newaxis] + diffuse * scattered

    if cfg.phase_error.is_ideal:
        rotation = np.ones((count, k_elements))
    else:
        angles = rng.vonmises(0.0, cfg.phase_error.kappa,
            size=(count, k_elements))
        rotation = np.exp(1j * angles)
    # The RIS is configured once, so the same phase error applies
    # whichever port is selected afterwards.
    terms = (np.abs(h_bs) * rotation)[:, :, np.newaxis] * np.abs(h_user)
    return cfg.beta(user) / k_elements * terms.sum(axis=1)


def draw_channel_realization(cfg, user, seed):
    """
    Returns the equivalent channel at each port for one realization.
    """
    correlation = user_correlation(cfg, user)
    chol = specfun.correlation_cholesky(
        correlation.matrix, jitter=correlation.jitter)
    return _draw_channels(cfg, user, 1, np.random.default_rng(seed), chol)[0]


def _chunks(samples, chunk_size):
    chunk_size = max(1, int(chunk_size))
    for index, start in enumerate(range(0, samples, chunk_size)):
        yield index, min(chunk_size, samples - start)


def iter_port_gains(cfg, user, samples, seed, chunk_size=None):
    """
    Yields (count, port_count) arrays of port gains ``|H_u^n|^2``,
    chunk after chunk.
    """
    if chunk_size is None:
        chunk_size = app_settings.MC_CHUNK_SIZE
    correlation = user_correlation(cfg, user)
    chol = specfun.correlation_cholesky(
        correlation.matrix, jitter=correlation.jitter)
    for index, count in _chunks(samples, chunk_size):
        rng = np.random.default_rng(specfun.derive_seed(seed, index))
        yield np.abs(_draw_channels(cfg, user, count, rng, chol)) ** 2


def sample_best_port_gains(cfg, user, samples, seed, chunk_size=None):
    return np.concatenate([gains.max(axis=1) for gains in iter_port_gains(
        cfg, user, samples, seed, chunk_size=chunk_size)])


def simulate(cfg, user, snr_db, samples, seed, chunk_size=None):
    """
    Returns a dictionary of estimates keyed by metric: the outage probability
    and the common, private and sum capacities at the best port.
    """
    #pylint:disable=too-many-locals
    if samples < 1:
        raise DomainError("samples=%s must be positive" % samples)
    thresholds = cfg.user_thresholds(user)
    outages = 0
    sums = np.zeros(3)
    squares = np.zeros(3)
    for gains in iter_port_gains(cfg, user, samples, seed,
                                 chunk_size=chunk_size):
        best = gains.max(axis=1)
        common = sinr_common(best, cfg, user, snr_db)
        private = sinr_private(best, cfg, user, snr_db)
        outages += int(np.count_nonzero(
            (common < thresholds.gamma_th_c)
            | (private < thresholds.gamma_th_p)))
        rates = np.column_stack([np.log2(1.0 + common),
            np.log2(1.0 + private)])
        rates = np.column_stack([rates, rates.sum(axis=1)])
        sums += rates.sum(axis=0)
        squares += (rates ** 2).sum(axis=0)

    prob = outages / samples
    estimates = {METRIC_OP: McEstimate(metric=METRIC_OP, value=prob,
        half_width_95=Z_95 * math.sqrt(prob * (1.0 - prob) / samples),
        samples=samples, seed=seed,
        reliable=prob >= app_settings.MC_RELIABILITY_FLOOR)}
    if not estimates[METRIC_OP].reliable:
        LOGGER.warning("starfas: Monte Carlo OP %g for user %s at %s dB"
            " is below the reliability floor", prob, user, snr_db)
    means = sums / samples
    variances = np.maximum(squares / samples - means ** 2, 0.0)
    if samples > 1:
        variances *= samples / (samples - 1.0)
    for idx, metric in enumerate(
            (METRIC_AC_COMMON, METRIC_AC_PRIVATE, METRIC_AC_SUM)):
        estimates[metric] = McEstimate(metric=metric, value=float(means[idx]),
            half_width_95=float(Z_95 * math.sqrt(variances[idx] / samples)),
            samples=samples, seed=seed)
    return estimates


def _check_estimate_samples(samples):
    if samples < MIN_ESTIMATE_SAMPLES:
        raise DomainError("samples=%s must be at least %d" % (
            samples, MIN_ESTIMATE_SAMPLES))


def estimate_op(cfg, user, snr_db, samples, seed, chunk_size=None):
    """
    Returns the fraction of realizations where the best port misses
    the common or the private SINR target.
    """
    _check_estimate_samples(samples)
    return simulate(cfg, user, snr_db, samples, seed,
        chunk_size=chunk_size)[METRIC_OP]


def estimate_ac(cfg, user, snr_db, samples, seed, chunk_size=None):
    """
    Returns the empirical common, private and sum capacities.
    """
    _check_estimate_samples(samples)
    estimates = simulate(cfg, user, snr_db, samples, seed,
        chunk_size=chunk_size)
    return (estimates[METRIC_AC_COMMON], estimates[METRIC_AC_PRIVATE],
        estimates[METRIC_AC_SUM])
