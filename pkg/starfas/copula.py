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
Distribution of the gain at the best port of a fluid antenna.

Port gains share a Gamma marginal and are tied together by a Student-t
copula whose dependence matrix is the Jakes port correlation. The best port
gain is below ``g`` only when every port gain is, so its CDF is the copula
evaluated at the marginal CDF repeated on every coordinate.
"""
import logging, warnings
from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from . import specfun
from .exceptions import DomainError, ModelDomainError, NoiseWarning
from .models import user_correlation, user_marginal


LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BestPortGainLaw:
    """
    Joint law of the port gains of one user.
    """
    marginal: object
    correlation: object
    port_count: int = None

    def __post_init__(self):
        if self.port_count is None:
            object.__setattr__(
                self, 'port_count', self.correlation.dimension)
        if self.port_count != self.correlation.dimension:
            raise DomainError("%d ports but a %dx%d correlation matrix" % (
                self.port_count, self.correlation.dimension,
                self.correlation.dimension))
        if self.marginal.mean_gain <= 0 or self.marginal.shape <= 0:
            raise ModelDomainError(
                "Gamma marginal (mean=%s, shape=%s) must be positive" % (
                self.marginal.mean_gain, self.marginal.shape))

    @classmethod
    def for_user(cls, cfg, user):
        return cls(marginal=user_marginal(cfg, user),
            correlation=user_correlation(cfg, user))

    @property
    def nu(self):
        return self.correlation.nu

    @property
    def jitter(self):
        return self.correlation.jitter


def copula_cdf(law, prob, settings):
    """
    Returns ``(C(prob, ..., prob), err_estimate)`` for the Student-t copula
    of *law*.
    """
    prob = float(prob)
    if prob <= 0:
        return 0.0, 0.0
    if prob >= 1:
        return 1.0, 0.0
    if law.port_count == 1:
        return prob, 0.0
    quantile = specfun.student_t_quantile(prob, law.nu)
    return specfun.mvt_cdf(np.full(law.port_count, quantile),
        law.correlation.matrix, law.nu, settings=settings, jitter=law.jitter)


def max_gain_cdf(law, gain, settings):
    """
    Returns P(max_n g_n <= gain).
    """
    if gain <= 0:
        return 0.0
    value, _ = copula_cdf(law, law.marginal.cdf(gain), settings)
    return value


def _copula_log_density(law, prob):
    """
    Log density of the Student-t copula on the diagonal point
    ``(prob, ..., prob)``.
    """
    tiny = np.finfo(float).tiny
    prob = min(max(prob, tiny), 1.0 - np.finfo(float).eps)
    quantile = specfun.student_t_quantile(prob, law.nu)
    point = np.full(law.port_count, quantile)
    shape = law.correlation.matrix + law.jitter * np.eye(law.port_count)
    joint = stats.multivariate_t.logpdf(point, shape=shape, df=law.nu)
    return float(joint - law.port_count * stats.t.logpdf(quantile, df=law.nu))


def diagonal_joint_density(law, gain):
    """
    Returns the product of the port densities at *gain* weighted by the
    copula density at the common quantile vector.

    This is the joint density of the port gains on the diagonal, not the
    density of their maximum (see ``max_gain_density_numeric``).
    """
    if gain <= 0:
        raise DomainError("gain=%s must be positive" % gain)
    log_marginal = stats.gamma.logpdf(
        gain, a=law.marginal.shape, scale=law.marginal.scale)
    if law.port_count == 1:
        return float(np.exp(log_marginal))
    return float(np.exp(law.port_count * log_marginal
        + _copula_log_density(law, law.marginal.cdf(gain))))


def max_gain_density_numeric(law, gain, step, settings):
    """
    Returns the density of the best port gain as a central difference
    of ``max_gain_cdf``.

    Both evaluations share ``settings.seed`` so most of the QMC noise cancels
    in the difference.
    """
    if step <= 0 or gain <= step:
        raise DomainError("need 0 < step < gain (got step=%s, gain=%s)" % (
            step, gain))
    if step < 100 * settings.target_abs_tol * law.marginal.mean_gain:
        warnings.warn(NoiseWarning("step=%g is small compared to the QMC"
            " tolerance %g" % (step, settings.target_abs_tol)))
    upper = max_gain_cdf(law, gain + step, settings)
    lower = max_gain_cdf(law, gain - step, settings)
    return max(0.0, (upper - lower) / (2.0 * step))


def sample_copula_gains(law, count, seed):
    """
    Returns a (count, port_count) array of port gains drawn from the
    Gamma marginal coupled by the Student-t copula.
    """
    if count < 1:
        raise DomainError("count=%s must be at least 1" % count)
    rng = np.random.default_rng(seed)
    chol = specfun.correlation_cholesky(
        law.correlation.matrix, jitter=law.jitter)
    normals = rng.standard_normal((count, law.port_count)) @ chol.T
    mixing = np.sqrt(rng.chisquare(law.nu, size=count) / law.nu)
    probs = special.stdtr(law.nu, normals / mixing[:, np.newaxis])
    probs = np.clip(probs, np.finfo(float).tiny, 1.0 - np.finfo(float).eps)
    return special.gammaincinv(law.marginal.shape, probs) * law.marginal.scale
