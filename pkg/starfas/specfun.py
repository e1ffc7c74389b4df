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
Special functions every other module relies on.

Scalar kernels are thin, domain-checked wrappers around ``scipy.special``.
``mvt_cdf`` estimates the multivariate t CDF with the separation-of-variables
transform of Genz & Bretz, integrated by a randomly shifted lattice rule.
"""
import logging, math, warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy import special

from .exceptions import DomainError, MatrixError, ToleranceWarning


LOGGER = logging.getLogger(__name__)

# Diagonal load added before factorizing a correlation matrix.
DEFAULT_JITTER = 1e-10
# Eigenvalues below this are not attributed to rounding.
PSD_TOLERANCE = 1e-8


@dataclass(frozen=True)
class QmcSettings:
    """
    Budget and seed of a randomized QMC estimate.
    """
    sample_budget: int = 2 ** 13
    randomizations: int = 12
    target_abs_tol: float = 1e-4
    seed: int = 0

    def __post_init__(self):
        if int(self.sample_budget) < 64:
            raise DomainError(
                "sample_budget must be at least 64 (got %s)" %
                self.sample_budget)
        if int(self.randomizations) < 8:
            raise DomainError(
                "randomizations must be at least 8 (got %s)" %
                self.randomizations)
        if not 0 < self.target_abs_tol < 0.1:
            raise DomainError(
                "target_abs_tol must be in (0, 0.1) (got %s)" %
                self.target_abs_tol)
        if not 0 <= int(self.seed) < 2 ** 64:
            raise DomainError(
                "seed must be a 64-bit unsigned integer (got %s)" % self.seed)

    @classmethod
    def from_settings(cls, **kwargs):
        """
        Returns settings initialized from the ``STARFAS`` configuration,
        overridden by *kwargs*.
        """
        from . import settings
        defaults = {
            'sample_budget': settings.QMC_SAMPLE_BUDGET,
            'randomizations': settings.QMC_RANDOMIZATIONS,
            'target_abs_tol': settings.QMC_TARGET_ABS_TOL,
            'seed': settings.SEED,
        }
        defaults.update({key: val
            for key, val in kwargs.items() if val is not None})
        return cls(**defaults)

    def derive(self, *keys):
        """
        Returns a copy whose seed is derived from this seed and *keys*.
        """
        return replace(self, seed=derive_seed(self.seed, *keys))


def derive_seed(master, *keys):
    """
    Returns a 64-bit seed that depends only on *master* and *keys*.
    """
    entropy = [int(master)] + [int(key) for key in keys]
    return int(np.random.SeedSequence(entropy).generate_state(
        1, dtype=np.uint64)[0])


def _check_range(name, value, low=None, high=None,
                 low_open=False, high_open=False):
    values = np.asarray(value, dtype=float)
    if np.any(np.isnan(values)):
        raise DomainError("%s must not be NaN" % name)
    if low is not None:
        bad = (values <= low) if low_open else (values < low)
        if np.any(bad):
            raise DomainError("%s=%s is below the domain bound %s" % (
                name, value, low))
    if high is not None:
        bad = (values >= high) if high_open else (values > high)
        if np.any(bad):
            raise DomainError("%s=%s is above the domain bound %s" % (
                name, value, high))
    return values


def _as_result(values):
    if np.ndim(values) == 0:
        return float(values)
    return values


def regularized_lower_gamma(m, x):
    """
    Returns the regularized lower incomplete Gamma function P(m, x).
    """
    _check_range('m', m, low=0, low_open=True)
    _check_range('x', x, low=0)
    return _as_result(special.gammainc(m, x))


def bessel_i(p, x):
    """
    Returns the modified Bessel function of the first kind I_p(x).
    """
    if np.any(np.asarray(p) < 0) or np.any(
            np.asarray(p) != np.floor(np.asarray(p))):
        raise DomainError("order p=%s must be a nonnegative integer" % p)
    _check_range('x', x, low=0)
    return _as_result(special.iv(p, x))


def bessel_i_ratio(p, x):
    """
    Returns I_p(x) / I_0(x) without overflowing for large x.
    """
    _check_range('x', x, low=0)
    return _as_result(special.ive(p, x) / special.ive(0, x))


def spherical_j0(x):
    """
    Returns sin(x) / x, with the removable singularity at 0 filled in.
    """
    return _as_result(special.spherical_jn(0, np.abs(np.asarray(x, float))))


def cylindrical_j0(x):
    return _as_result(special.j0(x))


def kummer_1f1_half(k_rice):
    """
    Returns 1F1(-1/2; 1; -K), the Laguerre factor of the Rician mean.

    The value is computed as e^{-K/2} [(1 + K) I_0(K/2) + K I_1(K/2)]
    with exponentially scaled Bessel functions so that large Rice factors
    stay finite.
    """
    k_rice = _check_range('k_rice', k_rice, low=0)
    half = k_rice / 2.0
    return _as_result(
        (1.0 + k_rice) * special.ive(0, half) + k_rice * special.ive(1, half))


def rician_mean_amplitude(k_rice):
    """
    Returns E[|h|] for unit-power Rician fading with Rice factor *k_rice*.
    """
    factor = np.asarray(kummer_1f1_half(k_rice))
    return _as_result(
        np.sqrt(np.pi / (4.0 * (np.asarray(k_rice) + 1.0))) * factor)


def std_normal_quantile(p):
    _check_range('p', p, low=0, high=1, low_open=True, high_open=True)
    return _as_result(special.ndtri(p))


def student_t_cdf(x, nu):
    _check_range('nu', nu, low=0, low_open=True)
    return _as_result(special.stdtr(nu, x))


def student_t_quantile(p, nu):
    """
    Returns the inverse CDF of the univariate t-distribution.
    """
    _check_range('p', p, low=0, high=1, low_open=True, high_open=True)
    _check_range('nu', nu, low=0, low_open=True)
    return _as_result(special.stdtrit(nu, p))


def correlation_cholesky(corr, jitter=DEFAULT_JITTER):
    """
    Returns the lower Cholesky factor of *corr* after a diagonal load
    of *jitter*.

    Matrices with colocated ports are singular; the load restores
    positive-definiteness while moving CDF values far below QMC tolerance.
    """
    corr = np.atleast_2d(np.asarray(corr, dtype=float))
    if corr.shape[0] != corr.shape[1]:
        raise MatrixError("correlation matrix must be square (got %s)" % (
            corr.shape,))
    if not np.allclose(corr, corr.T, atol=1e-12, rtol=0):
        raise MatrixError("correlation matrix must be symmetric")
    lowest = float(np.linalg.eigvalsh(corr).min())
    if lowest < -PSD_TOLERANCE:
        raise MatrixError(
            "correlation matrix is not positive semi-definite"
            " (smallest eigenvalue %g)" % lowest)
    load = jitter + max(0.0, -lowest)
    try:
        return np.linalg.cholesky(corr + load * np.eye(corr.shape[0]))
    except np.linalg.LinAlgError as err:
        raise MatrixError(str(err))


def _primes(count):
    """
    Returns the first *count* prime numbers.
    """
    limit = max(16, int(count * (math.log(count + 1)
        + math.log(math.log(count + 3)) + 3)))
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for candidate in range(2, int(limit ** 0.5) + 1):
        if sieve[candidate]:
            sieve[candidate * candidate::candidate] = False
    return np.flatnonzero(sieve)[:count]


def mvt_cdf(upper, corr, nu, settings=None, jitter=DEFAULT_JITTER):
    """
    Estimates P(T_1 <= upper_1, ..., T_d <= upper_d) for a multivariate t
    vector with correlation matrix *corr* and *nu* degrees of freedom.

    Returns ``(value, err_estimate)`` where ``err_estimate`` is the
    standard error across the random shifts of the lattice rule. The
    estimate is a pure function of its arguments; all randomness comes
    from ``settings.seed``.
    """
    #pylint:disable=too-many-locals
    if settings is None:
        settings = QmcSettings()
    _check_range('nu', nu, low=0, low_open=True)
    upper = np.atleast_1d(np.asarray(upper, dtype=float))
    corr = np.atleast_2d(np.asarray(corr, dtype=float))
    if corr.shape != (upper.size, upper.size):
        raise MatrixError("correlation matrix shape %s does not match"
            " %d integration limits" % (corr.shape, upper.size))
    if not np.allclose(np.diag(corr), 1.0, atol=1e-12, rtol=0):
        raise MatrixError("correlation matrix must have a unit diagonal")
    chol = correlation_cholesky(corr, jitter=jitter)
    if np.any(upper == -np.inf):
        return 0.0, 0.0

    # Coordinates without a bound integrate out.
    kept = np.flatnonzero(np.isfinite(upper))
    if kept.size == 0:
        return 1.0, 0.0
    if kept.size < upper.size:
        chol = correlation_cholesky(corr[np.ix_(kept, kept)], jitter=jitter)
        upper = upper[kept]

    dim = upper.size
    diag = np.diag(chol).copy()
    scaled = upper / math.sqrt(nu)
    nb_points = int(settings.sample_budget)
    nb_shifts = int(settings.randomizations)
    # Richtmyer generators; lattice coordinate 0 drives the chi radius.
    generators = np.sqrt(_primes(dim))
    steps = np.arange(1, nb_points + 1, dtype=float)[:, np.newaxis]
    tiny = np.finfo(float).tiny
    top = 1.0 - np.finfo(float).eps

    rng = np.random.default_rng(int(settings.seed))
    estimates = np.empty(nb_shifts)
    for shift_idx in range(nb_shifts):
        shift = rng.random(dim)
        lattice = np.abs(2.0 * np.mod(steps * generators + shift, 1.0) - 1.0)
        lattice = np.clip(lattice, tiny, top)
        radius = np.sqrt(2.0 * special.gammaincinv(nu / 2.0, lattice[:, 0]))
        normals = np.zeros((nb_points, dim))
        weight = np.ones(nb_points)
        width = None
        for idx in range(dim):
            if idx > 0:
                normals[:, idx - 1] = special.ndtri(np.clip(
                    lattice[:, idx] * width, tiny, top))
            partial = normals[:, :idx] @ chol[idx, :idx]
            width = special.ndtr((scaled[idx] * radius - partial) / diag[idx])
            weight *= width
        estimates[shift_idx] = weight.mean()

    value = float(np.clip(estimates.mean(), 0.0, 1.0))
    err_estimate = float(estimates.std(ddof=1) / math.sqrt(nb_shifts))
    if err_estimate > settings.target_abs_tol:
        LOGGER.warning("starfas: mvt_cdf reached %g instead of %g"
            " (d=%d, nu=%g)", err_estimate, settings.target_abs_tol, dim, nu)
        warnings.warn(ToleranceWarning(
            "QMC budget exhausted with error estimate %g > %g" % (
            err_estimate, settings.target_abs_tol), achieved=err_estimate))
    return value, err_estimate
