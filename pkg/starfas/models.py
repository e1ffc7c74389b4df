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
Models for a STAR-RIS deployment serving two fluid-antenna users.

These are plain immutable values (nothing is stored in a database). They turn
a scenario into path losses, circular moments of the phase errors, the Gamma
law of a single port gain and the correlation between ports.
"""
import logging, math
from dataclasses import dataclass, field, replace

import numpy as np
from django.core.exceptions import ValidationError
from scipy import stats

from . import settings, specfun
from .exceptions import GeometryError, ModelDomainError


LOGGER = logging.getLogger(__name__)

USER_REFLECT = 'r'
USER_TRANSMIT = 't'
USERS = (USER_REFLECT, USER_TRANSMIT)

PHASE_IDEAL = 'ideal'
PHASE_VON_MISES = 'von_mises'

KERNEL_SPHERICAL = 'spherical'
KERNEL_CYLINDRICAL = 'cylindrical'


def complement(user):
    """
    Returns the other user of the STAR-RIS pair.
    """
    if user == USER_REFLECT:
        return USER_TRANSMIT
    if user == USER_TRANSMIT:
        return USER_REFLECT
    raise ValueError("unknown user '%s'" % str(user))


def db_to_linear(value_db):
    return 10.0 ** (np.asarray(value_db, dtype=float) / 10.0)


@dataclass(frozen=True)
class FasGrid:
    """
    Ports of a fluid antenna laid out on an ``n1 x n2`` grid spanning
    ``w1 x w2`` wavelengths.
    """
    n1: int = 2
    n2: int = 2
    w1: float = math.sqrt(0.5)
    w2: float = math.sqrt(0.5)

    @classmethod
    def from_ports(cls, port_count, area):
        """
        Returns a square grid of *port_count* ports on *area* square
        wavelengths.
        """
        side = math.isqrt(int(port_count))
        if side < 1 or side * side != int(port_count):
            raise ValueError(
                "%s ports cannot be laid out on a square grid" % port_count)
        width = math.sqrt(float(area))
        return cls(n1=side, n2=side, w1=width, w2=width)

    @property
    def port_count(self):
        return self.n1 * self.n2

    @property
    def area(self):
        return self.w1 * self.w2

    def port_positions(self):
        """
        Returns the (port_count, 2) coordinates of the ports in wavelengths,
        enumerated along dimension 2 first.
        """
        def _axis(count, width):
            if count == 1:
                # A single port has no displacement along that dimension.
                return np.zeros(1)
            return np.arange(count) / (count - 1) * width
        first, second = np.meshgrid(
            _axis(self.n1, self.w1), _axis(self.n2, self.w2), indexing='ij')
        return np.column_stack([first.ravel(), second.ravel()])


@dataclass(frozen=True)
class PhaseError:
    """
    Residual phase misalignment after the RIS co-phases its elements.
    """
    kind: str = PHASE_VON_MISES
    kappa: float = 8.0

    @classmethod
    def ideal(cls):
        return cls(kind=PHASE_IDEAL, kappa=math.inf)

    @classmethod
    def von_mises(cls, kappa):
        return cls(kind=PHASE_VON_MISES, kappa=float(kappa))

    @property
    def is_ideal(self):
        return self.kind == PHASE_IDEAL

    def __str__(self):
        if self.is_ideal:
            return PHASE_IDEAL
        return "%s(kappa=%g)" % (self.kind, self.kappa)


@dataclass(frozen=True)
class UserThresholds:
    """
    SINR targets of the common and private streams, in dB.
    """
    gamma_th_c_db: float = 0.0
    gamma_th_p_db: float = 0.0

    @property
    def gamma_th_c(self):
        return float(db_to_linear(self.gamma_th_c_db))

    @property
    def gamma_th_p(self):
        return float(db_to_linear(self.gamma_th_p_db))


def _default_thresholds():
    return {
        USER_REFLECT: UserThresholds(gamma_th_c_db=0.0, gamma_th_p_db=0.0),
        USER_TRANSMIT: UserThresholds(gamma_th_c_db=0.0, gamma_th_p_db=-7.0),
    }


@dataclass(frozen=True)
class ScenarioConfig:
    """
    Full parameterization of a deployment. Defaults are the reference
    scenario: chi=2.1, alpha_c=0.6, nu=40, Rice factor 1, kappa=8,
    4 ports on 0.5 square wavelengths and users at (20, 20, 0) m.
    """
    #pylint:disable=too-many-instance-attributes
    scenario_id: str = 'default'
    bs_position: tuple = (0.0, 0.0, 0.0)
    ris_position: tuple = (40.0, 40.0, 0.0)
    user_r_position: tuple = (20.0, 20.0, 0.0)
    user_t_position: tuple = (20.0, 20.0, 0.0)
    chi: float = 2.1
    k_elements: int = 30
    beta_r: float = 0.8
    alpha_c: float = 0.6
    private_split_r: float = 0.75
    rice_k: float = 1.0
    phase_error: PhaseError = PhaseError()
    grid_r: FasGrid = FasGrid()
    grid_t: FasGrid = FasGrid()
    copula_nu: float = 40.0
    thresholds: dict = field(default_factory=_default_thresholds, hash=False)
    snr_grid_db: tuple = (20.0, 30.0, 40.0, 50.0, 60.0)
    kernel: str = KERNEL_SPHERICAL
    ac_sigma: str = 'paper'

    @property
    def beta_t(self):
        # Energy splitting conserves power: beta_r^2 + beta_t^2 = 1.
        return math.sqrt(max(0.0, 1.0 - self.beta_r ** 2))

    def beta(self, user):
        if user == USER_REFLECT:
            return self.beta_r
        complement(user)
        return self.beta_t

    def position(self, user):
        if user == USER_REFLECT:
            return self.user_r_position
        complement(user)
        return self.user_t_position

    def grid(self, user):
        if user == USER_REFLECT:
            return self.grid_r
        complement(user)
        return self.grid_t

    def user_thresholds(self, user):
        complement(user)
        return self.thresholds[user]

    def replace(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class CircularMoments:
    phi1: float
    phi2: float


@dataclass(frozen=True)
class GammaMarginal:
    """
    Gamma law of the channel gain at a single port, parameterized by its
    mean ``mean_gain`` and its shape ``m``.
    """
    mean_gain: float
    shape: float

    @property
    def scale(self):
        return self.mean_gain / self.shape

    @property
    def variance(self):
        return self.mean_gain ** 2 / self.shape

    def cdf(self, gain):
        gain = np.maximum(np.asarray(gain, dtype=float), 0.0)
        if self.mean_gain <= 0:
            return specfun._as_result(np.ones_like(gain))
        return specfun.regularized_lower_gamma(
            self.shape, self.shape * gain / self.mean_gain)

    def pdf(self, gain):
        return specfun._as_result(
            stats.gamma.pdf(gain, a=self.shape, scale=self.scale))

    def quantile(self, prob):
        return specfun._as_result(
            stats.gamma.ppf(prob, a=self.shape, scale=self.scale))


@dataclass(frozen=True, eq=False)
class CorrelationModel:
    """
    Correlation between the ports of a fluid antenna together with
    the degrees of freedom of the Student-t copula built on it.
    """
    matrix: np.ndarray
    nu: float = 40.0
    jitter: float = specfun.DEFAULT_JITTER

    @property
    def dimension(self):
        return self.matrix.shape[0]


def distances(cfg, user):
    """
    Returns the BS to STAR-RIS and the STAR-RIS to *user* distances in m.
    """
    ris = np.asarray(cfg.ris_position, dtype=float)
    d_sris = float(np.linalg.norm(np.asarray(cfg.bs_position, float) - ris))
    d_user = float(np.linalg.norm(np.asarray(cfg.position(user), float) - ris))
    if d_sris <= 0 or d_user <= 0:
        raise GeometryError(
            "BS and user '%s' must not be colocated with the STAR-RIS" % user)
    return d_sris, d_user


def path_loss(cfg, user):
    """
    Returns the cascaded path loss ``(d_SRIS d_u)^-chi``.
    """
    d_sris, d_user = distances(cfg, user)
    return (d_sris * d_user) ** (-cfg.chi)


def circular_moments(phase_error):
    """
    Returns the first two circular moments ``E[e^{jpTheta}]``
    of the phase error.
    """
    if phase_error.is_ideal:
        return CircularMoments(phi1=1.0, phi2=1.0)
    kappa = float(phase_error.kappa)
    if kappa < 0:
        raise ModelDomainError("kappa=%s must be nonnegative" % kappa)
    if kappa == 0:
        return CircularMoments(phi1=0.0, phi2=0.0)
    return CircularMoments(
        phi1=specfun.bessel_i_ratio(1, kappa),
        phi2=specfun.bessel_i_ratio(2, kappa))


def a_tilde(cfg):
    """
    Returns sqrt(a_b a_u), the geometric mean of the Rician mean amplitudes
    of both hops. Both hops share the same Rice factor.
    """
    a_bs = specfun.rician_mean_amplitude(cfg.rice_k)
    a_user = specfun.rician_mean_amplitude(cfg.rice_k)
    return math.sqrt(a_bs * a_user)


def gamma_marginal(moments, a_tilde_u, beta_u, k_elements):
    """
    Returns the Gamma law matching the first two moments of the port gain
    ``|H_u|^2`` for *k_elements* STAR-RIS elements.
    """
    if moments.phi1 <= 0:
        raise ModelDomainError("phi1=%s: the Gamma approximation requires"
            " a nonzero mean phase alignment" % moments.phi1)
    aligned = moments.phi1 ** 2 * a_tilde_u ** 4
    denominator = 1.0 + moments.phi2 - 2.0 * aligned
    if denominator <= 0:
        raise ModelDomainError("1 + phi2 - 2 phi1^2 a^4 = %s is not positive"
            % denominator)
    return GammaMarginal(
        mean_gain=beta_u ** 2 * aligned,
        shape=(k_elements / 2.0) * aligned / denominator)


def user_marginal(cfg, user):
    return gamma_marginal(circular_moments(cfg.phase_error), a_tilde(cfg),
        cfg.beta(user), cfg.k_elements)


def port_correlation(grid, kernel=KERNEL_SPHERICAL, nu=40.0,
                     jitter=specfun.DEFAULT_JITTER):
    """
    Returns the Jakes correlation between every pair of ports of *grid*.
    """
    positions = grid.port_positions()
    offsets = positions[:, np.newaxis, :] - positions[np.newaxis, :, :]
    argument = 2.0 * np.pi * np.sqrt((offsets ** 2).sum(axis=-1))
    if kernel == KERNEL_SPHERICAL:
        matrix = specfun.spherical_j0(argument)
    elif kernel == KERNEL_CYLINDRICAL:
        matrix = specfun.cylindrical_j0(argument)
    else:
        raise ValueError("unknown correlation kernel '%s'" % str(kernel))
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    matrix = (matrix + matrix.T) / 2.0
    np.fill_diagonal(matrix, 1.0)
    return CorrelationModel(matrix=matrix, nu=float(nu), jitter=jitter)


def user_correlation(cfg, user):
    return port_correlation(cfg.grid(user), kernel=cfg.kernel,
        nu=cfg.copula_nu, jitter=settings.CORRELATION_JITTER)


def rsma_power_split(cfg):
    """
    Returns ``(alpha_c, alpha_p_r, alpha_p_t)``, the fractions of transmit
    power given to the common stream and to each private stream.

    ``alpha_c=1`` is accepted as the limit where no private power is left.
    """
    if not 0 < cfg.alpha_c <= 1:
        raise ValidationError("alpha_c=%(value)s must be in (0, 1]",
            code='range', params={'value': cfg.alpha_c})
    if not 0 < cfg.private_split_r < 1:
        raise ValidationError("private_split_r=%(value)s must be in (0, 1)",
            code='range', params={'value': cfg.private_split_r})
    private = 1.0 - cfg.alpha_c
    alpha_p_r = cfg.private_split_r * private
    return cfg.alpha_c, alpha_p_r, private - alpha_p_r


def private_power(cfg, user):
    _, alpha_p_r, alpha_p_t = rsma_power_split(cfg)
    if user == USER_REFLECT:
        return alpha_p_r
    complement(user)
    return alpha_p_t
