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
Exceptions and warning categories raised by the numerical engine.

Configuration problems are reported as ``django.core.exceptions``
``ValidationError`` instead (see ``starfas.forms``).
"""


class DomainError(ValueError):
    """
    An argument lies outside the domain of a function.
    """


class GeometryError(DomainError):
    """
    Two positions of the deployment coincide.
    """


class ModelDomainError(DomainError):
    """
    The Gamma approximation of the cascaded channel does not apply.
    """


class MatrixError(DomainError):
    """
    A correlation matrix is not positive semi-definite.
    """


class ToleranceWarning(RuntimeWarning):
    """
    The QMC budget was exhausted before reaching the requested tolerance.
    """

    def __init__(self, message, achieved=None):
        super(ToleranceWarning, self).__init__(message)
        self.achieved = achieved


class NoiseWarning(RuntimeWarning):
    """
    A finite difference step is too small compared to the QMC noise.
    """


class LowSnrWarning(RuntimeWarning):
    """
    The high-SNR expansion was evaluated outside its range of validity.
    """
