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
Convenience module for access of starfas application settings, which enforces
default settings when the main settings module does not contain
the appropriate settings.
"""
import os

from django.conf import settings

_SETTINGS = {
    'AC_SIGMA': 'paper',
    'CORRELATION_JITTER': 1e-10,
    'CORRELATION_KERNEL': 'spherical',
    'MC_CHUNK_SIZE': 8192,
    'MC_RELIABILITY_FLOOR': 1e-4,
    'MC_SAMPLES': 100000,
    'OUTPUT_DIR': 'results',
    'QMC_RANDOMIZATIONS': 12,
    'QMC_SAMPLE_BUDGET': 2 ** 13,
    'QMC_TARGET_ABS_TOL': 1e-4,
    'SCENARIOS_DIRS': [os.path.join(os.path.dirname(__file__), 'scenarios')],
    'SEED': 0,
    'THREADS': 0,
}
_SETTINGS.update(getattr(settings, 'STARFAS', {}))

AC_SIGMA_CHOICES = ('paper', 'std')
KERNEL_CHOICES = ('spherical', 'cylindrical')

AC_SIGMA = _SETTINGS.get('AC_SIGMA')
CORRELATION_JITTER = _SETTINGS.get('CORRELATION_JITTER')
CORRELATION_KERNEL = _SETTINGS.get('CORRELATION_KERNEL')
MC_CHUNK_SIZE = _SETTINGS.get('MC_CHUNK_SIZE')
MC_RELIABILITY_FLOOR = _SETTINGS.get('MC_RELIABILITY_FLOOR')
MC_SAMPLES = _SETTINGS.get('MC_SAMPLES')
OUTPUT_DIR = _SETTINGS.get('OUTPUT_DIR')
QMC_RANDOMIZATIONS = _SETTINGS.get('QMC_RANDOMIZATIONS')
QMC_SAMPLE_BUDGET = _SETTINGS.get('QMC_SAMPLE_BUDGET')
QMC_TARGET_ABS_TOL = _SETTINGS.get('QMC_TARGET_ABS_TOL')
SCENARIOS_DIRS = _SETTINGS.get('SCENARIOS_DIRS')
SEED = _SETTINGS.get('SEED')
THREADS = _SETTINGS.get('THREADS')
