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
Entry points to run the starfas commands outside of a Django project.
"""
import logging, os, sys

import django
from django.conf import settings as django_settings
from django.core.management import call_command, execute_from_command_line
from django.core.management.base import CommandError


LOGGER = logging.getLogger(__name__)

COMMANDS = ('analyze', 'simulate', 'sweep', 'figures', 'validate_config')

STANDALONE_LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'formatter': 'simple',
            'class': 'logging.StreamHandler',
        },
    },
    'loggers': {
        'starfas': {'handlers': ['console'], 'level': 'INFO'},
    },
}


def setup():
    """
    Configures a minimal Django environment unless a settings module
    has been specified through ``DJANGO_SETTINGS_MODULE``.
    """
    if not django_settings.configured \
       and not os.getenv('DJANGO_SETTINGS_MODULE'):
        django_settings.configure(INSTALLED_APPS=['starfas'],
            LOGGING=STANDALONE_LOGGING)
    django.setup()


def run(command, config_path, **flags):
    """
    Runs *command* on *config_path* (a CSV file for ``figures``)
    and returns the process exit status.
    """
    if command not in COMMANDS:
        LOGGER.error("starfas: unknown command '%s'", command)
        return 2
    flags = {key: val for key, val in flags.items() if val is not None}
    try:
        if command == 'figures':
            call_command(command, config_path, **flags)
        else:
            call_command(command, config=config_path, **flags)
    except CommandError as err:
        LOGGER.error("starfas: %s", err)
        return err.returncode
    except Exception as err: #pylint:disable=broad-except
        LOGGER.exception("starfas: %s failed: %s", command, err)
        return 1
    return 0


def main(argv=None):
    setup()
    if argv is None:
        argv = sys.argv[1:]
    execute_from_command_line(['starfas'] + list(argv))
