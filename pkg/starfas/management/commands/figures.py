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

import logging

from django.core.management.base import BaseCommand, CommandError

from ...figures import render_figures
from ...mixins import CONFIG_ERROR


class Command(BaseCommand):
    help = "Renders result CSV files as SVG plots."

    def add_arguments(self, parser):
        parser.add_argument('csv_paths', metavar='csv', nargs='+',
            help="result files written by analyze, simulate or sweep")
        parser.add_argument('--out', action='store', dest='out',
            default=None, help="directory where plots are written"
            " (defaults to the directory of each CSV file)")

    def handle(self, *args, **options):
        if options['verbosity'] > 1:
            logging.getLogger('starfas').setLevel(logging.DEBUG)
        for csv_path in options['csv_paths']:
            try:
                written = render_figures(csv_path, out_dir=options['out'])
            except OSError as err:
                raise CommandError(str(err), returncode=CONFIG_ERROR)
            except KeyError as err:
                raise CommandError("%s: missing column %s" % (csv_path, err),
                    returncode=CONFIG_ERROR)
            for path in written:
                self.stdout.write(path)
