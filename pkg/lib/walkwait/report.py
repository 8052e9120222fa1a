# -*- coding: utf-8 -*-
#
# Walk or Wait: reporters
#

# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; version 2 of the License.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# --- Python standard library ---
from __future__ import annotations

import abc
import logging
import typing

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait.utils import io

logger = logging.getLogger(__name__)


# -------------------------------------------------------------------------------------------------
# Reporters are chained: every message written to a reporter is passed on to its decorator.
# The CLI writes results to a ConsoleReporter, optionally decorated with a FileReporter
# (--report PATH) so the same lines end up in both places.
# -------------------------------------------------------------------------------------------------
class Reporter(abc.ABC):

    def __init__(self, decoratorReporter: Reporter = None):
        self.decoratorReporter = decoratorReporter

    def open(self):
        if self.decoratorReporter:
            self.decoratorReporter.open()

    def close(self):
        if self.decoratorReporter:
            self.decoratorReporter.close()

    @abc.abstractmethod
    def _write_message(self, message: str):
        pass

    def write(self, message: str):
        self._write_message(message)
        if self.decoratorReporter:
            self.decoratorReporter.write(message)

    def write_lines(self, lines: typing.Iterable[str]):
        for line in lines:
            self.write(line)


class ConsoleReporter(Reporter):
    def __init__(self, stream: typing.TextIO, decoratorReporter: Reporter = None):
        self.stream = stream
        super(ConsoleReporter, self).__init__(decoratorReporter)

    def _write_message(self, message: str):
        self.stream.write(message)
        self.stream.write('\n')


class FileReporter(Reporter):
    def __init__(self, report_file: io.FileName, decoratorReporter: Reporter = None):
        self.report_file = report_file
        super(FileReporter, self).__init__(decoratorReporter)

    def open(self):
        logger.info('Report file path "{0}"'.format(self.report_file.getPath()))
        try:
            self.report_file.getDirAsFileName().makedirs()
            self.report_file.open('w')
        except OSError:
            logger.exception('(OSError) Exception in FileReporter::open()')
            raise constants.IoError('Cannot write report file {0}'.format(self.report_file.getPath()))
        super(FileReporter, self).open()

    def close(self):
        self.report_file.close()
        super(FileReporter, self).close()

    def _write_message(self, message: str):
        self.report_file.write(message)
        self.report_file.write('\n')
