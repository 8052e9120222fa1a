# -*- coding: utf-8 -*-
#
# Walk or Wait: console logging.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; version 2 of the License.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

import logging
import sys

from walkwait import settings
from walkwait.constants import LOG_DEBUG, LOG_ERROR, LOG_INFO, LOG_VERB, LOG_WARNING

LOG_PREFIX = '[walkwait] '

# log_level setting -> logging level of the handler
LEVELS = {
    LOG_ERROR: logging.ERROR,
    LOG_WARNING: logging.WARNING,
    LOG_INFO: logging.INFO,
    LOG_VERB: logging.INFO,
    LOG_DEBUG: logging.DEBUG,
}


class CliLogHandler(logging.StreamHandler):
    """
    Writes log records to stderr so stdout only carries results.
    """

    def __init__(self, stream=None):
        logging.StreamHandler.__init__(self, stream if stream is not None else sys.stderr)
        log_level = settings.getSettingAsOptionalInt('log_level', LOG_WARNING)
        self.debug = log_level == LOG_DEBUG
        if self.debug:
            formatter = logging.Formatter(LOG_PREFIX + '%(name)s %(levelname)s [%(filename)s:%(lineno)d]: %(message)s')
        else:
            formatter = logging.Formatter(LOG_PREFIX + '%(levelname)s: %(message)s')
        self.setFormatter(formatter)
        self.setLevel(LEVELS.get(log_level, logging.WARNING))


def config(stream=None):
    logger = logging.getLogger()
    for handler in list(logger.handlers):
        if isinstance(handler, CliLogHandler):
            logger.removeHandler(handler)
    logger.addHandler(CliLogHandler(stream))
    logger.setLevel(logging.DEBUG)

    logging.getLogger('concurrent.futures').setLevel(logging.WARNING)
