# -*- coding: utf-8 -*-

# Walk or Wait filesystem helpers

# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; version 2 of the License.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.

# --- Module documentation ---
# 1. io.py must not depend on any other walkwait module to avoid circular dependencies, with the
#    exception of constants.py
#
# 2. Functions starting with _ are internal module functions not to be called externally.
#

# --- Python standard library ---
from __future__ import annotations

import errno
import json
import logging
import os
import typing

from walkwait import constants

logger = logging.getLogger(__name__)
FILENAME_VERBOSE = False


# -------------------------------------------------------------------------------------------------
# --- Filesystem class ---
#
# 1. All paths on all platforms use the slash '/' to separate directories.
#
# 2. Directories always end in a '/' character.
#
# --- Function reference ---
# FileName.getPath()         Full path                                     /home/user/s1.json
# FileName.getDir()          Directory name of file. Ends in '/'           /home/user/
#
# -------------------------------------------------------------------------------------------------
class FileName(object):
    # ---------------------------------------------------------------------------------------------
    # Constructor
    # path_str is an Unicode string.
    # ---------------------------------------------------------------------------------------------
    def __init__(self, path_str: str, isdir: bool = False):
        if path_str is None:
            path_str = ''
        self.path_str = path_str.replace('\\', '/')
        self.is_a_dir = isdir
        self.fileHandle = None

        # --- If a directory, ensure path ends with '/' ---
        if self.is_a_dir and not self.path_str[-1:] == '/':
            self.path_str = self.path_str + '/'

    # ---------------------------------------------------------------------------------------------
    # Path manipulation and file information
    # ---------------------------------------------------------------------------------------------
    def getPath(self) -> str:
        return self.path_str

    def getDir(self) -> str:
        path_dir = os.path.dirname(self.path_str)
        return os.path.join(path_dir, '')

    def getDirAsFileName(self) -> FileName:
        return FileName(self.getDir(), isdir=True)

    def __str__(self):
        return self.path_str

    # ---------------------------------------------------------------------------------------------
    # Filesystem functions
    # ---------------------------------------------------------------------------------------------
    def exists(self):
        return os.path.exists(self.path_str)

    def makedirs(self):
        if self.path_str in ('', './', '/'):
            return
        if not os.path.exists(self.path_str):
            os.makedirs(self.path_str)

    # ---------------------------------------------------------------------------------------------
    # File low-level IO functions
    # ---------------------------------------------------------------------------------------------
    def open(self, flags, encoding='utf-8'):
        if FILENAME_VERBOSE:
            logger.debug('FileName::open() path_str "{0}"'.format(self.path_str))
            logger.debug('FileName::open() flags    "{0}"'.format(flags))

        if flags and 'b' in flags:
            self.fileHandle = open(self.path_str, flags)
        else:
            # Fixed '\n' line endings on every platform.
            self.fileHandle = open(self.path_str, flags, encoding=encoding, newline='')

        return self.fileHandle

    def close(self):
        if self.fileHandle is None:
            raise OSError('file not opened')
        self.fileHandle.close()
        self.fileHandle = None

    def read(self):
        if self.fileHandle is None:
            raise OSError('file not opened')
        return self.fileHandle.read()

    def write(self, data: str):
        if self.fileHandle is None:
            raise OSError('file not opened')
        self.fileHandle.write(data)

    # ---------------------------------------------------------------------------------------------
    # File high-level IO functions
    # ---------------------------------------------------------------------------------------------
    #
    # Loads a file into a Unicode string.
    # By default all files are assumed to be encoded in UTF-8.
    #
    def loadFileToStr(self, encoding='utf-8') -> str:
        if FILENAME_VERBOSE:
            logger.debug('FileName::loadFileToStr() Loading path_str "{0}"'.format(self.path_str))

        try:
            self.open('r', encoding)
            contents = self.read()
            self.close()
        except OSError as ex:
            logger.exception('(OSError) Exception in FileName::loadFileToStr()')
            if ex.errno == errno.ENOENT:
                logger.error('(OSError) No such file or directory.')
            logger.error('(OSError) Cannot read {0} file'.format(self.path_str))
            raise constants.IoError('Cannot read {0} file'.format(self.path_str))

        return contents

    #
    # data_str is a Unicode string. Encode it in UTF-8 for file writing.
    #
    def saveStrToFile(self, data_str: str, encoding='utf-8'):
        if FILENAME_VERBOSE:
            logger.debug('FileName::saveStrToFile() Saving path_str "{0}"'.format(self.path_str))

        try:
            self.open('w', encoding)
            self.write(data_str)
            self.close()
        except OSError as ex:
            logger.exception('(OSError) Exception in FileName::saveStrToFile()')
            if ex.errno == errno.ENOENT:
                logger.error('(OSError) No such file or directory.')
            logger.error('(OSError) Cannot write {0} file'.format(self.path_str))
            raise constants.IoError('Cannot write {0} file'.format(self.path_str))

    # Opens JSON file and reads it
    def readJson(self) -> typing.Any:
        contents = self.loadFileToStr()
        try:
            return json.loads(contents)
        except ValueError as ex:
            logger.error('(ValueError) Cannot parse JSON in {0}: {1}'.format(self.path_str, ex))
            raise constants.ParseError('Malformed JSON in {0}: {1}'.format(self.path_str, ex))
