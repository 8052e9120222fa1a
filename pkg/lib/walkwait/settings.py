# -*- coding: utf-8 -*-
#
# Walk or Wait: settings.
#
# Settings are read from WALKWAIT_<KEY> environment variables. setSetting() stores an
# in-process override which takes precedence over the environment.
#
import os

from walkwait.constants import ENV_PREFIX
from walkwait.utils import io

__overrides__ = {}


def getSetting(setting):
    if setting in __overrides__:
        return __overrides__[setting].strip()
    return os.environ.get(ENV_PREFIX + setting.upper(), '').strip()


def setSetting(setting, value):
    __overrides__[setting] = str(value)


def clearSettings():
    __overrides__.clear()


def getSettingAsOptionalInt(setting, fallback: int = None):
    str_value = getSetting(setting)
    if len(str_value) == 0:
        return fallback
    try:
        return int(str_value)
    except ValueError:
        return fallback


def getSettingAsFilePath(setting, isdir=False, fallback: io.FileName = None) -> io.FileName:
    str_value = getSetting(setting)
    if str_value is None or len(str_value) == 0:
        if fallback:
            return fallback
        return None
    return io.FileName(str_value, isdir)
