# -*- coding: utf-8 -*-
__version__ = '1.0.0'
__title__ = 'walkwait'
__author__ = 'walkwait developers'
__description__ = 'Expected travel times for the walk-or-wait bus problem, with a Monte Carlo oracle.'
__license__ = 'GPL-2.0'
