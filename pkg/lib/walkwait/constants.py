# -*- coding: utf-8 -*-
#
# Walk or Wait: constants.
#

# This file has constants that define the library behaviour.
# This module has no external dependencies.
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

import typing


# -------------------------------------------------------------------------------------------------
# A universal error reporting exception
# All expected failures (bad input, violated assumptions, numerical breakdowns) are raised as
# WalkWaitError subclasses. Unexpected exceptions must not be wrapped so the traceback is printed.
# -------------------------------------------------------------------------------------------------
# Top-level CLI code looks like this
# try:
#     cmd_eval(config, variant, reporter)
# except WalkWaitError as E:
#     logger.error('{0}'.format(E))
#     return E.exit_code
#
# Low-level code looks like this
# def saveStrToFile(self, data_str):
#     try:
#         do_something_that_may_fail()
#     except OSError:
#         logger.error('(OSError) Cannot write {0} file'.format(self.path_tr))
#         raise IoError('Error writing file (OSError)')
#
class WalkWaitError(Exception):
    exit_code = 1

    def __init__(self, err_str: str):
        self.err_str = err_str
        super(WalkWaitError, self).__init__(err_str)

    def __str__(self):
        return self.err_str


class ValidationError(WalkWaitError):
    """Carries the name of every violated constraint, in the order they were checked."""

    def __init__(self, violations: typing.List[str]):
        self.violations = list(violations)
        super(ValidationError, self).__init__('Validation failed: {}'.format(', '.join(self.violations)))


class ParseError(WalkWaitError):
    pass


class IoError(WalkWaitError):
    exit_code = 4


class DistributionError(WalkWaitError):
    pass


class EmptySupport(DistributionError):
    pass


class NonPositiveRate(DistributionError):
    pass


class BadDistributionSpec(DistributionError):
    pass


class NumericsError(WalkWaitError):
    pass


class MaxDepthExceeded(NumericsError):
    pass


class InvalidBracket(NumericsError):
    pass


class NoSignChange(NumericsError):

    def __init__(self, lo: float, hi: float, f_lo: float, f_hi: float):
        self.lo = lo
        self.hi = hi
        self.f_lo = f_lo
        self.f_hi = f_hi
        super(NoSignChange, self).__init__(
            'No sign change on [{}, {}]: f(lo)={}, f(hi)={}'.format(lo, hi, f_lo, f_hi))


class AssumptionViolated(WalkWaitError):
    exit_code = 2

    def __init__(self, err_str: str, rationale: str = None):
        self.rationale = rationale
        if rationale:
            err_str = '{} ({})'.format(err_str, rationale)
        super(AssumptionViolated, self).__init__(err_str)


class VariantRequiresUniform(WalkWaitError):
    pass


# -------------------------------------------------------------------------------------------------
# Constraint names reported by ValidationError
# -------------------------------------------------------------------------------------------------
NON_POSITIVE_DISTANCE = 'NonPositiveDistance'
STOP2_BEYOND_DESTINATION = 'Stop2BeyondDestination'
SPEED_ORDER_VIOLATED = 'SpeedOrderViolated'
NEGATIVE_WAIT = 'NegativeWait'
HEADWAY_CONTRADICTS_DISTRIBUTION = 'HeadwayContradictsDistribution'

# --- Log level constants -------------------------------------------------------------------------
LOG_ERROR = 0
LOG_WARNING = 1
LOG_INFO = 2
LOG_VERB = 3
LOG_DEBUG = 4

# --- Exit codes ---
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ASSUMPTION = 2
EXIT_ORACLE_DISAGREEMENT = 3
EXIT_IO = 4

# -------------------------------------------------------------------------------------------------
# Numerics
# -------------------------------------------------------------------------------------------------
QUAD_TOLERANCE = 1e-10
QUAD_MAX_DEPTH = 50
ROOT_TOLERANCE = 1e-9
ROOT_MAX_ITERATIONS = 200
SIGN_SCAN_POINTS = 1000

# Unbounded supports are integrated up to the 1 - TRUNCATION_MASS quantile.
TRUNCATION_MASS = 1e-12

# Relative slack when comparing strategy totals for ties.
TIE_TOLERANCE = 1e-12

# Fraction of the bracket used to step off the trivial root f(tw=0) = 0.
DEGENERATE_ROOT_OFFSET = 1e-6

# -------------------------------------------------------------------------------------------------
# Monte Carlo
# -------------------------------------------------------------------------------------------------
DEFAULT_SEED = 42
DEFAULT_TRIALS = 1000000
DEFAULT_CHUNK_SIZE = 100000
DEFAULT_WORKERS = 1
ORACLE_Z_LIMIT = 4.0

# Trial events
EVENT_BOARDED = 0
EVENT_MISSED_EARLY = 1
EVENT_NO_BUS = 2

EVENT_NAMES = {
    EVENT_BOARDED: 'Boarded',
    EVENT_MISSED_EARLY: 'MissedEarly',
    EVENT_NO_BUS: 'NoBusInWindow'
}

# --- Residual term assumption gate ---
RESIDUAL_RATIONALE = ('requires d2/vw < t_b: otherwise the walker would always choose to wait for '
                      'the bus, which necessarily passes them before they reach the destination')

# -------------------------------------------------------------------------------------------------
# CLI / output
# -------------------------------------------------------------------------------------------------
ENV_PREFIX = 'WALKWAIT_'
NUMBER_FORMAT = '.12g'

SWEEP_PARAMETERS = ['tw', 'd2', 'vb', 'vw', 'tb']
SWEEP_CSV_HEADER = ['param', 'value', 'variant', 'total', 'p_board', 'p_missed_early',
                    'p_no_bus', 'recommended']
BREAKDOWN_CSV_HEADER = ['variant', 'pre_walk', 'board_term', 'fallback_term', 'total',
                        'p_board', 'p_missed_early', 'p_no_bus']
SIMSTATS_CSV_HEADER = ['strategy', 'trials', 'mean', 'stderr', 'freq_board',
                       'freq_missed_early', 'freq_no_bus']

CONFIG_KEYS = ['d', 'd2', 'vw', 'vb', 'tw', 'tb', 'dist', 'trials', 'seed']
SCENARIO_KEYS = ['d', 'd2', 'vw', 'vb', 'tw']
