# -*- coding: utf-8 -*-
#
# Walk or Wait: numerics
#
# Adaptive Simpson quadrature with caller supplied breakpoints and a bisection root finder.
# Nothing in here knows about buses.
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

import dataclasses
import logging
import math
import typing

# --- Third party ---
import numpy as np

# --- Walk or Wait modules ---
from walkwait import constants

logger = logging.getLogger(__name__)

RealFunction = typing.Callable[[float], float]


@dataclasses.dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int


class _CountingFunction(object):
    def __init__(self, f: RealFunction):
        self.f = f
        self.evaluations = 0

    def __call__(self, x: float) -> float:
        self.evaluations += 1
        return float(self.f(x))


# -------------------------------------------------------------------------------------------------
# Quadrature
# -------------------------------------------------------------------------------------------------
def integrate(f: RealFunction, a: float, b: float, tol: float = constants.QUAD_TOLERANCE,
              breakpoints: typing.Iterable[float] = (),
              max_depth: int = constants.QUAD_MAX_DEPTH) -> QuadResult:
    """
    Integrates f over [a, b] with adaptive Simpson's rule plus Richardson extrapolation.

    The interval is split at every breakpoint inside (a, b) and each piece is integrated on
    its own with a share of tol proportional to its width. Piece ends are pulled inwards by
    a few ulps so a density that jumps exactly at a breakpoint is only evaluated on one side
    of the jump.

    Raises MaxDepthExceeded when a piece does not reach its tolerance within max_depth
    bisections.
    """
    if a > b:
        raise constants.InvalidBracket('integrate() needs a <= b, got [{}, {}]'.format(a, b))
    if tol <= 0:
        raise constants.NumericsError('integrate() needs tol > 0, got {}'.format(tol))
    if a == b:
        return QuadResult(0.0, 0.0, 0)

    counted = _CountingFunction(f)
    edges = [a] + sorted(set(p for p in breakpoints if a < p < b)) + [b]
    total_width = b - a
    value = 0.0
    error = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        width = hi - lo
        inset = _piece_inset(lo, hi)
        piece_tol = tol * width / total_width
        piece_value, piece_error = _integrate_piece(counted, lo + inset, hi - inset, piece_tol, max_depth)
        value += piece_value
        error += piece_error

    return QuadResult(value, error, counted.evaluations)


def _piece_inset(lo: float, hi: float) -> float:
    width = hi - lo
    ulp = math.ulp(max(abs(lo), abs(hi)))
    return min(max(width * 1e-13, 64 * ulp), width / 8)


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 3.0 * (fa + 4.0 * fm + fb)


def _integrate_piece(f: RealFunction, a: float, b: float, tol: float,
                     max_depth: int) -> typing.Tuple[float, float]:
    fa = f(a)
    fb = f(b)
    m = (a + b) / 2.0
    fm = f(m)
    s_whole = _simpson(fa, fm, fb, (b - a) / 2.0)
    return _adaptive(f, a, b, fa, fm, fb, s_whole, tol, 0, max_depth)


def _adaptive(f: RealFunction, a: float, b: float, fa: float, fm: float, fb: float,
              s_whole: float, tol: float, depth: int, max_depth: int) -> typing.Tuple[float, float]:
    m = (a + b) / 2.0
    h = (b - a) / 2.0
    flm = f((a + m) / 2.0)
    frm = f((m + b) / 2.0)

    s_left = _simpson(fa, flm, fm, h / 2.0)
    s_right = _simpson(fm, frm, fb, h / 2.0)
    s_combined = s_left + s_right
    error_estimate = (s_combined - s_whole) / 15.0

    if abs(error_estimate) <= tol:
        return s_combined + error_estimate, abs(error_estimate)
    if depth >= max_depth:
        logger.error('integrate() No convergence on [{}, {}] after {} bisections'.format(a, b, depth))
        raise constants.MaxDepthExceeded(
            'Tolerance {} not reached on [{}, {}] within {} bisections'.format(tol, a, b, max_depth))

    left_value, left_error = _adaptive(f, a, m, fa, flm, fm, s_left, tol / 2.0, depth + 1, max_depth)
    right_value, right_error = _adaptive(f, m, b, fm, frm, fb, s_right, tol / 2.0, depth + 1, max_depth)
    return left_value + right_value, left_error + right_error


# -------------------------------------------------------------------------------------------------
# Root finding
# -------------------------------------------------------------------------------------------------
def find_root(f: RealFunction, lo: float, hi: float, tol: float = constants.ROOT_TOLERANCE,
              max_iterations: int = constants.ROOT_MAX_ITERATIONS) -> float:
    """
    Bisection on [lo, hi]. Returns a point whose bracket is narrower than tol, or an
    endpoint/midpoint where f is exactly zero.
    """
    if not lo < hi:
        raise constants.InvalidBracket('Invalid bracket [{}, {}]: lo must be smaller than hi'.format(lo, hi))
    if tol <= 0:
        raise constants.NumericsError('find_root() needs tol > 0, got {}'.format(tol))

    f_lo = float(f(lo))
    f_hi = float(f(hi))
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise constants.NoSignChange(lo, hi, f_lo, f_hi)

    iteration = 0
    while hi - lo > tol and iteration < max_iterations:
        mid = lo + (hi - lo) / 2.0
        if mid <= lo or mid >= hi:
            break
        f_mid = float(f(mid))
        if f_mid == 0.0:
            return mid
        if math.copysign(1.0, f_mid) == math.copysign(1.0, f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        iteration += 1

    logger.debug('find_root() Bracket [{}, {}] after {} iterations'.format(lo, hi, iteration))
    return lo + (hi - lo) / 2.0


def scan_brackets(f: RealFunction, lo: float, hi: float,
                  points: int = constants.SIGN_SCAN_POINTS) -> typing.List[typing.Tuple[float, float]]:
    """
    Sign scan of f over a uniform grid of `points` points on [lo, hi].
    Returns the grid cells (a, b) holding a root in (lo, hi]: cells where f changes sign,
    or whose right end is an exact zero.
    """
    if not lo < hi:
        raise constants.InvalidBracket('Invalid bracket [{}, {}]: lo must be smaller than hi'.format(lo, hi))
    if points < 2:
        raise constants.NumericsError('scan_brackets() needs at least two points')

    grid = np.linspace(lo, hi, points)
    values = [float(f(float(x))) for x in grid]
    brackets = []
    for i in range(points - 1):
        f_a = values[i]
        f_b = values[i + 1]
        if f_b == 0.0 or (f_a != 0.0 and (f_a < 0.0) != (f_b < 0.0)):
            brackets.append((float(grid[i]), float(grid[i + 1])))
    return brackets
