# -*- coding: utf-8 -*-
#
# Walk or Wait: expected travel time engine
#
# Every expected-time expression for the walk or wait problem: the two original formulas
# exactly as printed, the distance correction on its own, the fully corrected walk then wait
# total, the two baseline strategies, the residual waiting term, break-even solving and
# strategy comparison.
#
# Notation shared by all functions:
#   s = d2/vw - d2/vb     lead of the walker over the bus at stop 2
#   A = (d - d2)/vb       ride from stop 2 to the destination
#   W = (d - d2)/vw       walk from stop 2 to the destination
#   t_b                   width of uniform(0, t_b), the headway of the original formulas
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
import enum
import logging
import typing

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait import distributions
from walkwait import numerics
from walkwait.distributions import ArrivalDistribution
from walkwait.model import EvalBreakdown, Scenario, StrategyKind, derive

logger = logging.getLogger(__name__)

FLAG_TW_BEYOND_HEADWAY = 'tw-beyond-headway'

SOLVE_FOR_TW = 'tw'
SOLVE_FOR_D2 = 'd2'
SOLVE_FOR_PARAMETERS = [SOLVE_FOR_TW, SOLVE_FOR_D2]


class FormulaVariant(enum.Enum):
    ORIGINAL_EXPR = 'original-expr'
    ORIGINAL_EQ4 = 'original-eq4'
    DISTANCE_CORRECTED = 'distance-corrected'
    FULLY_CORRECTED = 'fully-corrected'

    @classmethod
    def from_name(cls, name: str) -> FormulaVariant:
        for variant in cls:
            if variant.value == name:
                return variant
        raise constants.ParseError('Unknown formula variant "{}". Expected one of: {}'.format(
            name, ', '.join(v.value for v in cls)))


@dataclasses.dataclass(frozen=True)
class DecisionReport:
    walk_then_wait: EvalBreakdown
    wait_at_stop1: EvalBreakdown
    walk_all: EvalBreakdown
    recommended: StrategyKind
    margin: float

    def breakdowns(self) -> typing.List[EvalBreakdown]:
        return [self.walk_then_wait, self.wait_at_stop1, self.walk_all]

    def breakdown_for(self, strategy: StrategyKind) -> EvalBreakdown:
        for breakdown in self.breakdowns():
            if breakdown.strategy == strategy:
                return breakdown
        raise KeyError(strategy)


# -------------------------------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------------------------------
def _require_headway(dist: ArrivalDistribution, variant: FormulaVariant) -> float:
    t_b = distributions.headway(dist)
    if t_b is None:
        raise constants.VariantRequiresUniform(
            'Variant {} is only defined for uniform(0, t_b) arrivals, got {}'.format(variant.value, dist))
    return t_b


def _expected_over_window(dist: ArrivalDistribution, shift_s: float, tw: float,
                          offset: float) -> float:
    """
    Quadrature of pdf(t + shift_s) * (offset + t) over the waiting window [0, tw].
    The window is cut where the density ends, at the 1 - 1e-12 quantile for unbounded laws.
    """
    hi = min(tw, max(0.0, dist.upper_bound() - shift_s))
    if hi == 0.0:
        return 0.0
    result = numerics.integrate(
        lambda t: dist.pdf(t + shift_s) * (offset + t),
        0.0, hi,
        constants.QUAD_TOLERANCE,
        distributions.shifted_breakpoints(dist, shift_s, 0.0, hi))
    return result.value


# -------------------------------------------------------------------------------------------------
# Original formulas, implemented as printed
# -------------------------------------------------------------------------------------------------
def original_total_expression(s: Scenario, dist: ArrivalDistribution,
                              general_p: ArrivalDistribution = None) -> EvalBreakdown:
    """
    d2/vw + integral_0^tw (1/t_b) A dt + (1 - integral_0^tw p(t) dt)(d/vw + tw)

    The first integrand has no '+ t' and the fallback walks the whole distance d again.
    When tw > t_b the first integral still runs over [0, tw] and the result is flagged.
    """
    t_b = _require_headway(dist, FormulaVariant.ORIGINAL_EXPR)
    p = general_p if general_p is not None else dist
    k = derive(s)

    board_term = numerics.integrate(lambda t: k.ride_rest_A / t_b, 0.0, s.tw).value
    p_board = p.cdf(s.tw)
    fallback_term = (1.0 - p_board) * (k.walk_all + s.tw)
    flags = [FLAG_TW_BEYOND_HEADWAY] if s.tw > t_b else []

    return EvalBreakdown.build(
        StrategyKind.WALK_THEN_WAIT, FormulaVariant.ORIGINAL_EXPR.value,
        pre_walk=s.d2 / s.vw,
        board_term=board_term,
        fallback_term=fallback_term,
        p_board=p_board,
        p_missed_early=0.0,
        flags=flags)


def original_eq4_lhs(s: Scenario, dist: ArrivalDistribution,
                     general_p: ArrivalDistribution = None) -> EvalBreakdown:
    """
    Left hand side of the original indifference equation:
    integral_0^tw (1/t_b)(A + t) dt + (1 - integral_0^tw p(t) dt)(d/vw + tw)
    compared against W (returned as rhs). The walk to stop 2 is not part of it, so
    pre_walk is 0 and total is the left hand side.
    """
    t_b = _require_headway(dist, FormulaVariant.ORIGINAL_EQ4)
    p = general_p if general_p is not None else dist
    k = derive(s)

    board_term = numerics.integrate(lambda t: (k.ride_rest_A + t) / t_b, 0.0, s.tw).value
    p_board = p.cdf(s.tw)
    fallback_term = (1.0 - p_board) * (k.walk_all + s.tw)
    flags = [FLAG_TW_BEYOND_HEADWAY] if s.tw > t_b else []

    return EvalBreakdown.build(
        StrategyKind.WALK_THEN_WAIT, FormulaVariant.ORIGINAL_EQ4.value,
        pre_walk=0.0,
        board_term=board_term,
        fallback_term=fallback_term,
        p_board=p_board,
        p_missed_early=0.0,
        rhs=k.walk_rest_W,
        flags=flags)


# -------------------------------------------------------------------------------------------------
# Distance correction alone
# -------------------------------------------------------------------------------------------------
def distance_corrected_term2(s: Scenario, dist: ArrivalDistribution) -> float:
    k = derive(s)
    return (1.0 - dist.cdf(s.tw)) * (k.walk_rest_W + s.tw)


def distance_corrected_total(s: Scenario, dist: ArrivalDistribution) -> EvalBreakdown:
    """The distance fix applied to the whole journey, still with the unshifted density."""
    k = derive(s)
    return EvalBreakdown.build(
        StrategyKind.WALK_THEN_WAIT, FormulaVariant.DISTANCE_CORRECTED.value,
        pre_walk=s.d2 / s.vw,
        board_term=_expected_over_window(dist, 0.0, s.tw, k.ride_rest_A),
        fallback_term=distance_corrected_term2(s, dist),
        p_board=dist.cdf(s.tw),
        p_missed_early=0.0)


# -------------------------------------------------------------------------------------------------
# Fully corrected walk then wait
# -------------------------------------------------------------------------------------------------
def t_corrected(s: Scenario, t: float) -> float:
    return t + derive(s).shift_s


def corrected_boarding_integral(s: Scenario, dist: ArrivalDistribution) -> typing.Tuple[float, float]:
    """
    Returns (value, p_board): the boarding branch contribution
    integral_0^tw pdf(t + s)(A + t) dt and its probability cdf(s + tw) - cdf(s).
    """
    k = derive(s)
    value = _expected_over_window(dist, k.shift_s, s.tw, k.ride_rest_A)
    p_board = dist.cdf(k.shift_s + s.tw) - dist.cdf(k.shift_s)
    return value, p_board


def corrected_post_stop2(s: Scenario, dist: ArrivalDistribution) -> EvalBreakdown:
    return _corrected(s, dist, include_pre_walk=False)


def corrected_total(s: Scenario, dist: ArrivalDistribution) -> EvalBreakdown:
    return _corrected(s, dist, include_pre_walk=True)


def _corrected(s: Scenario, dist: ArrivalDistribution, include_pre_walk: bool) -> EvalBreakdown:
    k = derive(s)
    board_term, p_board = corrected_boarding_integral(s, dist)
    # Missed buses and no bus in the window share the same fallback.
    fallback_term = (1.0 - p_board) * (k.walk_rest_W + s.tw)

    return EvalBreakdown.build(
        StrategyKind.WALK_THEN_WAIT, FormulaVariant.FULLY_CORRECTED.value,
        pre_walk=s.d2 / s.vw if include_pre_walk else 0.0,
        board_term=board_term,
        fallback_term=fallback_term,
        p_board=p_board,
        p_missed_early=distributions.missed_mass(dist, k.shift_s),
        p_no_bus=1.0 - dist.cdf(k.shift_s + s.tw),
        rhs=None if include_pre_walk else k.walk_rest_W)


# -------------------------------------------------------------------------------------------------
# Baseline strategies
# -------------------------------------------------------------------------------------------------
def wait_at_stop1(s: Scenario, dist: ArrivalDistribution) -> EvalBreakdown:
    k = derive(s)
    p_board = dist.cdf(s.tw)
    return EvalBreakdown.build(
        StrategyKind.WAIT_AT_STOP1, StrategyKind.WAIT_AT_STOP1.value,
        pre_walk=0.0,
        board_term=_expected_over_window(dist, 0.0, s.tw, s.d / s.vb),
        fallback_term=(1.0 - p_board) * (k.walk_all + s.tw),
        p_board=p_board,
        p_missed_early=0.0)


def walk_all(s: Scenario) -> EvalBreakdown:
    return EvalBreakdown.build(
        StrategyKind.WALK_ALL, StrategyKind.WALK_ALL.value,
        pre_walk=derive(s).walk_all,
        board_term=0.0,
        fallback_term=0.0,
        p_board=0.0,
        p_missed_early=0.0)


def evaluate(s: Scenario, dist: ArrivalDistribution, variant: FormulaVariant) -> EvalBreakdown:
    logger.debug('evaluate() Starting {} for {} with {}'.format(variant.value, s, dist))
    if variant == FormulaVariant.ORIGINAL_EXPR:
        return original_total_expression(s, dist)
    if variant == FormulaVariant.ORIGINAL_EQ4:
        return original_eq4_lhs(s, dist)
    if variant == FormulaVariant.DISTANCE_CORRECTED:
        return distance_corrected_total(s, dist)
    return corrected_total(s, dist)


# Preference order when totals tie.
TIE_BREAK_ORDER = [StrategyKind.WAIT_AT_STOP1, StrategyKind.WALK_THEN_WAIT, StrategyKind.WALK_ALL]


def decide(s: Scenario, dist: ArrivalDistribution) -> DecisionReport:
    by_strategy = {
        StrategyKind.WALK_THEN_WAIT: corrected_total(s, dist),
        StrategyKind.WAIT_AT_STOP1: wait_at_stop1(s, dist),
        StrategyKind.WALK_ALL: walk_all(s),
    }
    best_total = min(b.total for b in by_strategy.values())
    slack = constants.TIE_TOLERANCE * max(1.0, abs(best_total))
    recommended = next(kind for kind in TIE_BREAK_ORDER if by_strategy[kind].total <= best_total + slack)

    others = [b.total for kind, b in by_strategy.items() if kind != recommended]
    margin = max(0.0, min(others) - by_strategy[recommended].total)
    logger.debug('decide() Recommended {} with margin {}'.format(recommended.value, margin))

    return DecisionReport(
        walk_then_wait=by_strategy[StrategyKind.WALK_THEN_WAIT],
        wait_at_stop1=by_strategy[StrategyKind.WAIT_AT_STOP1],
        walk_all=by_strategy[StrategyKind.WALK_ALL],
        recommended=recommended,
        margin=margin)


# -------------------------------------------------------------------------------------------------
# Residual waiting term
# Only defined while the walk to stop 2 is shorter than the headway.
# -------------------------------------------------------------------------------------------------
def check_residual_assumption(s: Scenario, t_b: float):
    if t_b <= 0:
        raise constants.ValidationError(['NonPositiveHeadway'])
    if not s.d2 / s.vw < t_b:
        raise constants.AssumptionViolated(
            'Residual term needs d2/vw < t_b, got d2/vw = {} and t_b = {}'.format(s.d2 / s.vw, t_b),
            constants.RESIDUAL_RATIONALE)


def residual_uniform(s: Scenario, t_b: float) -> float:
    """integral_0^(d2/vw) (1/t_b)[(t_b - t) - (d2 - vw t)/vw] dt by quadrature."""
    check_residual_assumption(s, t_b)
    integrand = lambda t: ((t_b - t) - (s.d2 - s.vw * t) / s.vw) / t_b  # noqa: E731
    return numerics.integrate(integrand, 0.0, s.d2 / s.vw).value


def residual_closed_form(s: Scenario, t_b: float) -> float:
    check_residual_assumption(s, t_b)
    walk_to_stop2 = s.d2 / s.vw
    return walk_to_stop2 * (t_b - walk_to_stop2) / t_b


def renewal_reference(s: Scenario, t_b: float) -> typing.Tuple[float, float]:
    """
    Closed form of what the renewal simulator measures: the first bus overtakes the walker
    before stop 2 with probability s/t_b, and the walker then waits t_b*1.5 - s on average
    for the second bus.
    """
    check_residual_assumption(s, t_b)
    shift_s = derive(s).shift_s
    return shift_s / t_b, 1.5 * t_b - shift_s


# -------------------------------------------------------------------------------------------------
# Break-even
# -------------------------------------------------------------------------------------------------
def indifference_gap(s: Scenario, dist: ArrivalDistribution, solve_for: str, value: float) -> float:
    """Expected remaining time when waiting at stop 2 minus the remaining walk W."""
    if solve_for not in SOLVE_FOR_PARAMETERS:
        raise constants.ValidationError(['UnknownBreakevenParameter:{}'.format(solve_for)])
    candidate = s.replace(**{solve_for: value})
    return corrected_post_stop2(candidate, dist).total - derive(candidate).walk_rest_W


def breakeven(s: Scenario, dist: ArrivalDistribution, bracket: typing.Tuple[float, float],
              solve_for: str = SOLVE_FOR_TW, tol: float = constants.ROOT_TOLERANCE) -> float:
    """
    Root of indifference_gap in `solve_for` inside bracket. Raises NoSignChange with the
    gap at both ends when there is no indifference point, so the caller can tell which
    strategy dominates. In tw the gap is exactly 0 at tw = 0, so a bracket starting there
    is evaluated from a point just above it.
    """
    lo, hi = bracket
    if not lo < hi:
        raise constants.InvalidBracket('Invalid bracket [{}, {}]: lo must be smaller than hi'.format(lo, hi))
    if solve_for == SOLVE_FOR_TW and lo == 0.0:
        lo = lo + constants.DEGENERATE_ROOT_OFFSET * (hi - lo)
        logger.debug('breakeven() Skipping trivial root, lower end moved to {}'.format(lo))

    return numerics.find_root(lambda x: indifference_gap(s, dist, solve_for, x), lo, hi, tol)


def breakeven_tw(s: Scenario, dist: ArrivalDistribution, bracket: typing.Tuple[float, float],
                 tol: float = constants.ROOT_TOLERANCE) -> float:
    return breakeven(s, dist, bracket, SOLVE_FOR_TW, tol)
