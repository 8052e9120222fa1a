# -*- coding: utf-8 -*-
#
# Walk or Wait: domain model
#
# Scenario parameters, validation and the derived kinematic quantities used by the
# engine and the simulator.
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
import math
import typing

# --- Walk or Wait modules ---
from walkwait import constants

logger = logging.getLogger(__name__)


class StrategyKind(enum.Enum):
    WALK_THEN_WAIT = 'walk-then-wait'
    WAIT_AT_STOP1 = 'wait-at-stop-1'
    WALK_ALL = 'walk-all'

    @classmethod
    def from_name(cls, name: str) -> StrategyKind:
        for kind in cls:
            if kind.value == name:
                return kind
        raise constants.ParseError('Unknown strategy "{}". Expected one of: {}'.format(
            name, ', '.join(k.value for k in cls)))


@dataclasses.dataclass(frozen=True)
class Scenario:
    """
    Geometry, speeds and waiting budget of one journey.
    d   distance from stop 1 to the destination
    d2  distance from stop 1 to stop 2
    vw  walking speed
    vb  bus speed
    tw  maximum time spent waiting at the chosen stop
    Units are whatever the caller uses, as long as they are consistent.
    Only build through validate() (or replace() on a validated instance).
    """
    d: float
    d2: float
    vw: float
    vb: float
    tw: float

    def replace(self, **changes) -> Scenario:
        """Returns a validated copy with some fields replaced."""
        fields = dataclasses.asdict(self)
        fields.update(changes)
        return validate(**fields)

    def as_dict(self) -> typing.Dict[str, float]:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class DerivedKinematics:
    shift_s: float
    ride_rest_A: float
    walk_rest_W: float
    walk_all: float


@dataclasses.dataclass(frozen=True)
class EvalBreakdown:
    """
    Term decomposition of one expected-time formula.
    total is always pre_walk + board_term + fallback_term and the three event
    probabilities always add up to one.
    """
    strategy: StrategyKind
    label: str
    pre_walk: float
    board_term: float
    fallback_term: float
    total: float
    p_board: float
    p_missed_early: float
    p_no_bus: float
    rhs: typing.Optional[float] = None
    flags: typing.Tuple[str, ...] = ()

    @classmethod
    def build(cls, strategy: StrategyKind, label: str, pre_walk: float, board_term: float,
              fallback_term: float, p_board: float, p_missed_early: float,
              rhs: float = None, flags: typing.Iterable[str] = (),
              p_no_bus: float = None) -> EvalBreakdown:
        if p_no_bus is None:
            p_no_bus = 1.0 - p_board - p_missed_early
        # Rounding may leave a tiny negative remainder.
        if p_no_bus < 0.0:
            p_no_bus = 0.0
        return cls(
            strategy=strategy,
            label=label,
            pre_walk=pre_walk,
            board_term=board_term,
            fallback_term=fallback_term,
            total=pre_walk + board_term + fallback_term,
            p_board=p_board,
            p_missed_early=p_missed_early,
            p_no_bus=p_no_bus,
            rhs=rhs,
            flags=tuple(flags))


def is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


# -------------------------------------------------------------------------------------------------
# Every violated constraint is collected before raising so one error lists them all.
# Constraint names come from constants (NonPositiveDistance, Stop2BeyondDestination, ...).
# -------------------------------------------------------------------------------------------------
def validate(d, d2, vw, vb, tw) -> Scenario:
    raw = {'d': d, 'd2': d2, 'vw': vw, 'vb': vb, 'tw': tw}
    violations = []

    bad_numbers = [key for key, value in raw.items() if not is_number(value)]
    if bad_numbers:
        for key in bad_numbers:
            violations.append('NotANumber:{}'.format(key))
        raise constants.ValidationError(violations)

    if d <= 0:
        violations.append(constants.NON_POSITIVE_DISTANCE)
    if d2 < 0 or d2 > d:
        violations.append(constants.STOP2_BEYOND_DESTINATION if d2 > d else constants.NON_POSITIVE_DISTANCE)
    if vw <= 0 or vb <= vw:
        violations.append(constants.SPEED_ORDER_VIOLATED)
    if tw < 0:
        violations.append(constants.NEGATIVE_WAIT)

    if violations:
        # d <= 0 and d2 < 0 both map to the same name
        violations = list(dict.fromkeys(violations))
        logger.debug('validate() Rejected {}: {}'.format(raw, violations))
        raise constants.ValidationError(violations)

    return Scenario(d=float(d), d2=float(d2), vw=float(vw), vb=float(vb), tw=float(tw))


def derive(s: Scenario) -> DerivedKinematics:
    return DerivedKinematics(
        shift_s=s.d2 / s.vw - s.d2 / s.vb,
        ride_rest_A=(s.d - s.d2) / s.vb,
        walk_rest_W=(s.d - s.d2) / s.vw,
        walk_all=s.d / s.vw)
