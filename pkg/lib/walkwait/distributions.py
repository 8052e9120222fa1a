# -*- coding: utf-8 -*-
#
# Walk or Wait: bus arrival time distributions
#
# Law of the bus arrival time at stop 1, the shifted density seen by a walker waiting at
# stop 2, and the seeded random number streams used by the simulator.
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
import dataclasses
import logging
import math
import typing

# --- Third party ---
import numpy as np

# --- Walk or Wait modules ---
from walkwait import constants

logger = logging.getLogger(__name__)

UNIFORM_PREFIX = 'uniform:'
EXPONENTIAL_PREFIX = 'exp:'


# #################################################################################################
# #################################################################################################
# Distributions
# #################################################################################################
# #################################################################################################
class ArrivalDistribution(abc.ABC):
    """
    Distribution of the bus arrival time at stop 1, measured from the moment the walker
    leaves stop 1. Instances are immutable.
    """

    @abc.abstractmethod
    def pdf(self, t: float) -> float:
        pass

    @abc.abstractmethod
    def cdf(self, t: float) -> float:
        pass

    @abc.abstractmethod
    def ppf(self, u):
        """Inverse CDF. Accepts a float or a numpy array of probabilities in [0, 1)."""
        pass

    @abc.abstractmethod
    def support(self) -> typing.Tuple[float, float]:
        """Support interval (lo, hi). hi may be math.inf."""
        pass

    @abc.abstractmethod
    def spec_string(self) -> str:
        pass

    def upper_bound(self) -> float:
        """Finite upper limit for quadrature. Unbounded supports are cut at the 1 - 1e-12 quantile."""
        lo, hi = self.support()
        if math.isinf(hi):
            return float(self.ppf(1.0 - constants.TRUNCATION_MASS))
        return hi

    def breakpoints(self) -> typing.List[float]:
        """Points where the density jumps."""
        lo, hi = self.support()
        return [p for p in (lo, hi) if math.isfinite(p)]

    def __str__(self):
        return self.spec_string()


@dataclasses.dataclass(frozen=True)
class UniformArrival(ArrivalDistribution):
    a: float
    b: float

    def pdf(self, t: float) -> float:
        if self.a <= t <= self.b:
            return 1.0 / (self.b - self.a)
        return 0.0

    def cdf(self, t: float) -> float:
        if t <= self.a:
            return 0.0
        if t >= self.b:
            return 1.0
        return min(1.0, max(0.0, (t - self.a) / (self.b - self.a)))

    def ppf(self, u):
        return self.a + u * (self.b - self.a)

    def support(self) -> typing.Tuple[float, float]:
        return (self.a, self.b)

    def spec_string(self) -> str:
        return '{}{},{}'.format(UNIFORM_PREFIX, _format_literal(self.a), _format_literal(self.b))

    @property
    def width(self) -> float:
        return self.b - self.a


@dataclasses.dataclass(frozen=True)
class ExponentialArrival(ArrivalDistribution):
    rate: float

    def pdf(self, t: float) -> float:
        if t < 0.0:
            return 0.0
        return self.rate * math.exp(-self.rate * t)

    def cdf(self, t: float) -> float:
        if t <= 0.0:
            return 0.0
        return min(1.0, -math.expm1(-self.rate * t))

    def ppf(self, u):
        return -np.log1p(-u) / self.rate

    def support(self) -> typing.Tuple[float, float]:
        return (0.0, math.inf)

    def spec_string(self) -> str:
        return '{}{}'.format(EXPONENTIAL_PREFIX, _format_literal(self.rate))


def _format_literal(value: float) -> str:
    return format(value, constants.NUMBER_FORMAT)


# -------------------------------------------------------------------------------------------------
# Constructors
# -------------------------------------------------------------------------------------------------
def uniform(a: float, b: float) -> UniformArrival:
    if not (math.isfinite(a) and math.isfinite(b)) or b <= a:
        raise constants.EmptySupport('Empty support: uniform({}, {}) needs b > a'.format(a, b))
    if a < 0:
        raise constants.DistributionError('Arrival times cannot be negative: uniform({}, {})'.format(a, b))
    return UniformArrival(float(a), float(b))


def exponential(rate: float) -> ExponentialArrival:
    if not math.isfinite(rate) or rate <= 0:
        raise constants.NonPositiveRate('Exponential rate must be positive, got {}'.format(rate))
    return ExponentialArrival(float(rate))


# -------------------------------------------------------------------------------------------------
# Density views
# -------------------------------------------------------------------------------------------------
def pdf(dist: ArrivalDistribution, t: float) -> float:
    return dist.pdf(t)


def cdf(dist: ArrivalDistribution, t: float) -> float:
    return dist.cdf(t)


#
# Density of the stop 2 waiting time t: a bus seen at stop 2 after waiting t left stop 1
# at t + shift_s. The view is sub-normalized, the missing mass being missed_mass().
#
def shifted_pdf(dist: ArrivalDistribution, shift_s: float, t: float) -> float:
    return dist.pdf(t + shift_s)


def missed_mass(dist: ArrivalDistribution, shift_s: float) -> float:
    return dist.cdf(shift_s)


def shifted_breakpoints(dist: ArrivalDistribution, shift_s: float,
                        lo: float, hi: float) -> typing.List[float]:
    """Waiting times in (lo, hi) where t + shift_s crosses a density jump."""
    return sorted(p - shift_s for p in dist.breakpoints() if lo < p - shift_s < hi)


def headway(dist: ArrivalDistribution) -> typing.Optional[float]:
    """Width t_b when dist is uniform(0, t_b), None for every other law."""
    if isinstance(dist, UniformArrival) and dist.a == 0.0:
        return dist.b
    return None


# -------------------------------------------------------------------------------------------------
# Spec strings: uniform:<a>,<b> | exp:<rate>
# -------------------------------------------------------------------------------------------------
def parse_spec(text: str) -> ArrivalDistribution:
    if not isinstance(text, str):
        raise constants.BadDistributionSpec('Distribution spec must be a string, got {!r}'.format(text))
    spec = text.strip()
    try:
        if spec.startswith(UNIFORM_PREFIX):
            params = spec[len(UNIFORM_PREFIX):].split(',')
            if len(params) != 2:
                raise ValueError('uniform needs two parameters')
            return uniform(_parse_literal(params[0]), _parse_literal(params[1]))
        if spec.startswith(EXPONENTIAL_PREFIX):
            return exponential(_parse_literal(spec[len(EXPONENTIAL_PREFIX):]))
    except ValueError as ex:
        raise constants.BadDistributionSpec('Bad distribution spec "{}": {}'.format(text, ex))

    raise constants.BadDistributionSpec(
        'Bad distribution spec "{}". Expected uniform:<a>,<b> or exp:<rate>'.format(text))


def _parse_literal(literal: str) -> float:
    literal = literal.strip()
    # Decimal literals only, no 'inf' or 'nan'
    value = float(literal)
    if not math.isfinite(value):
        raise ValueError('not a finite number: {}'.format(literal))
    return value


# #################################################################################################
# #################################################################################################
# Random streams
# #################################################################################################
# #################################################################################################
class SeededRng(object):
    """
    Single owner random stream built on numpy's default generator.
    Child streams for chunked simulation are derived from (seed, chunk index) so any chunk
    can be replayed on its own, in any process.
    """

    def __init__(self, seed: int, spawn_key: typing.Tuple[int, ...] = ()):
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0 or seed >= 2**64:
            raise constants.ValidationError(['SeedOutOfRange'])
        self.seed = int(seed)
        self.spawn_key = tuple(spawn_key)
        self.generator = np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=self.spawn_key))

    def child(self, index: int) -> SeededRng:
        return SeededRng(self.seed, self.spawn_key + (int(index),))

    def random(self) -> float:
        return float(self.generator.random())

    def random_array(self, n: int) -> np.ndarray:
        return self.generator.random(n)


def sample(dist: ArrivalDistribution, rng: SeededRng) -> float:
    return float(dist.ppf(rng.random()))


def sample_many(dist: ArrivalDistribution, rng: SeededRng, n: int) -> np.ndarray:
    return np.asarray(dist.ppf(rng.random_array(n)), dtype=float)
