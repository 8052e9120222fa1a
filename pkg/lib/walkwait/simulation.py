# -*- coding: utf-8 -*-
#
# Walk or Wait: Monte Carlo simulator
#
# Simulates single journeys from sampled bus arrival times. This module does not use any
# engine formula, it only replays the kinematics, so it can serve as an oracle for them.
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

# --- Third party ---
import numpy as np

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait import distributions
from walkwait import engine
from walkwait.distributions import ArrivalDistribution, SeededRng
from walkwait.executors import ExecutorFactory, ExecutorFactoryABC, ExecutorSettings
from walkwait.model import Scenario, StrategyKind

logger = logging.getLogger(__name__)


# -------------------------------------------------------------------------------------------------
# Results
# -------------------------------------------------------------------------------------------------
class TrialEvent(enum.IntEnum):
    """What happened to one journey. Values are the event codes of the vectorized kernel."""
    BOARDED = constants.EVENT_BOARDED
    MISSED_EARLY = constants.EVENT_MISSED_EARLY
    NO_BUS_IN_WINDOW = constants.EVENT_NO_BUS

    @property
    def label(self) -> str:
        return constants.EVENT_NAMES[self.value]


@dataclasses.dataclass(frozen=True)
class TrialOutcome:
    strategy: StrategyKind
    bus_t1: float
    event: TrialEvent
    arrival: float

    @property
    def event_name(self) -> str:
        return self.event.label



@dataclasses.dataclass(frozen=True)
class SampleStats:
    trials: int
    mean: float
    stderr: float


@dataclasses.dataclass(frozen=True)
class SimStats(SampleStats):
    freq_board: float
    freq_missed_early: float
    freq_no_bus: float


@dataclasses.dataclass(frozen=True)
class RenewalStats:
    trials: int
    overtaken: int
    overtake_frequency: float
    # None when no trial was overtaken
    extra_wait: typing.Optional[SampleStats]


def z_score(value: float, stats: SampleStats) -> float:
    """Distance of value from the simulated mean in standard errors."""
    delta = value - stats.mean
    if abs(delta) <= 1e-12:
        return 0.0
    if stats.stderr == 0.0:
        return math.copysign(math.inf, delta)
    return delta / stats.stderr


# -------------------------------------------------------------------------------------------------
# Single journeys
# -------------------------------------------------------------------------------------------------
def simulate_trials(s: Scenario, strategy: StrategyKind,
                    bus_t1: np.ndarray) -> typing.Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized journeys for an array of bus arrival times at stop 1.
    Returns (events, arrivals). A boarded walker arrives with the bus at bus_t1 + d/vb;
    everybody else arrives at tw + d/vw, having lost exactly tw against walking.
    The boarding window is closed at both ends.
    """
    bus_t1 = np.asarray(bus_t1, dtype=float)
    events = np.full(bus_t1.shape, constants.EVENT_NO_BUS, dtype=np.int8)
    fallback_arrival = s.tw + s.d / s.vw

    if strategy == StrategyKind.WALK_ALL:
        return events, np.full(bus_t1.shape, s.d / s.vw)

    if strategy == StrategyKind.WALK_THEN_WAIT:
        walker_at_stop2 = s.d2 / s.vw
        bus_at_stop2 = bus_t1 + s.d2 / s.vb
        boarded = (bus_at_stop2 >= walker_at_stop2) & (bus_at_stop2 <= walker_at_stop2 + s.tw)
        events[bus_at_stop2 < walker_at_stop2] = constants.EVENT_MISSED_EARLY
    else:
        boarded = bus_t1 <= s.tw

    events[boarded] = constants.EVENT_BOARDED
    arrivals = np.where(boarded, bus_t1 + s.d / s.vb, fallback_arrival)
    return events, arrivals


def simulate_trial(s: Scenario, strategy: StrategyKind, bus_t1: float) -> TrialOutcome:
    if bus_t1 < 0:
        raise constants.ValidationError(['NegativeBusArrival'])
    events, arrivals = simulate_trials(s, strategy, np.array([bus_t1]))
    return TrialOutcome(strategy, float(bus_t1), TrialEvent(int(events[0])), float(arrivals[0]))


# -------------------------------------------------------------------------------------------------
# Chunked execution
# Chunk k of a run always draws from the child stream (seed, k) and holds the same trials,
# so the result does not depend on how many workers ran the chunks.
# -------------------------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class ChunkTask:
    scenario: Scenario
    strategy: StrategyKind
    dist: typing.Optional[ArrivalDistribution]
    seed: int
    index: int
    size: int
    t_b: float = 0.0


@dataclasses.dataclass(frozen=True)
class ChunkResult:
    index: int
    count: int
    mean: float
    m2: float
    events: typing.Tuple[int, int, int] = (0, 0, 0)
    overtaken: int = 0


def _moments(values: np.ndarray) -> typing.Tuple[float, float]:
    if values.size == 0:
        return 0.0, 0.0
    mean = float(np.mean(values))
    return mean, float(np.sum((values - mean) ** 2))


def _run_chunk(task: ChunkTask) -> ChunkResult:
    rng = SeededRng(task.seed).child(task.index)
    bus_t1 = distributions.sample_many(task.dist, rng, task.size)
    events, arrivals = simulate_trials(task.scenario, task.strategy, bus_t1)
    mean, m2 = _moments(arrivals)
    counts = np.bincount(events, minlength=3)
    return ChunkResult(task.index, task.size, mean, m2,
                       (int(counts[0]), int(counts[1]), int(counts[2])))


def _run_renewal_chunk(task: ChunkTask) -> ChunkResult:
    s = task.scenario
    rng = SeededRng(task.seed).child(task.index)
    bus1 = task.t_b * rng.random_array(task.size)
    bus2 = task.t_b + task.t_b * rng.random_array(task.size)

    # Bus 1 leaves stop 1 at bus1 and catches the walker at bus1*vb/(vb - vw)
    overtake_time = bus1 * s.vb / (s.vb - s.vw)
    overtaken = overtake_time < s.d2 / s.vw
    extra_wait = bus2[overtaken] + s.d2 / s.vb - s.d2 / s.vw
    mean, m2 = _moments(extra_wait)
    return ChunkResult(task.index, int(extra_wait.size), mean, m2, overtaken=int(np.count_nonzero(overtaken)))


def _combine(results: typing.List[ChunkResult]) -> typing.Tuple[int, float, float]:
    """Merges (count, mean, M2) of every chunk, in chunk order."""
    count = 0
    mean = 0.0
    m2 = 0.0
    for result in sorted(results, key=lambda r: r.index):
        if result.count == 0:
            continue
        total = count + result.count
        delta = result.mean - mean
        mean = mean + delta * result.count / total
        m2 = m2 + result.m2 + delta * delta * count * result.count / total
        count = total
    return count, mean, m2


def _stderr(count: int, m2: float) -> float:
    if count < 2:
        return 0.0
    return math.sqrt(m2 / (count - 1)) / math.sqrt(count)


def _chunk_tasks(s: Scenario, strategy: StrategyKind, dist: typing.Optional[ArrivalDistribution],
                 trials: int, seed: int, chunk_size: int, t_b: float = 0.0) -> typing.List[ChunkTask]:
    tasks = []
    for index, start in enumerate(range(0, trials, chunk_size)):
        tasks.append(ChunkTask(s, strategy, dist, seed, index, min(chunk_size, trials - start), t_b))
    return tasks


def _check_run(trials: int, seed: int):
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise constants.ValidationError(['NonPositiveTrials'])
    # Rejects seeds outside the 64-bit range.
    SeededRng(seed)


def run_mc(s: Scenario, strategy: StrategyKind, dist: ArrivalDistribution, trials: int, seed: int,
           executor_settings: ExecutorSettings = None,
           executor_factory: ExecutorFactoryABC = None) -> SimStats:
    _check_run(trials, seed)
    logger.debug('run_mc() Starting {} trials of {} with seed {}'.format(trials, strategy.value, seed))

    if strategy == StrategyKind.WALK_ALL:
        return SimStats(trials, s.d / s.vw, 0.0, 0.0, 0.0, 1.0)

    executor_settings = executor_settings if executor_settings is not None else ExecutorSettings.from_settings()
    factory = executor_factory if executor_factory is not None else ExecutorFactory(executor_settings)
    tasks = _chunk_tasks(s, strategy, dist, trials, seed, executor_settings.chunk_size)
    results = factory.create(len(tasks)).execute(_run_chunk, tasks)

    count, mean, m2 = _combine(results)
    events = [sum(r.events[i] for r in results) for i in range(3)]
    return SimStats(
        trials=count,
        mean=mean,
        stderr=_stderr(count, m2),
        freq_board=events[constants.EVENT_BOARDED] / count,
        freq_missed_early=events[constants.EVENT_MISSED_EARLY] / count,
        freq_no_bus=events[constants.EVENT_NO_BUS] / count)


def run_renewal(s: Scenario, t_b: float, trials: int, seed: int,
                executor_settings: ExecutorSettings = None,
                executor_factory: ExecutorFactoryABC = None) -> RenewalStats:
    """
    Two buses, the first uniform on [0, t_b] and the second on [t_b, 2 t_b]. Among the
    trials where the first bus overtakes the walker before stop 2, measures how long the
    walker waits at stop 2 for the second bus.
    """
    engine.check_residual_assumption(s, t_b)
    _check_run(trials, seed)
    logger.debug('run_renewal() Starting {} trials with t_b {} and seed {}'.format(trials, t_b, seed))

    executor_settings = executor_settings if executor_settings is not None else ExecutorSettings.from_settings()
    factory = executor_factory if executor_factory is not None else ExecutorFactory(executor_settings)
    tasks = _chunk_tasks(s, StrategyKind.WALK_THEN_WAIT, None, trials, seed, executor_settings.chunk_size, t_b)
    results = factory.create(len(tasks)).execute(_run_renewal_chunk, tasks)

    count, mean, m2 = _combine(results)
    overtaken = sum(r.overtaken for r in results)
    extra_wait = SampleStats(count, mean, _stderr(count, m2)) if count > 0 else None
    return RenewalStats(trials, overtaken, overtaken / trials, extra_wait)
