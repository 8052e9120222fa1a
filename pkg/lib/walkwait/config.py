# -*- coding: utf-8 -*-
#
# Walk or Wait: scenario configuration
#
# Flat JSON config files merged with command line flags. Precedence per key:
# flag > file > setting (WALKWAIT_<KEY>) > default.
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

import collections
import dataclasses
import logging
import math
import typing

# --- Third party ---
import numpy as np

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait import distributions
from walkwait import model
from walkwait import settings
from walkwait.distributions import ArrivalDistribution
from walkwait.model import Scenario
from walkwait.utils import io
from walkwait.utils.text import format_number

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ScenarioConfig:
    scenario: Scenario
    dist: ArrivalDistribution
    tb: typing.Optional[float]
    trials: int
    seed: int

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        values = collections.OrderedDict(self.scenario.as_dict())
        values['tb'] = self.tb
        values['dist'] = self.dist.spec_string()
        values['trials'] = self.trials
        values['seed'] = self.seed
        return values

    def echo_str(self) -> str:
        """One line summary of the merged config, echoed with every result."""
        return ' '.join('{}={}'.format(k, v if isinstance(v, str) else format_number(v))
                        for k, v in self.as_dict().items() if v is not None)

    def replace(self, **changes) -> ScenarioConfig:
        return dataclasses.replace(self, **changes)


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    param: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        violations = []
        if self.param not in constants.SWEEP_PARAMETERS:
            violations.append('UnknownSweepParameter:{}'.format(self.param))
        if not self.start < self.stop:
            violations.append('EmptySweepRange')
        if self.steps < 2:
            violations.append('TooFewSweepSteps')
        if violations:
            raise constants.ValidationError(violations)

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    def apply(self, config: ScenarioConfig, value: float) -> typing.Tuple[Scenario, ArrivalDistribution]:
        """Scenario and distribution at one grid point. Sweeping tb sweeps uniform(0, tb)."""
        if self.param == 'tb':
            return config.scenario, distributions.uniform(0.0, value)
        return config.scenario.replace(**{self.param: value}), config.dist


def _is_integer(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def load_config_file(path: typing.Union[str, io.FileName]) -> typing.Dict[str, typing.Any]:
    config_file = path if isinstance(path, io.FileName) else io.FileName(path)
    logger.debug('load_config_file() Loading "{}"'.format(config_file.getPath()))
    if not config_file.exists():
        logger.error('load_config_file() File "{}" not found'.format(config_file.getPath()))
        raise constants.IoError('Config file {} not found'.format(config_file.getPath()))
    data = config_file.readJson()
    if not isinstance(data, dict):
        raise constants.ParseError('Config file {} must hold a flat JSON object'.format(config_file.getPath()))
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            raise constants.ParseError('Config key "{}" must not be nested'.format(key))
    return data


def parse_config(path: typing.Union[str, io.FileName, None] = None,
                 overrides: typing.Dict[str, typing.Any] = None) -> ScenarioConfig:
    """
    Builds a validated ScenarioConfig from an optional config file and flag overrides.
    None valued overrides are ignored. Every problem found is listed in one ValidationError.
    """
    if path is None:
        path = settings.getSettingAsFilePath('config')

    merged = collections.OrderedDict()
    if path is not None:
        merged.update(load_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value

    violations = ['UnknownKey:{}'.format(key) for key in merged if key not in constants.CONFIG_KEYS]
    violations.extend('MissingField:{}'.format(key) for key in constants.SCENARIO_KEYS if key not in merged)

    tb = merged.get('tb')
    if tb is not None and (not model.is_number(tb) or tb <= 0):
        violations.append('NonPositiveHeadway')
        tb = None

    dist = None
    if 'dist' in merged:
        dist = distributions.parse_spec(merged['dist'])
    elif tb is not None:
        dist = distributions.uniform(0.0, tb)
    else:
        violations.append('MissingField:dist')
    if tb is None and dist is not None:
        tb = distributions.headway(dist)
    elif tb is not None and dist is not None:
        dist_tb = distributions.headway(dist)
        if dist_tb is not None and not math.isclose(tb, dist_tb, rel_tol=1e-12):
            violations.append(constants.HEADWAY_CONTRADICTS_DISTRIBUTION)

    trials = merged.get('trials', constants.DEFAULT_TRIALS)
    if not _is_integer(trials) or trials < 1:
        violations.append('NonPositiveTrials')
    seed = merged.get('seed', settings.getSettingAsOptionalInt('seed', constants.DEFAULT_SEED))
    if not _is_integer(seed) or seed < 0 or seed >= 2**64:
        violations.append('SeedOutOfRange')

    scenario = None
    if all(key in merged for key in constants.SCENARIO_KEYS):
        try:
            scenario = model.validate(*[merged[key] for key in constants.SCENARIO_KEYS])
        except constants.ValidationError as ex:
            violations.extend(ex.violations)

    if violations:
        logger.debug('parse_config() Violations: {}'.format(violations))
        raise constants.ValidationError(violations)

    return ScenarioConfig(scenario=scenario, dist=dist, tb=float(tb) if tb is not None else None,
                          trials=trials, seed=seed)
