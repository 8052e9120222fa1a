# -*- coding: utf-8 -*-
#
# Walk or Wait: Executors
#
# Run simulation chunks one after the other or spread over worker processes.
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
import concurrent.futures
import logging
import typing

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait import settings

logger = logging.getLogger(__name__)

Task = typing.TypeVar('Task')
Result = typing.TypeVar('Result')


# #################################################################################################
# #################################################################################################
# Executors
# #################################################################################################
# #################################################################################################
class ExecutorABC(abc.ABC):

    @abc.abstractmethod
    def execute(self, task_fn: typing.Callable[[Task], Result], tasks: typing.Sequence[Task]) -> typing.List[Result]:
        """
        Runs task_fn on every task and returns the results in task order, whatever order
        they finished in. task_fn must be a module level function when the executor uses
        worker processes.
        """
        pass


class SequentialExecutor(ExecutorABC):

    def execute(self, task_fn, tasks):
        logger.debug('SequentialExecutor::execute() Starting {} tasks'.format(len(tasks)))
        return [task_fn(task) for task in tasks]


class ProcessPoolChunkExecutor(ExecutorABC):

    def __init__(self, workers: int):
        self.workers = workers

    def execute(self, task_fn, tasks):
        logger.debug('ProcessPoolChunkExecutor::execute() Starting {} tasks on {} workers'.format(
            len(tasks), self.workers))
        results = {}
        with concurrent.futures.ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = {executor.submit(task_fn, task): idx for idx, task in enumerate(tasks)}
            for future in concurrent.futures.as_completed(futures):
                results[futures[future]] = future.result()

        return [results[idx] for idx in sorted(results)]


class ExecutorSettings(object):

    def __init__(self, workers: int = constants.DEFAULT_WORKERS,
                 chunk_size: int = constants.DEFAULT_CHUNK_SIZE):
        if workers < 1:
            raise constants.ValidationError(['NonPositiveWorkers'])
        if chunk_size < 1:
            raise constants.ValidationError(['NonPositiveChunkSize'])
        self.workers = workers
        self.chunk_size = chunk_size

    @classmethod
    def from_settings(cls) -> ExecutorSettings:
        return cls(
            settings.getSettingAsOptionalInt('workers', constants.DEFAULT_WORKERS),
            settings.getSettingAsOptionalInt('chunk_size', constants.DEFAULT_CHUNK_SIZE))


class ExecutorFactoryABC(abc.ABC):

    @abc.abstractmethod
    def create(self, task_count: int) -> ExecutorABC:
        """
        Creates the executor to run task_count tasks with.
        """
        pass


# -------------------------------------------------------------------------------------------------
# Abstract Factory Pattern
# See https://www.oreilly.com/library/view/head-first-design/0596007124/ch04.html
# -------------------------------------------------------------------------------------------------
class ExecutorFactory(ExecutorFactoryABC):
    def __init__(self, executor_settings: ExecutorSettings = None):
        self.settings = executor_settings if executor_settings is not None else ExecutorSettings.from_settings()

    def create(self, task_count: int) -> ExecutorABC:
        workers = max(1, min(self.settings.workers, task_count))
        if workers <= 1:
            return SequentialExecutor()
        return ProcessPoolChunkExecutor(workers)
