import unittest

import logging

from walkwait import constants
from walkwait import settings
from walkwait import simulation
from walkwait import distributions
from walkwait.executors import ExecutorFactory, ExecutorSettings, ProcessPoolChunkExecutor, SequentialExecutor
from walkwait.model import StrategyKind

from tests.fakes import scenario

logger = logging.getLogger(__name__)
logging.basicConfig(format = '%(asctime)s %(module)s %(levelname)s: %(message)s',
                datefmt = '%m/%d/%Y %I:%M:%S %p', level = logging.DEBUG)


def _square(value):
    return value * value


class Test_executors(unittest.TestCase):

    def tearDown(self):
        settings.clearSettings()

    def test_when_one_worker_is_configured_it_runs_sequentially(self):
        # arrange
        target = ExecutorFactory(ExecutorSettings(workers=1))

        # act
        actual = target.create(10)

        # assert
        self.assertIsInstance(actual, SequentialExecutor)

    def test_when_several_workers_are_configured_it_uses_processes(self):
        # arrange
        target = ExecutorFactory(ExecutorSettings(workers=4))

        # act
        actual = target.create(10)

        # assert
        self.assertIsInstance(actual, ProcessPoolChunkExecutor)
        self.assertEqual(4, actual.workers)

    def test_when_there_are_fewer_tasks_than_workers_the_pool_shrinks(self):
        # arrange
        target = ExecutorFactory(ExecutorSettings(workers=8))

        # act
        single = target.create(1)
        pair = target.create(2)

        # assert
        self.assertIsInstance(single, SequentialExecutor)
        self.assertEqual(2, pair.workers)

    def test_when_settings_are_not_positive_they_are_rejected(self):
        with self.assertRaises(constants.ValidationError) as ctx:
            ExecutorSettings(workers=0)
        self.assertEqual(['NonPositiveWorkers'], ctx.exception.violations)
        with self.assertRaises(constants.ValidationError) as ctx:
            ExecutorSettings(chunk_size=0)
        self.assertEqual(['NonPositiveChunkSize'], ctx.exception.violations)

    def test_settings_are_read_from_the_environment_layer(self):
        # arrange
        settings.setSetting('workers', 3)
        settings.setSetting('chunk_size', 500)

        # act
        actual = ExecutorSettings.from_settings()

        # assert
        self.assertEqual(3, actual.workers)
        self.assertEqual(500, actual.chunk_size)

    def test_sequential_executor_keeps_task_order(self):
        # act
        actual = SequentialExecutor().execute(_square, [3, 1, 2])

        # assert
        self.assertEqual([9, 1, 4], actual)

    def test_process_pool_returns_results_in_task_order(self):
        # act
        actual = ProcessPoolChunkExecutor(2).execute(_square, list(range(20)))

        # assert
        self.assertEqual([i * i for i in range(20)], actual)

    def test_worker_count_does_not_change_the_statistics(self):
        # arrange
        dist = distributions.uniform(0.0, 0.25)

        # act
        sequential = simulation.run_mc(scenario(), StrategyKind.WALK_THEN_WAIT, dist, 40000, 42,
                                       ExecutorSettings(workers=1, chunk_size=5000))
        parallel = simulation.run_mc(scenario(), StrategyKind.WALK_THEN_WAIT, dist, 40000, 42,
                                     ExecutorSettings(workers=2, chunk_size=5000))

        # assert
        self.assertEqual(sequential, parallel)


if __name__ == '__main__':
    unittest.main()
