import math
import unittest

import logging

from scipy import integrate as scipy_integrate

from walkwait import constants
from walkwait import distributions
from walkwait import numerics

logger = logging.getLogger(__name__)
logging.basicConfig(format = '%(asctime)s %(module)s %(levelname)s: %(message)s',
                datefmt = '%m/%d/%Y %I:%M:%S %p', level = logging.DEBUG)


class Test_integrate(unittest.TestCase):

    def test_when_integrating_a_square_it_returns_a_third(self):
        # act
        actual = numerics.integrate(lambda t: t * t, 0.0, 1.0, 1e-10)

        # assert
        self.assertAlmostEqual(1.0 / 3.0, actual.value, delta=1e-10)
        self.assertLessEqual(actual.error_estimate, 1e-10)
        self.assertGreater(actual.evaluations, 0)

    def test_when_integrating_a_jump_at_a_breakpoint_it_converges(self):
        # arrange
        dist = distributions.uniform(0, 0.25)

        # act
        actual = numerics.integrate(dist.pdf, 0.0, 0.5, 1e-10, [0.25])

        # assert
        self.assertAlmostEqual(1.0, actual.value, delta=1e-10)

    def test_when_integrating_the_s1_boarding_term_it_returns_the_antiderivative_value(self):
        # act
        actual = numerics.integrate(lambda t: 4 * (0.075 + t), 0.0, 0.1, 1e-10)

        # assert
        self.assertAlmostEqual(0.05, actual.value, delta=1e-12)

    def test_cubics_are_integrated_exactly(self):
        cases = [
            (lambda x: x ** 3, 0.0, 1.0, 0.25),
            (lambda x: 2 - x + 3 * x ** 2 - x ** 3, -1.0, 2.0, 9.75),
            (lambda x: 3 * x ** 2 + 2 * x + 1, 0.0, 2.0, 14.0),
        ]
        for f, a, b, expected in cases:
            # act
            actual = numerics.integrate(f, a, b, 1e-10)

            # assert
            self.assertAlmostEqual(expected, actual.value, delta=1e-12 * abs(expected))

    def test_agrees_with_scipy_on_smooth_integrands(self):
        cases = [
            (math.exp, 0.0, 2.0),
            (lambda t: 4 * math.exp(-4 * t) * (0.075 + t), 0.0, 0.1),
            (lambda t: math.sin(t) ** 2, 0.0, math.pi),
            (lambda t: 1.0 / (1.0 + t * t), -3.0, 5.0),
        ]
        for f, a, b in cases:
            # arrange
            expected, _ = scipy_integrate.quad(f, a, b, epsabs=1e-13, epsrel=1e-13)

            # act
            actual = numerics.integrate(f, a, b, 1e-10)

            # assert
            self.assertAlmostEqual(expected, actual.value, delta=1e-10)

    def test_tightening_the_tolerance_does_not_lose_accuracy(self):
        # arrange
        f = lambda t: math.exp(-3 * t) * math.cos(5 * t)  # noqa: E731
        expected, _ = scipy_integrate.quad(f, 0.0, 2.0, epsabs=1e-14, epsrel=1e-14)
        tolerances = [1e-3, 1e-5, 1e-7, 1e-9]

        # act
        errors = [abs(numerics.integrate(f, 0.0, 2.0, tol).value - expected) for tol in tolerances]

        # assert
        for tol, error in zip(tolerances, errors):
            self.assertLessEqual(error, tol)
        self.assertLessEqual(errors[-1], errors[0] + 1e-13)

    def test_integration_is_deterministic(self):
        # arrange
        f = lambda t: math.exp(-t) * t  # noqa: E731

        # act
        first = numerics.integrate(f, 0.0, 3.0, 1e-10, [1.0])
        second = numerics.integrate(f, 0.0, 3.0, 1e-10, [1.0])

        # assert
        self.assertEqual(first, second)

    def test_when_a_jump_is_not_declared_it_runs_out_of_depth(self):
        # arrange
        step = lambda t: 1.0 if t < 1.0 / 3.0 else 0.0  # noqa: E731

        # act
        with self.assertRaises(constants.MaxDepthExceeded):
            numerics.integrate(step, 0.0, 1.0, 1e-10)

    def test_empty_interval_integrates_to_zero(self):
        # act
        actual = numerics.integrate(math.exp, 0.5, 0.5)

        # assert
        self.assertEqual(0.0, actual.value)
        self.assertEqual(0, actual.evaluations)


class Test_find_root(unittest.TestCase):

    def test_when_solving_a_line_it_returns_its_root(self):
        # act
        actual = numerics.find_root(lambda x: x - 0.3, 0.0, 1.0, 1e-9)

        # assert
        self.assertAlmostEqual(0.3, actual, delta=1e-9)

    def test_when_solving_cosine_it_returns_half_pi(self):
        # act
        actual = numerics.find_root(math.cos, 1.0, 2.0, 1e-9)

        # assert
        self.assertAlmostEqual(1.570796327, actual, delta=1e-9)

    def test_when_there_is_no_sign_change_it_reports_both_ends(self):
        # act
        with self.assertRaises(constants.NoSignChange) as ctx:
            numerics.find_root(lambda x: x * x, 1.0, 2.0, 1e-9)

        # assert
        self.assertEqual(1.0, ctx.exception.f_lo)
        self.assertEqual(4.0, ctx.exception.f_hi)

    def test_when_the_bracket_is_empty_it_fails(self):
        with self.assertRaises(constants.InvalidBracket):
            numerics.find_root(lambda x: x, 0.0, 0.0, 1e-9)
        with self.assertRaises(constants.InvalidBracket):
            numerics.find_root(lambda x: x, 1.0, 0.0, 1e-9)

    def test_when_an_end_is_a_root_it_is_returned(self):
        # act
        actual = numerics.find_root(lambda x: x - 2.0, 1.0, 2.0, 1e-9)

        # assert
        self.assertEqual(2.0, actual)

    def test_root_finding_is_deterministic(self):
        # act
        first = numerics.find_root(lambda x: x ** 3 - 2.0, 0.0, 2.0, 1e-12)
        second = numerics.find_root(lambda x: x ** 3 - 2.0, 0.0, 2.0, 1e-12)

        # assert
        self.assertEqual(first, second)


class Test_scan_brackets(unittest.TestCase):

    def test_when_scanning_it_finds_every_crossing(self):
        # act
        actual = numerics.scan_brackets(lambda x: (x - 0.21) * (x - 0.73), 0.0, 1.0, 1000)

        # assert
        self.assertEqual(2, len(actual))
        self.assertTrue(actual[0][0] <= 0.21 <= actual[0][1])
        self.assertTrue(actual[1][0] <= 0.73 <= actual[1][1])

    def test_a_zero_at_the_lower_end_is_not_reported(self):
        # act
        actual = numerics.scan_brackets(lambda x: x * (x - 0.5), 0.0, 1.0, 11)

        # assert
        self.assertEqual([(0.4, 0.5)], [(round(a, 12), round(b, 12)) for a, b in actual])

    def test_when_there_is_no_crossing_it_returns_nothing(self):
        # act
        actual = numerics.scan_brackets(lambda x: x * x + 1, -1.0, 1.0)

        # assert
        self.assertEqual([], actual)


if __name__ == '__main__':
    unittest.main()
