import io
import os
import tempfile
import unittest

import logging

from walkwait import cli
from walkwait import constants
from walkwait import settings

logger = logging.getLogger(__name__)
logging.basicConfig(format = '%(asctime)s %(module)s %(levelname)s: %(message)s',
                datefmt = '%m/%d/%Y %I:%M:%S %p', level = logging.DEBUG)

S1_FLAGS = ['--d', '2', '--d2', '0.5', '--vw', '4', '--vb', '20', '--tw', '0.1', '--tb', '0.25']


def _run(*argv):
    out = io.StringIO()
    exit_code = cli.main(list(argv), out)
    return exit_code, out.getvalue().splitlines()


class Test_cli(unittest.TestCase):

    def tearDown(self):
        settings.clearSettings()

    def test_when_evaluating_s1_it_prints_the_breakdown(self):
        # act
        exit_code, lines = _run('eval', *S1_FLAGS)

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertTrue(lines[0].startswith('# config: d=2 d2=0.5'))
        self.assertIn('total           0.46', lines)
        self.assertIn('p_missed_early  0.4', lines)

    def test_when_evaluating_as_csv_there_is_no_echo(self):
        # act
        exit_code, lines = _run('eval', *S1_FLAGS, '--csv')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertEqual(','.join(constants.BREAKDOWN_CSV_HEADER), lines[0])
        self.assertEqual('fully-corrected,0.125,0.05,0.285,0.46,0.4,0.4,0.2', lines[1])
        self.assertEqual(2, len(lines))

    def test_when_evaluating_the_original_equation_the_right_side_is_printed(self):
        # act
        exit_code, lines = _run('eval', *S1_FLAGS, '--variant', 'original-eq4')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertIn('total           0.41', lines)
        self.assertIn('rhs             0.375', lines)

    def test_when_a_field_is_missing_it_exits_with_invalid_input(self):
        # act
        exit_code, lines = _run('eval', '--d', '2', '--d2', '0.5', '--vw', '4', '--tb', '0.25')

        # assert
        self.assertEqual(constants.EXIT_INVALID, exit_code)
        self.assertEqual([], lines)

    def test_when_the_headway_contradicts_the_distribution_it_exits_with_invalid_input(self):
        # act
        exit_code, lines = _run('residual', '--d', '2', '--d2', '0.5', '--vw', '4', '--vb', '20', '--tw', '0.1',
                                '--dist', 'uniform:0,0.25', '--tb', '0.5')

        # assert
        self.assertEqual(constants.EXIT_INVALID, exit_code)
        self.assertEqual([], lines)

    def test_when_a_flag_is_unknown_it_exits_with_invalid_input(self):
        self.assertEqual(constants.EXIT_INVALID, _run('eval', *S1_FLAGS, '--speed', '3')[0])
        self.assertEqual(constants.EXIT_INVALID, _run('eval', *S1_FLAGS, '--dist', 'normal:0,1')[0])
        self.assertEqual(constants.EXIT_INVALID, _run('teleport', *S1_FLAGS)[0])

    def test_when_an_original_variant_gets_exponential_arrivals_it_is_refused(self):
        # act
        exit_code, _ = _run('eval', '--d', '2', '--d2', '0.5', '--vw', '4', '--vb', '20', '--tw', '0.1',
                            '--dist', 'exp:4', '--variant', 'original-expr')

        # assert
        self.assertEqual(constants.EXIT_INVALID, exit_code)

    def test_when_comparing_s1_the_corrected_total_passes_the_gate(self):
        # act
        exit_code, lines = _run('compare', *S1_FLAGS, '--trials', '200000')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        for variant in ['original-expr', 'original-eq4', 'distance-corrected', 'fully-corrected']:
            self.assertEqual(1, len([line for line in lines if line.startswith(variant)]))
        self.assertTrue(lines[-1].startswith('gate fully-corrected |z| = '))

    def test_when_gating_on_the_original_expression_the_oracle_disagrees(self):
        # act
        exit_code, _ = _run('compare', *S1_FLAGS, '--trials', '200000', '--gate', 'original-expr')

        # assert
        self.assertEqual(constants.EXIT_ORACLE_DISAGREEMENT, exit_code)

    def test_when_the_window_is_far_longer_than_exponential_headways_eval_still_succeeds(self):
        # act
        exit_code, lines = _run('eval', '--d', '2', '--d2', '0.5', '--vw', '4', '--vb', '20', '--tw', '100000',
                                '--dist', 'exp:4', '--csv')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertEqual(2, len(lines))
        self.assertTrue(lines[1].startswith('fully-corrected,'))

    def test_when_comparing_without_waiting_only_the_original_expression_walks_twice(self):
        # act
        exit_code, lines = _run('compare', '--d', '2', '--d2', '0.5', '--vw', '4', '--vb', '20', '--tw', '0',
                                '--tb', '0.25', '--trials', '10000', '--csv')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        rows = {line.split(',')[0]: line.split(',')[1:] for line in lines[1:]}
        self.assertAlmostEqual(0.625, float(rows['original-expr'][0]), delta=1e-12)
        for variant in ['original-eq4', 'distance-corrected', 'fully-corrected']:
            self.assertAlmostEqual(0.5, float(rows[variant][0]), delta=1e-12, msg=variant)
            self.assertEqual('0', rows[variant][3], msg=variant)
        self.assertEqual('0.5', rows['fully-corrected'][1])
        self.assertEqual('0', rows['fully-corrected'][2])

    def test_when_comparing_exponential_arrivals_the_original_variants_are_skipped(self):
        # act
        exit_code, lines = _run('compare', '--d', '2', '--d2', '0.5', '--vw', '4', '--vb', '20', '--tw', '0.1',
                                '--dist', 'exp:4', '--trials', '200000', '--csv')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertEqual('variant,total,mc_mean,mc_stderr,z', lines[0])
        self.assertEqual(['distance-corrected', 'fully-corrected'], [line.split(',')[0] for line in lines[1:]])

    def test_when_sweeping_it_prints_one_row_per_point_and_variant(self):
        # act
        exit_code, lines = _run('sweep', *S1_FLAGS, '--param', 'tw', '--from', '0', '--to', '0.2', '--steps', '3')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertEqual(','.join(constants.SWEEP_CSV_HEADER), lines[0])
        self.assertEqual(13, len(lines))
        self.assertIn('tw,0.1,fully-corrected,0.46,0.4,0.4,0.2,wait-at-stop-1', lines)

    def test_when_sweeping_twice_the_output_is_identical(self):
        # act
        first = _run('sweep', *S1_FLAGS, '--param', 'vb', '--from', '5', '--to', '40', '--steps', '8')
        second = _run('sweep', *S1_FLAGS, '--param', 'vb', '--from', '5', '--to', '40', '--steps', '8')

        # assert
        self.assertEqual(constants.EXIT_OK, first[0])
        self.assertEqual(first, second)

    def test_when_sweeping_into_a_file_the_rows_go_to_the_file(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            # arrange
            out_path = os.path.join(tmp_dir, 'sweep.csv')

            # act
            exit_code, lines = _run('sweep', *S1_FLAGS, '--param', 'd2', '--from', '0', '--to', '1',
                                    '--steps', '5', '--out', out_path)

            # assert
            self.assertEqual(constants.EXIT_OK, exit_code)
            with open(out_path, encoding='utf-8') as out_file:
                written = out_file.read().splitlines()
            self.assertEqual(','.join(constants.SWEEP_CSV_HEADER), written[0])
            self.assertEqual(21, len(written))
            self.assertEqual('wrote 20 rows to {}'.format(out_path), lines[-1])

    def test_when_the_gap_crosses_zero_it_prints_the_indifference_point(self):
        # act
        exit_code, lines = _run('breakeven', '--d', '1.4', '--d2', '0.2', '--vw', '4', '--vb', '20',
                                '--tw', '0.1', '--tb', '0.25')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        root_line = [line for line in lines if line.startswith('indifference point tw = ')][0]
        self.assertAlmostEqual(0.02, float(root_line.split('=')[1]), delta=1e-8)

    def test_when_waiting_at_stop2_always_wins_it_names_the_dominant_strategy(self):
        # act
        exit_code, lines = _run('breakeven', *S1_FLAGS)

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertIn('no indifference point: walk-then-wait dominates on [0, 0.25]', lines)

    def test_when_walking_on_always_wins_it_names_the_dominant_strategy(self):
        # act
        exit_code, lines = _run('breakeven', '--d', '2', '--d2', '1.9', '--vw', '4', '--vb', '4.5',
                                '--tw', '0.1', '--tb', '0.25', '--csv')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertEqual('solve_for,root,gap_lo,gap_hi,dominant', lines[0])
        self.assertTrue(lines[1].endswith(',walk-all'))

    def test_when_the_bracket_is_empty_it_exits_with_invalid_input(self):
        self.assertEqual(constants.EXIT_INVALID, _run('breakeven', *S1_FLAGS, '--lo', '0', '--hi', '0')[0])

    def test_when_checking_the_residual_it_prints_every_estimate(self):
        # act
        exit_code, lines = _run('residual', *S1_FLAGS, '--trials', '20000')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertIn('closed_form                     0.0625', lines)
        self.assertIn('reference_extra_wait            0.275', lines)

    def test_when_the_residual_assumption_fails_it_exits_with_code_2(self):
        # act
        exit_code, lines = _run('residual', '--d', '2', '--d2', '1.2', '--vw', '4', '--vb', '20', '--tw', '0.1',
                                '--tb', '0.25', '--trials', '1000')

        # assert
        self.assertEqual(constants.EXIT_ASSUMPTION, exit_code)
        self.assertEqual([], lines)

    def test_when_simulating_walk_all_the_statistics_are_exact(self):
        # act
        exit_code, lines = _run('simulate', *S1_FLAGS, '--strategy', 'walk-all', '--trials', '1000', '--csv')

        # assert
        self.assertEqual(constants.EXIT_OK, exit_code)
        self.assertEqual(','.join(constants.SIMSTATS_CSV_HEADER), lines[0])
        self.assertEqual('walk-all,1000,0.5,0,0,0,1', lines[1])

    def test_when_simulating_twice_with_a_seed_the_output_is_identical(self):
        # act
        first = _run('simulate', *S1_FLAGS, '--trials', '5000', '--seed', '3')
        second = _run('simulate', *S1_FLAGS, '--trials', '5000', '--seed', '3')

        # assert
        self.assertEqual(first, second)

    def test_when_a_report_file_is_given_it_receives_the_same_lines(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            # arrange
            report_path = os.path.join(tmp_dir, 'reports', 'eval.txt')

            # act
            exit_code, lines = _run('eval', *S1_FLAGS, '--report', report_path)

            # assert
            self.assertEqual(constants.EXIT_OK, exit_code)
            with open(report_path, encoding='utf-8') as report_file:
                self.assertEqual(lines, report_file.read().splitlines())

    def test_when_the_config_file_is_missing_it_exits_with_a_file_error(self):
        # act
        exit_code, _ = _run('eval', '--config', '/nonexistent/walkwait/s1.json')

        # assert
        self.assertEqual(constants.EXIT_IO, exit_code)

    def test_when_reading_a_config_file_flags_override_it(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            # arrange
            config_path = os.path.join(tmp_dir, 's1.json')
            with open(config_path, 'w', encoding='utf-8') as config_file:
                config_file.write('{"d": 2, "d2": 0.5, "vw": 4, "vb": 20, "tw": 0.3, "tb": 0.25}')

            # act
            exit_code, lines = _run('eval', '--config', config_path, '--tw', '0.2', '--csv')

            # assert
            self.assertEqual(constants.EXIT_OK, exit_code)
            self.assertEqual('0.445', lines[1].split(',')[4])


if __name__ == '__main__':
    unittest.main()
