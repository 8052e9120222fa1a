# -*- coding: utf-8 -*-
#
# Walk or Wait: command line interface
#
# walkwait <command> [scenario flags]
#   eval       evaluate one formula variant
#   compare    all variants against the Monte Carlo estimate
#   sweep      CSV table over a parameter grid
#   breakeven  solve the indifference equation in tw or d2
#   residual   residual waiting term and its renewal simulation
#   simulate   Monte Carlo statistics for one strategy
#
# Exit codes: 0 success, 1 invalid input, 2 assumption violated, 3 oracle disagreement,
# 4 file error.
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

import argparse
import logging
import sys
import typing

# --- Walk or Wait modules ---
from walkwait import __version__
from walkwait import config as config_module
from walkwait import constants
from walkwait import engine
from walkwait import numerics
from walkwait import settings
from walkwait import simulation
from walkwait.config import ScenarioConfig, SweepSpec
from walkwait.engine import FormulaVariant
from walkwait.model import EvalBreakdown, StrategyKind
from walkwait.report import ConsoleReporter, FileReporter, Reporter
from walkwait.utils import clilogging
from walkwait.utils import io
from walkwait.utils import text
from walkwait.utils.text import format_number

logger = logging.getLogger(__name__)

SCENARIO_FLAGS = ['d', 'd2', 'vw', 'vb', 'tw', 'tb']


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors become ParseError so they map to exit code 1 like any bad input."""

    def error(self, message):
        raise constants.ParseError('{}: {}'.format(self.prog, message))


# -------------------------------------------------------------------------------------------------
# Rendering helpers
# -------------------------------------------------------------------------------------------------
def _breakdown_pairs(breakdown: EvalBreakdown) -> typing.List[typing.Tuple[str, typing.Any]]:
    pairs = [
        ('variant', breakdown.label),
        ('pre_walk', breakdown.pre_walk),
        ('board_term', breakdown.board_term),
        ('fallback_term', breakdown.fallback_term),
        ('total', breakdown.total),
        ('p_board', breakdown.p_board),
        ('p_missed_early', breakdown.p_missed_early),
        ('p_no_bus', breakdown.p_no_bus),
    ]
    if breakdown.rhs is not None:
        pairs.append(('rhs', breakdown.rhs))
    if breakdown.flags:
        pairs.append(('flags', ','.join(breakdown.flags)))
    return pairs


def _breakdown_row(breakdown: EvalBreakdown) -> typing.List[str]:
    return [breakdown.label] + text.format_row([
        breakdown.pre_walk, breakdown.board_term, breakdown.fallback_term, breakdown.total,
        breakdown.p_board, breakdown.p_missed_early, breakdown.p_no_bus])


def _write_csv(reporter: Reporter, header: typing.List[str], rows: typing.List[typing.List[str]]):
    reporter.write_lines(text.render_table_CSV_slist([header, header] + rows))


def _echo(reporter: Reporter, config: ScenarioConfig):
    reporter.write('# config: {}'.format(config.echo_str()))


# -------------------------------------------------------------------------------------------------
# Commands
# -------------------------------------------------------------------------------------------------
def cmd_eval(config: ScenarioConfig, variant: FormulaVariant, reporter: Reporter, csv: bool = False) -> int:
    breakdown = engine.evaluate(config.scenario, config.dist, variant)
    if csv:
        _write_csv(reporter, constants.BREAKDOWN_CSV_HEADER, [_breakdown_row(breakdown)])
        return constants.EXIT_OK

    _echo(reporter, config)
    reporter.write_lines(text.render_key_value_slist(_breakdown_pairs(breakdown)))
    return constants.EXIT_OK


def cmd_compare(config: ScenarioConfig, reporter: Reporter, csv: bool = False,
                gate: FormulaVariant = FormulaVariant.FULLY_CORRECTED) -> int:
    s = config.scenario
    mc = simulation.run_mc(s, StrategyKind.WALK_THEN_WAIT, config.dist, config.trials, config.seed)

    header = ['variant', 'total', 'mc_mean', 'mc_stderr', 'z']
    rows = []
    gate_z = None
    for variant in FormulaVariant:
        try:
            breakdown = engine.evaluate(s, config.dist, variant)
        except constants.VariantRequiresUniform:
            if variant == gate:
                raise
            logger.warning('Variant {} skipped: needs uniform(0, t_b) arrivals'.format(variant.value))
            continue
        total = breakdown.total
        z = simulation.z_score(total, mc)
        if variant == gate:
            gate_z = z
        rows.append([variant.value] + text.format_row([total, mc.mean, mc.stderr, z]))

    if csv:
        _write_csv(reporter, header, rows)
    else:
        _echo(reporter, config)
        alignment = ['left'] + ['right'] * (len(header) - 1)
        reporter.write_lines(text.render_table_str([alignment, header] + rows))
        reporter.write('gate {} |z| = {} (limit {})'.format(
            gate.value, format_number(abs(gate_z)), format_number(constants.ORACLE_Z_LIMIT)))

    if abs(gate_z) > constants.ORACLE_Z_LIMIT:
        logger.error('Variant {} disagrees with Monte Carlo: z = {}'.format(gate.value, format_number(gate_z)))
        return constants.EXIT_ORACLE_DISAGREEMENT
    return constants.EXIT_OK


def sweep_rows(config: ScenarioConfig, sweep: SweepSpec) -> typing.List[typing.List[str]]:
    rows = []
    for value in sweep.grid():
        value = float(value)
        try:
            s, dist = sweep.apply(config, value)
            recommended = engine.decide(s, dist).recommended
        except constants.WalkWaitError as ex:
            logger.warning('Skipping {} = {}: {}'.format(sweep.param, format_number(value), ex))
            continue

        for variant in FormulaVariant:
            try:
                breakdown = engine.evaluate(s, dist, variant)
            except constants.VariantRequiresUniform:
                logger.debug('sweep_rows() No {} row for {}'.format(variant.value, dist))
                continue
            rows.append([sweep.param, format_number(value), variant.value] + text.format_row([
                breakdown.total, breakdown.p_board, breakdown.p_missed_early, breakdown.p_no_bus
            ]) + [recommended.value])
    return rows


def cmd_sweep(config: ScenarioConfig, sweep: SweepSpec, reporter: Reporter,
              out_file: io.FileName = None) -> int:
    rows = sweep_rows(config, sweep)
    lines = text.render_table_CSV_slist([constants.SWEEP_CSV_HEADER, constants.SWEEP_CSV_HEADER] + rows)
    if out_file is None:
        reporter.write_lines(lines)
        return constants.EXIT_OK

    out_file.saveStrToFile('\n'.join(lines) + '\n')
    _echo(reporter, config)
    reporter.write('wrote {} rows to {}'.format(len(rows), out_file.getPath()))
    return constants.EXIT_OK


def cmd_breakeven(config: ScenarioConfig, solve_for: str, bracket: typing.Tuple[float, float],
                  reporter: Reporter, csv: bool = False) -> int:
    s = config.scenario
    lo, hi = bracket
    gap = lambda x: engine.indifference_gap(s, config.dist, solve_for, x)  # noqa: E731

    root = None
    try:
        root = engine.breakeven(s, config.dist, bracket, solve_for)
    except constants.NoSignChange as ex:
        # Both ends on the same side. A sign scan may still find an interior crossing.
        brackets = numerics.scan_brackets(gap, ex.lo, ex.hi)
        if brackets:
            logger.info('Sign scan found {} bracket(s), solving in the first'.format(len(brackets)))
            root = numerics.find_root(gap, brackets[0][0], brackets[0][1])
        else:
            dominant = StrategyKind.WALK_THEN_WAIT if ex.f_hi < 0 else StrategyKind.WALK_ALL
            if csv:
                _write_csv(reporter, ['solve_for', 'root', 'gap_lo', 'gap_hi', 'dominant'], [
                    [solve_for, ''] + text.format_row([ex.f_lo, ex.f_hi]) + [dominant.value]])
            else:
                _echo(reporter, config)
                reporter.write('no indifference point: {} dominates on [{}, {}]'.format(
                    dominant.value, format_number(lo), format_number(hi)))
                reporter.write('gap at {} = {} ({})'.format(
                    format_number(ex.lo), format_number(ex.f_lo), '-' if ex.f_lo < 0 else '+'))
                reporter.write('gap at {} = {} ({})'.format(
                    format_number(ex.hi), format_number(ex.f_hi), '-' if ex.f_hi < 0 else '+'))
            return constants.EXIT_OK

    residual = gap(root)
    if csv:
        _write_csv(reporter, ['solve_for', 'root', 'gap_at_root'],
                   [[solve_for] + text.format_row([root, residual])])
    else:
        _echo(reporter, config)
        reporter.write('indifference point {} = {}'.format(solve_for, format_number(root)))
        reporter.write('gap at root = {}'.format(format_number(residual)))
    return constants.EXIT_OK


def cmd_residual(config: ScenarioConfig, reporter: Reporter, csv: bool = False) -> int:
    s = config.scenario
    if config.tb is None:
        raise constants.ValidationError(['MissingField:tb'])
    t_b = config.tb

    quadrature = engine.residual_uniform(s, t_b)
    closed_form = engine.residual_closed_form(s, t_b)
    reference_p, reference_wait = engine.renewal_reference(s, t_b)
    renewal = simulation.run_renewal(s, t_b, config.trials, config.seed)
    extra = renewal.extra_wait

    if csv:
        header = ['quadrature', 'closed_form', 'overtake_frequency', 'extra_wait_mean',
                  'extra_wait_stderr', 'reference_overtake_probability', 'reference_extra_wait']
        _write_csv(reporter, header, [text.format_row([
            quadrature, closed_form, renewal.overtake_frequency,
            extra.mean if extra else None, extra.stderr if extra else None,
            reference_p, reference_wait])])
        return constants.EXIT_OK

    _echo(reporter, config)
    pairs = [
        ('assumption', 'd2/vw = {} < t_b = {}'.format(format_number(s.d2 / s.vw), format_number(t_b))),
        ('quadrature', quadrature),
        ('closed_form', closed_form),
        ('renewal_trials', renewal.trials),
        ('overtake_frequency', renewal.overtake_frequency),
        ('extra_wait', 'empty' if extra is None else '{} +- {}'.format(
            format_number(extra.mean), format_number(extra.stderr))),
        ('reference_overtake_probability', reference_p),
        ('reference_extra_wait', reference_wait),
    ]
    reporter.write_lines(text.render_key_value_slist(pairs))
    return constants.EXIT_OK


def cmd_simulate(config: ScenarioConfig, strategy: StrategyKind, reporter: Reporter, csv: bool = False) -> int:
    stats = simulation.run_mc(config.scenario, strategy, config.dist, config.trials, config.seed)
    values = [stats.trials, stats.mean, stats.stderr, stats.freq_board, stats.freq_missed_early, stats.freq_no_bus]
    if csv:
        _write_csv(reporter, constants.SIMSTATS_CSV_HEADER, [[strategy.value] + text.format_row(values)])
        return constants.EXIT_OK

    _echo(reporter, config)
    reporter.write_lines(text.render_key_value_slist(
        list(zip(constants.SIMSTATS_CSV_HEADER, [strategy.value] + values))))
    return constants.EXIT_OK


# -------------------------------------------------------------------------------------------------
# Argument parsing
# -------------------------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('--config', help='flat JSON scenario file')
    for key in SCENARIO_FLAGS:
        common.add_argument('--{}'.format(key), type=float)
    common.add_argument('--dist', help='uniform:<a>,<b> or exp:<rate>')
    common.add_argument('--trials', type=int)
    common.add_argument('--seed', type=int)
    common.add_argument('--csv', action='store_true', help='emit CSV instead of a table')
    common.add_argument('--report', help='also write the output to this file')
    common.add_argument('--log-level', type=int, choices=range(constants.LOG_ERROR, constants.LOG_DEBUG + 1))

    parser = _ArgumentParser(prog='walkwait', description='Walk or wait for the bus: expected travel times.')
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    variants = [v.value for v in FormulaVariant]
    cmd = commands.add_parser('eval', parents=[common], help='evaluate one formula variant')
    cmd.add_argument('--variant', choices=variants, default=FormulaVariant.FULLY_CORRECTED.value)

    cmd = commands.add_parser('compare', parents=[common], help='compare every variant with Monte Carlo')
    cmd.add_argument('--gate', choices=variants, default=FormulaVariant.FULLY_CORRECTED.value,
                     help='variant whose z-score sets the exit code')

    cmd = commands.add_parser('sweep', parents=[common], help='CSV table over a parameter grid')
    cmd.add_argument('--param', required=True, choices=constants.SWEEP_PARAMETERS)
    cmd.add_argument('--from', dest='start', type=float, required=True)
    cmd.add_argument('--to', dest='stop', type=float, required=True)
    cmd.add_argument('--steps', type=int, required=True)
    cmd.add_argument('--out', help='CSV file, stdout when missing')

    cmd = commands.add_parser('breakeven', parents=[common], help='solve the indifference equation')
    cmd.add_argument('--solve-for', choices=engine.SOLVE_FOR_PARAMETERS, default=engine.SOLVE_FOR_TW)
    cmd.add_argument('--lo', type=float)
    cmd.add_argument('--hi', type=float)

    commands.add_parser('residual', parents=[common], help='residual waiting term diagnostics')

    cmd = commands.add_parser('simulate', parents=[common], help='Monte Carlo statistics for one strategy')
    cmd.add_argument('--strategy', choices=[k.value for k in StrategyKind],
                     default=StrategyKind.WALK_THEN_WAIT.value)

    return parser


def _default_bracket(args, config: ScenarioConfig) -> typing.Tuple[float, float]:
    if args.solve_for == engine.SOLVE_FOR_D2:
        lo, hi = 0.0, config.scenario.d
    else:
        lo, hi = 0.0, config.tb if config.tb is not None else config.dist.upper_bound()
    return (args.lo if args.lo is not None else lo, args.hi if args.hi is not None else hi)


def run(args, reporter: Reporter) -> int:
    overrides = {key: getattr(args, key) for key in SCENARIO_FLAGS + ['dist', 'trials', 'seed']}
    config = config_module.parse_config(args.config, overrides)
    logger.debug('run() Command {} with {}'.format(args.command, config.echo_str()))

    if args.command == 'eval':
        return cmd_eval(config, FormulaVariant.from_name(args.variant), reporter, args.csv)
    if args.command == 'compare':
        return cmd_compare(config, reporter, args.csv, FormulaVariant.from_name(args.gate))
    if args.command == 'sweep':
        sweep = SweepSpec(args.param, args.start, args.stop, args.steps)
        out_file = io.FileName(args.out) if args.out else None
        return cmd_sweep(config, sweep, reporter, out_file)
    if args.command == 'breakeven':
        return cmd_breakeven(config, args.solve_for, _default_bracket(args, config), reporter, args.csv)
    if args.command == 'residual':
        return cmd_residual(config, reporter, args.csv)
    return cmd_simulate(config, StrategyKind.from_name(args.strategy), reporter, args.csv)


def main(argv: typing.List[str] = None, out: typing.TextIO = None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.log_level is not None:
            settings.setSetting('log_level', args.log_level)
        clilogging.config()

        file_reporter = FileReporter(io.FileName(args.report)) if args.report else None
        reporter = ConsoleReporter(out, file_reporter)
        reporter.open()
        try:
            return run(args, reporter)
        finally:
            reporter.close()
    except constants.WalkWaitError as ex:
        logger.error('{0}'.format(ex))
        return ex.exit_code


if __name__ == '__main__':
    sys.exit(main())
