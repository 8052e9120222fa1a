#!/usr/bin/python
# -*- coding: utf-8 -*-

# Prints the reference values the tests pin, recomputed with the current engine.
# Run after touching the engine and compare with tests/engine_test.py.

# --- Python standard library ---
import logging

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait import distributions
from walkwait import engine
from walkwait import model
from walkwait.engine import FormulaVariant
from walkwait.utils import text

logger = logging.getLogger(__name__)
logging.basicConfig(format='%(asctime)s %(module)s %(levelname)s: %(message)s',
                    datefmt='%m/%d/%Y %I:%M:%S %p', level=logging.INFO)

# --- configuration ------------------------------------------------------------------------------
SCENARIOS = [
    ('s1', dict(d=2.0, d2=0.5, vw=4.0, vb=20.0, tw=0.1), distributions.uniform(0.0, 0.25)),
    ('s2', dict(d=2.0, d2=0.5, vw=4.0, vb=20.0, tw=0.2), distributions.uniform(0.0, 0.25)),
    ('s1-exp', dict(d=2.0, d2=0.5, vw=4.0, vb=20.0, tw=0.1), distributions.exponential(4.0)),
]

# --- main ---------------------------------------------------------------------------------------
table = [['left', 'left', 'right'], ['scenario', 'value', 'result']]
for name, fields, dist in SCENARIOS:
    scenario = model.validate(**fields)
    for variant in FormulaVariant:
        try:
            breakdown = engine.evaluate(scenario, dist, variant)
        except constants.VariantRequiresUniform:
            continue
        table.append([name, variant.value, text.format_number(breakdown.total)])
    table.append([name, 'wait-at-stop-1', text.format_number(engine.wait_at_stop1(scenario, dist).total)])
    table.append([name, 'recommended', engine.decide(scenario, dist).recommended.value])

    t_b = distributions.headway(dist)
    if t_b is not None and scenario.d2 / scenario.vw < t_b:
        table.append([name, 'residual', text.format_number(engine.residual_closed_form(scenario, t_b))])

print('\n'.join(text.render_table_str(table)))
