#!/usr/bin/python
# -*- coding: utf-8 -*-

# Prints the indifference gap of a scenario over a tw grid, one row per grid point.
# A change of sign between two rows brackets an indifference point.
#
# usage: python tools/sign_scan.py d d2 vw vb t_b [points]

# --- Python standard library ---
import logging
import sys

# --- Third party ---
import numpy as np

# --- Walk or Wait modules ---
from walkwait import constants
from walkwait import distributions
from walkwait import engine
from walkwait import model
from walkwait.utils import text

logger = logging.getLogger(__name__)
logging.basicConfig(format='%(asctime)s %(module)s %(levelname)s: %(message)s',
                    datefmt='%m/%d/%Y %I:%M:%S %p', level=logging.INFO)

# --- main ----------------------------------------------------------------------------------------
if len(sys.argv) < 6:
    print('Arguments must be d d2 vw vb t_b [points].')
    sys.exit(1)

d, d2, vw, vb, t_b = [float(arg) for arg in sys.argv[1:6]]
points = int(sys.argv[6]) if len(sys.argv) > 6 else 21
try:
    scenario = model.validate(d, d2, vw, vb, 0.0)
    dist = distributions.uniform(0.0, t_b)
except constants.WalkWaitError as ex:
    logger.error('{0}'.format(ex))
    sys.exit(ex.exit_code)

table = [['right', 'right', 'left'], ['tw', 'gap', 'sign']]
for tw in np.linspace(0.0, t_b, points):
    gap = engine.indifference_gap(scenario, dist, engine.SOLVE_FOR_TW, float(tw))
    sign = '0' if gap == 0.0 else ('-' if gap < 0 else '+')
    table.append(text.format_row([float(tw), gap]) + [sign])

print('\n'.join(text.render_table_str(table)))
