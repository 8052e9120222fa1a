# -*- coding: utf-8 -*-
#
# Walk or Wait: text, number and table rendering.
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
import logging
import typing

from walkwait.constants import NUMBER_FORMAT

logger = logging.getLogger(__name__)


# -------------------------------------------------------------------------------------------------
# Numbers
# -------------------------------------------------------------------------------------------------
# Every number leaving the program goes through here so output can be compared by text diff.
# 12 significant digits, '.' separator, no locale. Integers and booleans are printed as is.
#
def format_number(value) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    formatted = format(float(value), NUMBER_FORMAT)
    # Avoid '-0' in tables
    if formatted == '-0':
        formatted = '0'
    return formatted


def format_row(values: typing.Iterable) -> typing.List[str]:
    return [v if isinstance(v, str) else format_number(v) for v in values]


# -------------------------------------------------------------------------------------------------
# Tables & CSV
# -------------------------------------------------------------------------------------------------
# Renders a list of list of strings table into a CSV list of strings.
# Row 0 holds the column alignment and is skipped, row 1 is the CSV header.
# The list of strings must be joined with '\n'.join()
#
def render_table_CSV_slist(table_str: list) -> typing.List[str]:
    rows = len(table_str)
    table_str_list = []
    for i in range(1, rows):
        table_str_list.append(','.join('{}'.format(cell) for cell in table_str[i]))

    return table_str_list


#
# First row            column aligment 'right' or 'left'
# Second row           column titles
# Third and next rows  table data
#
# Returns a list of strings that must be joined with '\n'.join()
#
def render_table_str(table_str: list) -> typing.List[str]:
    rows = len(table_str)
    cols = len(table_str[0])
    table_str_list = []
    col_sizes = get_table_str_col_sizes(table_str, rows, cols)
    col_padding = table_str[0]

    # --- Table header ---
    header = [print_padded_left(table_str[1][j], col_sizes[j]) for j in range(cols)]
    table_str_list.append('  '.join(header).rstrip())
    total_size = sum(col_sizes) + 2 * (cols - 1)
    table_str_list.append('-' * total_size)

    # --- Data rows ---
    for i in range(2, rows):
        cells = []
        for j in range(cols):
            if col_padding[j] == 'right':
                cells.append(print_padded_right(table_str[i][j], col_sizes[j]))
            else:
                cells.append(print_padded_left(table_str[i][j], col_sizes[j]))
        table_str_list.append('  '.join(cells).rstrip())

    return table_str_list


#
# Two column 'key  value' listing used for breakdowns and statistics.
#
def render_key_value_slist(pairs: typing.List[typing.Tuple[str, typing.Any]]) -> typing.List[str]:
    if not pairs:
        return []
    key_size = max(len(k) for k, _ in pairs)
    slist = []
    for key, value in pairs:
        value_str = value if isinstance(value, str) else format_number(value)
        slist.append('{}  {}'.format(print_padded_left(key, key_size), value_str))
    return slist


def print_padded_left(str, str_max_size):
    formatted_str = '{0}'.format(str)
    padded_str = formatted_str + ' ' * (str_max_size - len(formatted_str))

    return padded_str


def print_padded_right(str, str_max_size):
    formatted_str = '{0}'.format(str)
    padded_str = ' ' * (str_max_size - len(formatted_str)) + formatted_str

    return padded_str


# Row 0 (alignment) is ignored when computing sizes.
def get_table_str_col_sizes(table_str, rows, cols):
    col_sizes = [0] * cols
    for j in range(cols):
        col_max_size = 0
        for i in range(1, rows):
            str_size = len('{0}'.format(table_str[i][j]))
            if str_size > col_max_size:
                col_max_size = str_size
        col_sizes[j] = col_max_size

    return col_sizes
