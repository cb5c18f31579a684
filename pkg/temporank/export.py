"""Artifact writers: CSV for plot data and goldens, JSON for machines, tables for people"""
from contextlib import contextmanager
import csv
import io
import json
import math
import os
import sys

import numpy as np
from tabulate import tabulate

from .utils import format_number

FORMATS = ('csv', 'json', 'table')

def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (float, np.floating)):
        return format_number(float(value))
    if value is None:
        return ''
    return str(value)

def format_csv_rows(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()

def plain(value):
    """Convert numpy values and namedtuples into JSON-ready builtins"""
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if hasattr(value, '_asdict'):
        return plain(value._asdict())
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value

def format_json(document):
    return json.dumps(plain(document), indent=2) + '\n'

def format_table(header, rows):
    return tabulate([[_cell(value) for value in row] for row in rows], headers=header) + '\n'

def render(header, rows, fmt='csv', document=None):
    """Render one artifact; JSON uses `document` when given, else a list of row objects"""
    if fmt == 'csv':
        return format_csv_rows(header, rows)
    if fmt == 'table':
        return format_table(header, rows)
    if fmt == 'json':
        if document is None:
            document = [dict(zip(header, row)) for row in rows]
        return format_json(document)
    raise ValueError('Unknown output format: {}'.format(fmt))

def resolve_output_path(path, output_dir=None):
    if path is None or path == '-':
        return None
    if output_dir and not os.path.isabs(path):
        path = os.path.join(output_dir, path)
    return path

@contextmanager
def open_output(path, output_dir=None):
    path = resolve_output_path(path, output_dir)
    if path is None:
        yield sys.stdout
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', newline='') as stream:
        yield stream

def write(text, path=None, output_dir=None):
    with open_output(path, output_dir) as stream:
        stream.write(text)
