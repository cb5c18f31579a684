import csv
from itertools import count, groupby
import os

from . import constants
from .errors import ConfigError

def ensure_temporank_folder_exists():
    os.makedirs(constants.temporank_folder, exist_ok=True)

def cpu_count():
    # os.sched_getaffinity(0) is the set of cores this process may run on;
    # fall back to the machine count where it doesn't exist
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count()

def n_workers(requested, n_tasks):
    if requested is None or requested == 0:
        return 1
    if requested < 0:
        requested = cpu_count()
    return max(1, min(requested, n_tasks))

def normalize_name(name):
    return ' '.join(name.split()).casefold()

def format_number(value, decimals=6):
    if abs(value) < 0.5 * 10 ** -decimals:
        value = 0.0 # no '-0.000000'
    return '{:.{}f}'.format(value, decimals)

def load_index(index_name:str = constants.run_index):
    with open(index_name, 'r', newline='') as index_file:
        csv_reader = csv.reader(index_file, delimiter=',', quotechar='|')
        index = {entry[0]: entry[1:] for entry in csv_reader}
    return index

def get_next_index_id(index_name:str = constants.run_index):
    try:
        ids = load_index(index_name).keys()
    except IOError:
        ids = []
    try:
        next_id = max(map(int,ids)) + 1
    except ValueError:
        next_id = 0
    return next_id

def update_index(entries, index_name:str, append=True):
    mode = 'w+' if not append else 'a+'
    with open(index_name, mode, newline='') as index_file:
        csv_writer = csv.writer(index_file, delimiter=',', quotechar='|')
        csv_writer.writerows(entries)

def condense_rounds(round_list):
    """Inverse of expand_rounds: [1,2,3,5,7,8] -> '1-3,5,7-8'"""
    G = (list(x) for _, x in groupby(round_list, lambda x, c=count(): next(c) - x))
    return ",".join("-".join(map(str, (g[0], g[-1])[:len(g)])) for g in G)

def expand_rounds(roundlist, last=None):
    """Expand a round selection such as '1-10,15,20-38:2' into a sorted list.

    An open range '10-' runs until `last`.
    """
    try:
        rounds = sorted({i for r in _generate_round_ranges(roundlist, last) for i in r})
    except ValueError:
        raise ConfigError('Invalid round selection: {}'.format(roundlist))
    if any(r < 0 for r in rounds):
        raise ConfigError('Rounds must be nonnegative: {}'.format(roundlist))
    return rounds

def _generate_round_ranges(roundlist, last):
    round_blocks = roundlist.split(',')
    for round_block in round_blocks:
        if ':' in round_block:
            round_block, step = round_block.split(':')
            step = int(step)
        else:
            step = 1
        if '-' in round_block:
            first, final = round_block.split('-')
            first = int(first)
            if final == '':
                if last is None:
                    raise ValueError('open range without a final round')
                final = last
            final = int(final)
        else:
            first = int(round_block)
            final = first
        yield range(first, final + 1, step)
