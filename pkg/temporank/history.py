from collections import namedtuple
from datetime import datetime
from shutil import get_terminal_size
from textwrap import TextWrapper

from tabulate import tabulate

from .constants import run_index
from .utils import ensure_temporank_folder_exists, load_index, update_index, get_next_index_id

RunEntry = namedtuple('RunEntry',
                      ['id', 'date', 'time', 'subcommand', 'method', 'status', 'args'])

def quoted(string):
    if ' ' in string:
        if '"' not in string:
            return '"' + string + '"'
        if "'" not in string:
            return "'" + string + "'"
        return '"' + string.replace('"', '\\\"') + '"'
    return string

def add_run_entry(argv, subcommand, method, status, index=run_index):
    """Append one run to the ledger; argv excludes the program name"""
    ensure_temporank_folder_exists()
    now = datetime.now()
    entry = RunEntry(
        id=get_next_index_id(index),
        date=now.strftime('%Y.%m.%d'),
        time=now.strftime('%H:%M:%S.%f'),
        subcommand=subcommand,
        method=method or '',
        status=str(status),
        args=' '.join(quoted(arg) for arg in argv),
    )
    update_index([get_run_tuple(entry)], index, append=True)
    return entry

def get_run_tuple(entry: RunEntry) -> tuple:
    return (str(entry.id), entry.date, entry.time, entry.subcommand, entry.method,
            entry.status, entry.args)

def get_history(index=run_index):
    try:
        ledger = load_index(index)
    except IOError:
        return []
    return [RunEntry(run_id, *details) for run_id, details in ledger.items()]

def check_details_match(entry, args):
    if args.details is None:
        return True
    return int(entry.id) == int(args.details)

def check_datetime_matches(entry, args):
    if args.since is None:
        return True
    date_str, time_str, *_ = args.since + ['00:00:00'] # midnight if no time given
    format_str = '%Y.%m.%d %H:%M:%S'
    since_datetime = datetime.strptime(date_str + ' ' + time_str, format_str)
    entry_datetime = datetime.strptime(entry.date + ' ' + entry.time, format_str + '.%f')
    return entry_datetime > since_datetime

def should_print(entry, args):
    matches_subcommand = args.subcommand_filter is None or entry.subcommand == args.subcommand_filter
    failed_only = args.failed and entry.status == '0'
    return (check_details_match(entry, args) and check_datetime_matches(entry, args)
            and matches_subcommand and not failed_only)

def make_printable(entry, skip_cmd=False, wrap_cmd=False, cmd_width=None):
    result = [str(entry.id), entry.date, entry.time[:-3], entry.subcommand, entry.method,
              entry.status]
    if not skip_cmd:
        if wrap_cmd:
            cmd_str = '\n'.join(TextWrapper(cmd_width).wrap(entry.args))
        else:
            cmd_str = entry.args
            if cmd_width is not None and len(entry.args) > cmd_width:
                cmd_str = cmd_str[:cmd_width - 5] + '[...]'
        result.append(cmd_str)
    return tuple(result)

def compute_command_width(entries, fields, width=None):
    full_table_str = tabulate([make_printable(entry) for entry in entries], headers=fields)
    full_width = len(full_table_str.split('\n')[1])
    full_command_width = max([0] + [len(entry.args) for entry in entries])
    min_width = full_width - full_command_width + len('args__')
    terminal_width = width or get_terminal_size()[0]
    if not entries or min_width > terminal_width:
        return len('args__')
    if full_width > terminal_width:
        return full_command_width - (full_width - terminal_width)
    return full_command_width

def print_history(args, index=run_index):
    """Prints the temporank run ledger"""
    entries = get_history(index)
    if args.details == '-1' and entries:
        args.details = entries[-1].id

    N = args.n or len(entries)
    filtered = [entry for entry in entries[-N:] if should_print(entry, args)] if N else []

    show_details = args.details is not None
    if show_details and len(filtered) > 1:
        print('Cannot show details for multiple entries:')
        print()
        show_details = False

    fields = [f for f in RunEntry._fields if not (show_details and f == 'args')]
    cmd_width = compute_command_width(filtered, fields, args.width)
    print(tabulate([make_printable(entry, skip_cmd=show_details, wrap_cmd=args.full,
                                   cmd_width=cmd_width) for entry in filtered],
                   headers=fields))

    if show_details and filtered:
        entry = filtered[0]
        print()
        print('temporank ' + entry.args)
