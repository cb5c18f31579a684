import configparser
import sys
from warnings import warn

from . import constants
from .commands import subcommands
from .config import get_active_config
from .errors import TemporankError
from .frontend import parse_args
from .history import add_run_entry

UNRECORDED = ('history', 'config', 'help')

def report_error(message):
    print('temporank: error: {}'.format(message), file=sys.stderr)

def run(argv=None):
    """Run one command line (without the program name) and return its exit status"""
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parse_args(argv)
    try:
        settings = get_active_config()
    except configparser.Error as err:
        report_error('cannot read config: {}'.format(str(err).splitlines()[0]))
        return constants.EXIT_USAGE

    try:
        status = subcommands[args.subcommand](args, settings)
    except TemporankError as err:
        report_error(err)
        status = err.exit_code
    except OSError as err:
        report_error(err)
        status = constants.EXIT_IO

    try:
        record = settings['DEFAULT'].getboolean('record_history', True)
    except ValueError:
        warn(RuntimeWarning('Invalid record_history setting; recording the run'))
        record = True
    if record and args.subcommand not in UNRECORDED:
        try:
            add_run_entry(argv, args.subcommand, getattr(args, 'method', None), status)
        except OSError as err:
            warn(RuntimeWarning('Unable to record run: {}'.format(err)))
    return status

def main():
    sys.exit(run())
