import argparse

from temporank import constants, methods
from temporank.export import FORMATS

SUBCOMMANDS = ['rate', 'trace', 'spectral', 'evaluate', 'calibrate', 'trajectory', 'simulate',
               'standings', 'validate', 'history', 'config', 'help']

def _add_input_args(parser):
    parser.add_argument('-i', '--input', type=str, required=True,
        help='Match log to read ("-" for stdin)')
    parser.add_argument('--input-format', choices=['canonical', 'fixtures'], default='canonical',
        help='canonical: round,date,home,away,home_goals,away_goals; '
             'fixtures: Date,HomeTeam,AwayTeam,FTHG,FTAG with inferred rounds')

def _add_output_args(parser, formats=FORMATS):
    parser.add_argument('-o', '--output', type=str, default=None,
        help='File to write to (default: stdout); relative paths resolve against '
             'the output directory (${})'.format(constants.output_dir_env))
    parser.add_argument('--format', choices=formats, default=None,
        help='Output format (default: from config, csv)')
    parser.add_argument('-q', '--quiet', action='store_true', help='Quiet output')

def _add_method_args(parser, choices=None, required=False, default=None):
    parser.add_argument('-m', '--method', choices=choices or methods.__all__,
        required=required, default=default, help='Rating method')
    constants_group = parser.add_argument_group('method constants',
        'Override the values from the config files')
    constants_group.add_argument('--alpha', type=float, default=None,
        help='cmassey: weight kept on the previous rating, in (0, 1)')
    constants_group.add_argument('--kappa', type=float, default=None,
        help='elo: update step')
    constants_group.add_argument('--zeta', type=float, default=None,
        help='elo: logistic scale')
    constants_group.add_argument('--elo-initial', type=float, default=None, dest='initial',
        help='elo: initial rating of every team')
    constants_group.add_argument('--no-update-hfa', action='store_false', default=None,
        dest='update_hfa', help='elo: leave the hfa out of the rating updates')
    constants_group.add_argument('--weights', choices=['uniform', 'linear', 'log'], default=None,
        help='wmassey: match weights by round')
    constants_group.add_argument('--margin-weight', type=float, default=None,
        help='colley/tcolley: weight on wins minus losses (0.5 is the original Colley form)')
    constants_group.add_argument('--rho-file', type=str, default=None,
        help='tmassey/cmassey: previous-season ratings (team,rating CSV) seeding r(0)')
    constants_group.add_argument('--rho-factor', type=float, default=None,
        help='tmassey/cmassey: scale applied to the previous-season ratings')

def _add_warmup_args(parser):
    parser.add_argument('--warmup', type=int, default=1,
        help='Rounds to rate before predicting; round t+1 is predicted from round t')
    parser.add_argument('-w', '--workers', type=int, default=None,
        help='Processes for the hfa grid search (-1: all available CPUs; default: from config)')

def parse_args(args=None):

    # yapf: disable
    parser = argparse.ArgumentParser(prog='temporank',
        description='Massey and temporalized Massey ratings for round-based seasons',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(required=True, dest='subcommand')


    rate_parser = subparsers.add_parser('rate',
        help='Rate teams (rating vector for static methods, round-by-round history otherwise)')
    _add_input_args(rate_parser)
    _add_method_args(rate_parser, required=True)
    rate_parser.add_argument('--upto', type=int, default=None,
        help='Last round to use (default: whole log)')
    _add_output_args(rate_parser)


    trace_parser = subparsers.add_parser('trace',
        help='Coefficients of one rating on the realized point spreads')
    _add_input_args(trace_parser)
    _add_method_args(trace_parser, choices=['tmassey', 'cmassey'], default='tmassey')
    trace_parser.add_argument('--team', type=str, required=True,
        help='Team whose rating to trace')
    trace_parser.add_argument('--upto', type=int, default=None,
        help='Round of the traced rating (default: last round)')
    _add_output_args(trace_parser, formats=['csv', 'json'])


    spectral_parser = subparsers.add_parser('spectral',
        help='Laplacian spectrum and the rating deviation bound of the static Massey system')
    _add_input_args(spectral_parser)
    spectral_parser.add_argument('--upto', type=int, default=None,
        help='Last round to use (default: whole log)')
    _add_output_args(spectral_parser)


    evaluate_parser = subparsers.add_parser('evaluate',
        help='Foresight prediction accuracy and ranking correlations')
    _add_input_args(evaluate_parser)
    _add_method_args(evaluate_parser, default='tmassey')
    evaluate_parser.add_argument('--report', default='accuracy',
        choices=['accuracy', 'histogram', 'correlation', 'summary', 'table'],
        help='What to report')
    evaluate_parser.add_argument('--all-methods', action='store_true',
        help='Accuracy without and with calibrated hfa for every method (implies --report table)')
    evaluate_parser.add_argument('--hfa', type=float, default=0.0,
        help='Home-field advantage added to the home rating when predicting')
    evaluate_parser.add_argument('--calibrate', action='store_true',
        help='Use the in-sample best hfa from the method grid instead of --hfa')
    evaluate_parser.add_argument('--compare', nargs='+', choices=methods.__all__,
        default=['tmassey', 'massey', 'official'],
        help='Methods whose rankings --report correlation compares')
    evaluate_parser.add_argument('--from-round', type=int, default=1,
        help='First round of the correlation series')
    _add_warmup_args(evaluate_parser)
    _add_output_args(evaluate_parser)


    calibrate_parser = subparsers.add_parser('calibrate',
        help='Grid search for the home-field advantage maximizing accuracy')
    _add_input_args(calibrate_parser)
    _add_method_args(calibrate_parser, default='tmassey')
    calibrate_parser.add_argument('--grid', type=float, nargs=3, default=None,
        metavar=('MIN', 'MAX', 'STEP'), help='hfa grid (default: the method family grid)')
    calibrate_parser.add_argument('--curve', action='store_true',
        help='Write the accuracy of every grid point')
    _add_warmup_args(calibrate_parser)
    _add_output_args(calibrate_parser)


    trajectory_parser = subparsers.add_parser('trajectory',
        help='Rating and rank time series of selected teams')
    _add_input_args(trajectory_parser)
    _add_method_args(trajectory_parser, default='tmassey')
    trajectory_parser.add_argument('--teams', type=str, nargs='+', required=True,
        help='Team names')
    trajectory_parser.add_argument('--rounds', type=str, default=None,
        help='Round range FIRST-LAST (e.g. "1-38" or "10-"; default: all rounds)')
    _add_output_args(trajectory_parser)


    simulate_parser = subparsers.add_parser('simulate',
        help='Write a synthetic round-robin season in the canonical format')
    simulate_parser.add_argument('--teams', type=int, default=20,
        help='Number of teams (even)')
    legs = simulate_parser.add_mutually_exclusive_group()
    legs.add_argument('--double', action='store_true', dest='double', default=True,
        help='Double round robin')
    legs.add_argument('--single', action='store_false', dest='double',
        help='Single round robin')
    simulate_parser.add_argument('--strengths', type=float, nargs='+', default=None,
        help='Team strengths (default: evenly spaced from 1 to -1)')
    simulate_parser.add_argument('--noise', type=float, default=1.0,
        help='Standard deviation of the margin noise')
    simulate_parser.add_argument('--home-advantage', type=float, default=0.0,
        help='Added to the expected home margin')
    simulate_parser.add_argument('--seed', type=int, default=0, help='Random seed')
    simulate_parser.add_argument('--start-date', type=str, default=None,
        help='Date (YYYY-MM-DD) of round 1; rounds are left undated without it')
    simulate_parser.add_argument('--spacing', type=int, default=7,
        help='Days between rounds when --start-date is given')
    simulate_parser.add_argument('-o', '--output', type=str, default=None,
        help='File to write to (default: stdout)')
    simulate_parser.add_argument('-q', '--quiet', action='store_true', help='Quiet output')


    standings_parser = subparsers.add_parser('standings', help='Official 3-1-0 league table')
    _add_input_args(standings_parser)
    standings_parser.add_argument('--upto', type=int, default=None,
        help='Last round to use (default: whole log)')
    _add_output_args(standings_parser)


    validate_parser = subparsers.add_parser('validate',
        help='Check a match log and list any violations')
    _add_input_args(validate_parser)
    validate_parser.add_argument('-q', '--quiet', action='store_true', help='Quiet output')


    history_parser = subparsers.add_parser('history', help='Display the run ledger')
    history_parser.add_argument('-n', metavar='N', type=int, default=None,
        help='Limit output to the most recent N entries')
    history_parser.add_argument('--since', type=str, nargs='+', metavar=('DATE', 'TIME'),
        default=None, help='Show runs since DATE (YYYY.mm.dd) [and TIME (HH:MM:SS)]')
    history_parser.add_argument('--subcommand', type=str, default=None, dest='subcommand_filter',
        choices=SUBCOMMANDS, help='Only show runs of this subcommand')
    history_parser.add_argument('--failed', action='store_true',
        help='Only show runs with a nonzero exit status')
    history_parser.add_argument('--full', action='store_true', help='Show full commands in table')
    history_parser.add_argument('--details', metavar='ID', default=None,
        help='Show the full command of one run (or -1 for the previous run)')
    history_parser.add_argument('--width', type=int, default=None,
        help='Maximum character width when printing table')


    config_parser = subparsers.add_parser('config', help='Configure temporank settings')
    config_parser.add_argument('--global', action='store_true', dest='global_',
        help='Write to (or read from *only*) the global config: ~/.temporankconfig')
    config_parser.add_argument('--local', action='store_true',
        help='Write to (or read from *only*) the local config: .temporank/config')
    config_parser.add_argument('--read', action='store_true',
        help='Display all variables in config file, and their values')
    config_parser.add_argument('--write', type=str, nargs=3, action='append', dest='write',
        metavar=('section', 'key', 'value'),
        help='Set configuration variables to the specified values')


    help_parser = subparsers.add_parser('help',
        help='Show usage information for a subcommand')
    help_parser.add_argument('help_command', type=str, nargs='?', choices=SUBCOMMANDS,
        help='Get help about a subcommand')
    # yapf: enable

    args = parser.parse_args(args)

    if args.subcommand == 'help':
        if args.help_command is None:
            parser.print_help()
        else:
            subparsers.choices[args.help_command].print_help()
        parser.exit()

    return args
