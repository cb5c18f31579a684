"""One function per subcommand: each takes the parsed args and the active
settings, writes its artifact and returns an exit status."""
import csv
from datetime import date, timedelta
import functools
import io
import math
import sys

from tabulate import tabulate

from . import constants, evaluation, export, methods
from .config import config, method_settings, output_dir
from .errors import ConfigError, ParseError, TemporankError
from .history import print_history
from .massey_static import massey_system, solve_massey, spectral_report
from .massey_temporal import column_sums, reconstruct_from_trace, trace_coefficients, trace_matrix
from .matchlog import (format_csv, official_standings, parse_csv, parse_fixtures_csv, team_index,
                       validate)
from .synthetic import synthetic_roundrobin
from .utils import expand_rounds
from .variants import trace_constant_coefficients

def read_text(path):
    """Input as text; bytes that are not UTF-8 are a parse error on their row"""
    try:
        if path == '-':
            return sys.stdin.read()
        with open(path, 'rb') as input_file:
            data = input_file.read()
        return data.decode('utf-8')
    except UnicodeDecodeError as err:
        row = err.object.count(b'\n', 0, err.start) + 1 if path != '-' else None
        raise ParseError('input is not valid UTF-8 (byte {!r})'.format(
            err.object[err.start:err.start + 1]), row)

def usage_errors(command):
    """Report argument errors raised inside the library as usage errors"""
    @functools.wraps(command)
    def checked(args, settings):
        try:
            return command(args, settings)
        except TemporankError:
            raise
        except ValueError as err:
            raise ConfigError(str(err)) from err
    return checked

def load_log(args):
    text = read_text(args.input)
    if args.input_format == 'fixtures':
        return parse_fixtures_csv(text)
    return parse_csv(text)

def load_prior(path):
    """team -> rating from a `team,rating` file; with a round column the last round wins"""
    reader = csv.DictReader(io.StringIO(read_text(path), newline=''))
    fields = reader.fieldnames or []
    if 'team' not in fields or 'rating' not in fields:
        raise ParseError('prior ratings need team and rating columns', 1)
    prior = {}
    latest = {}
    for record in reader:
        row = reader.line_num
        try:
            rating = float(record['rating'])
            round_ = int(record['round']) if record.get('round') else 0
        except ValueError:
            raise ParseError('invalid rating row {!r}'.format(record), row)
        if not math.isfinite(rating):
            raise ParseError('rating is not finite: {!r}'.format(record['rating']), row)
        if round_ >= latest.get(record['team'], -1):
            latest[record['team']] = round_
            prior[record['team']] = rating
    return prior

def build_method(name, args, settings):
    overrides = {key: getattr(args, key, None)
                 for key in ('alpha', 'kappa', 'zeta', 'initial', 'update_hfa', 'weights',
                             'margin_weight', 'rho_factor')}
    if getattr(args, 'rho_file', None):
        overrides['prior'] = load_prior(args.rho_file)
    return methods.prepare_method(name, method_settings(settings, name, overrides))

def output_format(args, settings):
    fmt = args.format or settings['DEFAULT'].get('format', 'csv')
    if fmt not in export.FORMATS:
        raise ConfigError('Invalid output format in config: {}'.format(fmt))
    return fmt

def n_workers_setting(args, settings):
    if args.workers is not None:
        return args.workers
    try:
        return settings['DEFAULT'].getint('workers')
    except ValueError:
        raise ConfigError('Invalid value for workers: {!r}'.format(settings['DEFAULT']['workers']))

def last_round(log, upto):
    if upto is None:
        return log.rounds
    if not 0 <= upto <= log.rounds:
        raise ConfigError('--upto must lie in 0..{}, got {}'.format(log.rounds, upto))
    return upto

def emit(args, settings, header, rows, document=None):
    text = export.render(header, rows, output_format(args, settings), document)
    export.write(text, args.output, output_dir(settings))

@usage_errors
def rate(args, settings):
    log = load_log(args)
    upto = last_round(log, args.upto)
    method = build_method(args.method, args, settings)
    names = [team.name for team in log.teams]
    if method.static:
        ratings = method.rate(log, upto)
        rows = list(zip(names, ratings))
        document = {'method': method.name, 'upto': upto, 'settings': method.settings(),
                    'ratings': dict(rows)}
        emit(args, settings, constants.RATINGS_HEADER, rows, document)
    else:
        history = method.history(log, upto)
        rows = [(name, t, history.values[i, t], history.counts[i, t])
                for i, name in enumerate(names) for t in range(1, upto + 1)]
        document = {'method': method.name, 'upto': upto, 'settings': method.settings(),
                    'ratings': {name: history.values[i] for i, name in enumerate(names)},
                    'games': {name: history.counts[i] for i, name in enumerate(names)}}
        emit(args, settings, constants.HISTORY_HEADER, rows, document)
    return constants.EXIT_OK

@usage_errors
def trace(args, settings):
    log = load_log(args)
    t = last_round(log, args.upto)
    i = team_index(log, args.team)
    method = build_method(args.method, args, settings)
    if method.name == 'cmassey':
        coefficients = trace_constant_coefficients(log, method.config, i, t)
    else:
        coefficients = trace_coefficients(log, i, t)
    n = len(log.teams)
    names = [team.name for team in log.teams]
    matrix = trace_matrix(coefficients, n, t)
    rows = [(names[k], 0, coefficients.init_coeffs[k]) for k in range(n)]
    rows += [(names[k], l, matrix[k, l - 1]) for k in range(n) for l in range(1, t + 1)]
    document = {
        'method': method.name,
        'team': names[i],
        'round': t,
        'teams': names,
        'spread_coeffs': matrix,
        'init_coeffs': dict(zip(names, coefficients.init_coeffs)),
        'column_sums': column_sums(coefficients, t),
        'rating': reconstruct_from_trace(coefficients, log, method.strengths(log)),
    }
    emit(args, settings, constants.TRACE_HEADER, rows, document)
    return constants.EXIT_OK

def spectral(args, settings):
    log = load_log(args)
    sys_ = massey_system(log, last_round(log, args.upto))
    report = spectral_report(sys_)
    if report.connected:
        report = spectral_report(sys_, solve_massey(sys_))
    rows = [('eigenvalue_{}'.format(k + 1), value) for k, value in enumerate(report.eigenvalues)]
    rows += [('algebraic_connectivity', report.algebraic_connectivity),
             ('components', report.components),
             ('connected', report.connected),
             ('bound_rhs', report.bound_rhs),
             ('general_bound', report.general_bound),
             ('deviation', report.deviation)]
    emit(args, settings, constants.SPECTRAL_HEADER, rows, report)
    return constants.EXIT_OK

def _say(args, message):
    if not args.quiet and args.output:
        print(message)

@usage_errors
def evaluate(args, settings):
    log = load_log(args)
    workers = n_workers_setting(args, settings)
    if args.all_methods or args.report == 'table':
        table = evaluation.accuracy_table(
            log, [build_method(name, args, settings) for name in methods.__all__],
            warmup=args.warmup, workers=workers)
        emit(args, settings, constants.TABLE_HEADER, table, {'warmup': args.warmup, 'rows': table})
        return constants.EXIT_OK

    if args.report == 'correlation':
        compared = [build_method(name, args, settings) for name in args.compare]
        series = evaluation.correlation_series(log, compared, args.from_round)
        rows = [(t, pair, series.coefficients[pair][k])
                for k, t in enumerate(series.rounds) for pair in series.pairs]
        emit(args, settings, constants.CORRELATION_HEADER, rows, series)
        return constants.EXIT_OK

    method = build_method(args.method, args, settings)
    hfa = args.hfa
    if args.calibrate:
        hfa = evaluation.calibrate_hfa(log, method, warmup=args.warmup, workers=workers).hfa
    report = evaluation.foresight_accuracy(log, method, hfa, args.warmup)
    _say(args, '{}: accuracy {:.3f} with hfa {}'.format(method.name, report.aggregate, hfa))
    if args.report == 'accuracy':
        rows = [(t, c, d, c / d if d else float('nan')) for t, c, d in report.per_round]
        document = {'method': method.name, 'hfa': hfa, 'warmup': args.warmup,
                    'aggregate': report.aggregate, 'per_round': rows}
        emit(args, settings, constants.ACCURACY_HEADER, rows, document)
    elif args.report == 'histogram':
        histogram = evaluation.accuracy_histogram(report)
        rows = [(low, high, count) for (low, high), count in zip(histogram.edges, histogram.counts)]
        document = {'method': method.name, 'hfa': hfa, 'bins': rows, 'skipped': histogram.skipped}
        emit(args, settings, constants.HISTOGRAM_HEADER, rows, document)
    else:
        summary = dict(evaluation.accuracy_summary(report), aggregate=report.aggregate, hfa=hfa)
        emit(args, settings, constants.SUMMARY_HEADER, list(summary.items()), summary)
    return constants.EXIT_OK

@usage_errors
def calibrate(args, settings):
    log = load_log(args)
    method = build_method(args.method, args, settings)
    result = evaluation.calibrate_hfa(log, method, args.grid, args.warmup,
                                      n_workers_setting(args, settings))
    rows = result.curve if args.curve else [(result.hfa, result.accuracy)]
    document = {'method': method.name, 'grid': args.grid or method.hfa_grid,
                'hfa': result.hfa, 'accuracy': result.accuracy, 'curve': result.curve}
    emit(args, settings, constants.CALIBRATION_HEADER, rows, document)
    return constants.EXIT_OK

@usage_errors
def trajectory(args, settings):
    log = load_log(args)
    method = build_method(args.method, args, settings)
    first, last = 1, log.rounds
    if args.rounds:
        selected = expand_rounds(args.rounds, last=log.rounds)
        if not selected or selected[-1] > log.rounds:
            raise ConfigError('--rounds must lie in 0..{}'.format(log.rounds))
        first, last = selected[0], selected[-1]
    series = evaluation.trajectory(log, method, args.teams, first, last)
    rows = [(s.team, t, rating, rank)
            for s in series for t, rating, rank in zip(s.rounds, s.ratings, s.ranks)]
    emit(args, settings, constants.TRAJECTORY_HEADER, rows, {'method': method.name, 'teams': series})
    return constants.EXIT_OK

def simulate(args, settings):
    log = synthetic_roundrobin(args.teams, args.double, args.strengths, args.noise, args.seed,
                               args.home_advantage)
    if args.start_date:
        try:
            start = date.fromisoformat(args.start_date)
        except ValueError:
            raise ConfigError('--start-date is not YYYY-MM-DD: {}'.format(args.start_date))
        log = log._replace(matches=tuple(
            m._replace(date=(start + timedelta(days=args.spacing * (m.round - 1))).isoformat())
            for m in log.matches))
    export.write(format_csv(log), args.output, output_dir(settings))
    return constants.EXIT_OK

def standings(args, settings):
    log = load_log(args)
    table = sorted(official_standings(log, last_round(log, args.upto)), key=lambda row: row.rank)
    rows = [(log.teams[row.team].name, row.points, row.goal_diff, row.goals_for, row.rank)
            for row in table]
    emit(args, settings, constants.STANDINGS_HEADER, rows)
    return constants.EXIT_OK

def validate_log(args, settings):
    log = load_log(args)
    violations = validate(log)
    if violations:
        print(tabulate(violations, headers=constants.VIOLATION_HEADER))
        return constants.EXIT_DATA
    if not args.quiet:
        print('{} teams, {} matches, {} rounds: ok'.format(
            len(log.teams), len(log.matches), log.rounds))
    return constants.EXIT_OK

def history(args, settings):
    print_history(args)
    return constants.EXIT_OK

def configure(args, settings):
    config(args)
    return constants.EXIT_OK

subcommands = {
    'rate': rate,
    'trace': trace,
    'spectral': spectral,
    'evaluate': evaluate,
    'calibrate': calibrate,
    'trajectory': trajectory,
    'simulate': simulate,
    'standings': standings,
    'validate': validate_log,
    'history': history,
    'config': configure,
}
