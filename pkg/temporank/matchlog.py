"""Match data: parsing, validation and the per-round views the rating methods use.

A MatchLog is the temporal process of matches: every record carries the round
(time step) it was played in, and no team plays more than once per round.
Teams get dense integer ids in order of first appearance.
"""
from collections import namedtuple, defaultdict
import csv
from datetime import date, datetime
import io
from warnings import warn

import numpy as np

from . import constants
from .errors import ParseError, DataInvariantError, UnknownTeamError
from .utils import normalize_name

Team = namedtuple('Team', ['id', 'name'])
MatchRecord = namedtuple('MatchRecord',
                         ['round', 'home', 'away', 'home_score', 'away_score', 'date'])
MatchLog = namedtuple('MatchLog', ['teams', 'matches', 'rounds'])
Fixture = namedtuple('Fixture', ['date', 'home', 'away', 'home_score', 'away_score'])
StandingsRow = namedtuple('StandingsRow',
                          ['team', 'points', 'goal_diff', 'goals_for', 'wins', 'draws',
                           'losses', 'rank'])
Violation = namedtuple('Violation', ['kind', 'round', 'team', 'message'])

class _TeamRegistry:
    def __init__(self):
        self._ids = {}
        self.teams = []

    def lookup(self, name):
        key = normalize_name(name)
        if key not in self._ids:
            self._ids[key] = len(self.teams)
            self.teams.append(Team(len(self.teams), ' '.join(name.split())))
        return self._ids[key]

def _parse_score(field, row):
    field = field.strip()
    if not (field.isascii() and field.isdigit()):
        raise ParseError('score is not a nonnegative integer: {!r}'.format(field), row)
    return int(field)

def _parse_round(field, row):
    field = field.strip()
    if not (field.isascii() and field.isdigit()) or int(field) < 1:
        raise ParseError('round is not a positive integer: {!r}'.format(field), row)
    return int(field)

def _parse_date(field, row):
    field = field.strip()
    if field == '':
        return None
    try:
        date.fromisoformat(field)
    except ValueError:
        raise ParseError('date is not ISO-8601 (YYYY-MM-DD): {!r}'.format(field), row)
    return field

def _build_log(teams, matches):
    # stable sort keeps input order inside a round
    matches = tuple(sorted(matches, key=lambda m: m.round))
    rounds = max((m.round for m in matches), default=0)
    return MatchLog(tuple(teams), matches, rounds)

def parse_csv(text):
    """Parse the canonical `round,date,home,away,home_goals,away_goals` format"""
    reader = csv.reader(io.StringIO(text, newline=''))
    header = None
    registry = _TeamRegistry()
    matches = []
    seen = {}
    for fields in reader:
        row = reader.line_num
        if not any(field.strip() for field in fields):
            continue
        if header is None:
            header = [field.strip().lower() for field in fields]
            if header != constants.MATCH_HEADER:
                raise ParseError('unknown header {!r}; expected {!r}'.format(
                    ','.join(fields), ','.join(constants.MATCH_HEADER)), row)
            continue
        if len(fields) != len(constants.MATCH_HEADER):
            raise ParseError('expected {} fields, got {}'.format(
                len(constants.MATCH_HEADER), len(fields)), row)
        round_field, date_field, home_name, away_name, home_goals, away_goals = fields
        if not home_name.strip() or not away_name.strip():
            raise ParseError('empty team name', row)
        round_ = _parse_round(round_field, row)
        match_date = _parse_date(date_field, row)
        home = registry.lookup(home_name)
        away = registry.lookup(away_name)
        if home == away:
            raise DataInvariantError('row {}: {} plays itself'.format(row, home_name.strip()))
        for team in (home, away):
            if (team, round_) in seen:
                raise DataInvariantError('row {}: {} already plays in round {} (row {})'.format(
                    row, registry.teams[team].name, round_, seen[(team, round_)]))
            seen[(team, round_)] = row
        matches.append(MatchRecord(round_, home, away,
                                   _parse_score(home_goals, row),
                                   _parse_score(away_goals, row),
                                   match_date))
    if header is None:
        raise ParseError('missing header', 1)
    return _build_log(registry.teams, matches)

def format_csv(log):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(constants.MATCH_HEADER)
    for m in log.matches:
        writer.writerow([m.round, m.date or '', log.teams[m.home].name,
                         log.teams[m.away].name, m.home_score, m.away_score])
    return buffer.getvalue()

def infer_rounds(fixtures):
    """Assign rounds to date-ordered fixtures that carry none.

    Each match goes to the first round after the latest round of either team,
    which is the smallest round where neither team already plays and which
    does not precede any earlier match of the two teams.
    """
    registry = _TeamRegistry()
    last_round = defaultdict(int)
    matches = []
    for fixture in fixtures:
        home = registry.lookup(fixture.home)
        away = registry.lookup(fixture.away)
        round_ = max(last_round[home], last_round[away]) + 1
        last_round[home] = last_round[away] = round_
        matches.append(MatchRecord(round_, home, away, fixture.home_score,
                                   fixture.away_score, fixture.date))
    return _build_log(registry.teams, matches)

def _parse_fixture_date(field, row):
    for fmt in ('%d/%m/%Y', '%d/%m/%y', '%Y-%m-%d'):
        try:
            return datetime.strptime(field.strip(), fmt).date().isoformat()
        except ValueError:
            continue
    raise ParseError('unrecognized date {!r}'.format(field), row)

def parse_fixtures_csv(text):
    """Adapter for public fixture feeds (Date,HomeTeam,AwayTeam,FTHG,FTAG)"""
    reader = csv.DictReader(io.StringIO(text, newline=''))
    missing = [c for c in constants.FIXTURE_COLUMNS if c not in (reader.fieldnames or [])]
    if missing:
        raise ParseError('missing columns: {}'.format(', '.join(missing)), 1)
    fixtures = []
    dropped = 0
    for record in reader:
        row = reader.line_num
        if not record['HomeTeam'] or not record['HomeTeam'].strip():
            continue
        if not (record['FTHG'] or '').strip() or not (record['FTAG'] or '').strip():
            dropped += 1
            continue
        fixtures.append(Fixture(_parse_fixture_date(record['Date'], row),
                                record['HomeTeam'], record['AwayTeam'],
                                _parse_score(record['FTHG'], row),
                                _parse_score(record['FTAG'], row)))
    if dropped:
        warn(RuntimeWarning('Dropped {} fixtures without full-time goals'.format(dropped)))
    fixtures.sort(key=lambda f: f.date)
    return infer_rounds(fixtures)

def team_index(log, name):
    key = normalize_name(name)
    for team in log.teams:
        if normalize_name(team.name) == key:
            return team.id
    raise UnknownTeamError(name)

def _last_round(log, upto):
    return log.rounds if upto is None else upto

def matches_by_round(log, upto=None):
    upto = _last_round(log, upto)
    rounds = {t: [] for t in range(1, upto + 1)}
    for m in log.matches:
        if m.round <= upto:
            rounds[m.round].append(m)
    return {t: tuple(ms) for t, ms in rounds.items()}

def point_spread(m, i):
    if i == m.home:
        return m.home_score - m.away_score
    if i == m.away:
        return m.away_score - m.home_score
    return 0

def spread_table(log, upto=None):
    """s_k(l) for every team k and round l <= upto; column 0 is the pre-season"""
    upto = _last_round(log, upto)
    spreads = np.zeros((len(log.teams), upto + 1))
    for m in log.matches:
        if m.round <= upto:
            spreads[m.home, m.round] = point_spread(m, m.home)
            spreads[m.away, m.round] = point_spread(m, m.away)
    return spreads

def cumulative_spreads(log, upto=None):
    return np.cumsum(spread_table(log, upto), axis=1)

def games_played(log, upto=None):
    """m_{i,t}: number of matches team i played in rounds 1..t"""
    upto = _last_round(log, upto)
    played = np.zeros((len(log.teams), upto + 1), dtype=int)
    for m in log.matches:
        if m.round <= upto:
            played[m.home, m.round] += 1
            played[m.away, m.round] += 1
    return np.cumsum(played, axis=1)

def official_standings(log, upto=None):
    """3-1-0 league table after round `upto`, indexed by team id.

    Ties are broken by goal difference, then goals scored, then team id.
    """
    upto = _last_round(log, upto)
    n = len(log.teams)
    goals_for = [0] * n
    goals_against = [0] * n
    wins = [0] * n
    draws = [0] * n
    losses = [0] * n
    for m in log.matches:
        if m.round > upto:
            continue
        goals_for[m.home] += m.home_score
        goals_for[m.away] += m.away_score
        goals_against[m.home] += m.away_score
        goals_against[m.away] += m.home_score
        if m.home_score == m.away_score:
            draws[m.home] += 1
            draws[m.away] += 1
        else:
            winner, loser = (m.home, m.away) if m.home_score > m.away_score else (m.away, m.home)
            wins[winner] += 1
            losses[loser] += 1
    points = [constants.WIN_POINTS * w + constants.DRAW_POINTS * d for w, d in zip(wins, draws)]
    goal_diff = [f - a for f, a in zip(goals_for, goals_against)]
    order = sorted(range(n), key=lambda i: (-points[i], -goal_diff[i], -goals_for[i], i))
    rank = {team: position for position, team in enumerate(order, start=1)}
    return tuple(
        StandingsRow(i, points[i], goal_diff[i], goals_for[i], wins[i], draws[i], losses[i], rank[i])
        for i in range(n)
    )

def validate(log):
    """Check the MatchLog invariants; returns a (possibly empty) list of violations"""
    violations = []
    n = len(log.teams)
    ids = [team.id for team in log.teams]
    if ids != list(range(n)):
        violations.append(Violation('team-ids', None, None,
                                    'team ids are not dense 0..{}'.format(n - 1)))
    names = [normalize_name(team.name) for team in log.teams]
    for name in sorted({name for name in names if names.count(name) > 1}):
        violations.append(Violation('team-name', None, None,
                                    'duplicate team name {!r}'.format(name)))

    def label(i):
        return log.teams[i].name if 0 <= i < n else str(i)

    appearances = defaultdict(int)
    previous_round = 0
    for k, m in enumerate(log.matches):
        if m.round < 1:
            violations.append(Violation('round', m.round, None,
                                        'match {} has round {} < 1'.format(k, m.round)))
        if m.round < previous_round:
            violations.append(Violation('order', m.round, None,
                                        'match {} is out of round order'.format(k)))
        previous_round = max(previous_round, m.round)
        unknown = [i for i in (m.home, m.away) if not 0 <= i < n]
        for i in unknown:
            violations.append(Violation('unknown-team', m.round, i,
                                        'match {} references unknown team {}'.format(k, i)))
        if m.home == m.away:
            violations.append(Violation('self-match', m.round, label(m.home),
                                        'match {}: {} plays itself'.format(k, label(m.home))))
        if m.home_score < 0 or m.away_score < 0:
            violations.append(Violation('score', m.round, None,
                                        'match {} has a negative score'.format(k)))
        for i in {m.home, m.away}:
            appearances[(i, m.round)] += 1
    for (i, round_), times in sorted(appearances.items(), key=lambda item: (item[0][1], item[0][0])):
        if times > 1:
            violations.append(Violation('double-booking', round_, label(i),
                                        '{} plays {} times in round {}'.format(label(i), times, round_)))
    last = max((m.round for m in log.matches), default=0)
    if log.rounds < last:
        violations.append(Violation('rounds', log.rounds, None,
                                    'log declares {} rounds but has matches in round {}'.format(
                                        log.rounds, last)))
    return violations
