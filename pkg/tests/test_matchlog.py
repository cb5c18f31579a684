import unittest
from unittest.mock import patch

import numpy as np
import pytest

from temporank.errors import DataInvariantError, ParseError, UnknownTeamError
from temporank.matchlog import (Fixture, MatchRecord, cumulative_spreads, format_csv, games_played,
                                infer_rounds, matches_by_round, official_standings, parse_csv,
                                parse_fixtures_csv, point_spread, spread_table, team_index,
                                validate)
from tests.test_utils import EXAMPLE_CSV, make_log, example_log, random_log

HEADER = 'round,date,home,away,home_goals,away_goals\n'

class TestParseCsv(unittest.TestCase):
    def test_single_match(self):
        log = parse_csv(HEADER + '1,2015-08-22,A,C,2,1')
        self.assertEqual(len(log.matches), 1)
        self.assertEqual([team.name for team in log.teams], ['A', 'C'])
        self.assertEqual(log.rounds, 1)
        self.assertEqual(log.matches[0].date, '2015-08-22')

    def test_worked_example(self):
        log = example_log()
        self.assertEqual(len(log.teams), 4)
        self.assertEqual(log.rounds, 3)
        self.assertEqual(len(log.matches), 6)
        self.assertEqual(validate(log), [])

    def test_duplicate_team_in_round(self):
        with self.assertRaises(DataInvariantError):
            parse_csv(HEADER + '1,,A,B,1,0\n1,,A,C,2,2\n')

    def test_self_match(self):
        with self.assertRaises(DataInvariantError):
            parse_csv(HEADER + '1,,A,a,1,0\n')

    def test_bad_header(self):
        with self.assertRaises(ParseError) as caught:
            parse_csv('round,home,away\n1,A,B\n')
        self.assertEqual(caught.exception.row, 1)

    def test_bad_fields_carry_row(self):
        for row in ['x,,A,B,1,0', '0,,A,B,1,0', '1,,A,B,-1,0', '1,22/08/2015,A,B,1,0', '1,,A,B,1']:
            with self.assertRaises(ParseError) as caught:
                parse_csv(HEADER + '1,,C,D,0,0\n' + row + '\n')
            self.assertEqual(caught.exception.row, 3)
            self.assertIn('row 3', str(caught.exception))

    def test_non_ascii_digits_are_rejected(self):
        for row in ['1,,A,B,²,0', '1,,A,B,1,٣', '²,,A,B,1,0', '１,,A,B,1,0']:
            with self.assertRaises(ParseError) as caught:
                parse_csv(HEADER + '1,,C,D,0,0\n' + row + '\n')
            self.assertEqual(caught.exception.row, 3)

    def test_missing_header(self):
        with self.assertRaises(ParseError):
            parse_csv('')

    def test_crlf_and_blank_lines(self):
        log = parse_csv(EXAMPLE_CSV.replace('\n', '\r\n') + '\r\n')
        self.assertEqual(len(log.matches), 6)

    def test_names_are_normalized(self):
        log = parse_csv(HEADER + '1,,Inter ,  AC  Milan,1,0\n2,,ac milan,inter,2,2\n')
        self.assertEqual([team.name for team in log.teams], ['Inter', 'AC Milan'])
        self.assertEqual(team_index(log, 'AC MILAN'), 1)

    def test_matches_sorted_by_round_stably(self):
        log = parse_csv(HEADER + '2,,A,B,1,0\n1,,C,D,0,0\n1,,A,E,1,1\n')
        self.assertEqual([m.round for m in log.matches], [1, 1, 2])
        self.assertEqual([m.home for m in log.matches[:2]], [team_index(log, 'C'), team_index(log, 'A')])

    def test_format_csv_round_trip(self):
        log = parse_csv(HEADER + '1,2015-08-22,A,C,2,1\n2,,C,A,0,0\n')
        self.assertEqual(parse_csv(format_csv(log)), log)

def test_unknown_team():
    with pytest.raises(UnknownTeamError):
        team_index(example_log(), 'Z')

class TestInferRounds(unittest.TestCase):
    def rounds(self, pairs):
        fixtures = [Fixture(None, home, away, 1, 0) for home, away in pairs]
        return [m.round for m in infer_rounds(fixtures).matches]

    def test_greedy_rule(self):
        self.assertEqual(self.rounds([('A', 'C'), ('B', 'D'), ('A', 'D')]), [1, 1, 2])
        self.assertEqual(self.rounds([('A', 'B'), ('A', 'C'), ('A', 'D')]), [1, 2, 3])
        self.assertEqual(self.rounds([('A', 'B'), ('C', 'D'), ('B', 'A')]), [1, 1, 2])

    def test_output_always_validates(self):
        rng = np.random.default_rng(3)
        names = 'ABCDEFGH'
        for _ in range(20):
            pairs = [tuple(rng.choice(list(names), 2, replace=False)) for _ in range(30)]
            fixtures = [Fixture(None, home, away, 1, 1) for home, away in pairs]
            self.assertEqual(validate(infer_rounds(fixtures)), [])

FIXTURES = """Div,Date,HomeTeam,AwayTeam,FTHG,FTAG
I1,23/08/15,Verona,Roma,1,1
I1,22/08/2015,Juventus,Udinese,0,1
I1,29/08/15,Roma,Juventus,2,1
I1,30/08/15,Udinese,Verona,,
"""

class TestParseFixtures(unittest.TestCase):
    def test_dates_and_rounds(self):
        with patch('temporank.matchlog.warn') as warn:
            log = parse_fixtures_csv(FIXTURES)
        warn.assert_called_once()
        self.assertEqual([team.name for team in log.teams], ['Juventus', 'Udinese', 'Verona', 'Roma'])
        self.assertEqual([m.date for m in log.matches], ['2015-08-22', '2015-08-23', '2015-08-29'])
        self.assertEqual([m.round for m in log.matches], [1, 1, 2])

    def test_missing_columns(self):
        with self.assertRaises(ParseError):
            parse_fixtures_csv('Date,HomeTeam,AwayTeam\n22/08/15,A,B\n')

class TestSpreads(unittest.TestCase):
    def test_point_spread(self):
        log = example_log()
        first = log.matches[0]
        A, B, C = (team_index(log, name) for name in 'ABC')
        self.assertEqual(point_spread(first, A), 1)
        self.assertEqual(point_spread(first, C), -1)
        self.assertEqual(point_spread(first, B), 0)

    def test_antisymmetry(self):
        log = random_log(np.random.default_rng(0), 8, 10)
        for m in log.matches:
            self.assertEqual(point_spread(m, m.home) + point_spread(m, m.away), 0)

    def test_cumulative_spreads(self):
        np.testing.assert_array_equal(cumulative_spreads(example_log())[:, 1:],
                                      [[1, 4, 5], [-1, -1, 0], [1, 1, 0], [-1, -4, -5]])

    def test_spread_table_and_games(self):
        log = example_log()
        self.assertEqual(spread_table(log).shape, (4, 4))
        np.testing.assert_array_equal(spread_table(log)[:, 0], 0)
        np.testing.assert_array_equal(games_played(log, 2), [[0, 1, 2]] * 4)

    def test_matches_by_round(self):
        rounds = matches_by_round(example_log(), 2)
        self.assertEqual(sorted(rounds), [1, 2])
        self.assertEqual([len(ms) for ms in rounds.values()], [2, 2])

class TestStandings(unittest.TestCase):
    def points(self, log, upto):
        return [row.points for row in official_standings(log, upto)]

    def test_worked_example(self):
        log = example_log()
        self.assertEqual(self.points(log, 1), [3, 0, 3, 0])
        self.assertEqual(self.points(log, 3), [9, 4, 4, 0])

    def test_tie_break(self):
        table = official_standings(example_log(), 3)
        # ids follow first appearance (A, C, B, D); B and C tie on points,
        # goal difference and goals scored, so C goes first by id
        self.assertEqual([row.rank for row in table], [1, 2, 3, 4])

    def test_empty_log(self):
        log = make_log(3, [])
        table = official_standings(log, 0)
        self.assertEqual([row.points for row in table], [0, 0, 0])
        self.assertEqual([row.rank for row in table], [1, 2, 3])

    def test_total_points(self):
        log = random_log(np.random.default_rng(1), 10, 12)
        draws = sum(m.home_score == m.away_score for m in log.matches)
        decisive = len(log.matches) - draws
        self.assertEqual(sum(self.points(log, log.rounds)), 3 * decisive + 2 * draws)

class TestValidate(unittest.TestCase):
    def test_double_booking(self):
        log = make_log(3, [(2, 0, 1, 1, 0), (2, 0, 2, 1, 1)])
        violations = validate(log)
        self.assertEqual(len(violations), 1)
        self.assertEqual((violations[0].kind, violations[0].round, violations[0].team),
                         ('double-booking', 2, 'T0'))

    def test_self_match(self):
        log = make_log(2, [(1, 1, 1, 0, 0)])
        violations = validate(log)
        self.assertEqual([v.kind for v in violations], ['self-match'])

    def test_unordered_matches(self):
        log = make_log(4, [(1, 0, 1, 0, 0), (2, 2, 3, 0, 0)])
        log = log._replace(matches=log.matches[::-1])
        self.assertEqual([v.kind for v in validate(log)], ['order'])
