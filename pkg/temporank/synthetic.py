"""Synthetic round-robin seasons for tests and simulations"""
from itertools import islice

import numpy as np

from .errors import ConfigError
from .matchlog import MatchLog, MatchRecord, Team

def circle_method(n):
    """Single round robin by the circle method (Berger tables).

    The last team stays fixed and alternates home and away; the others
    rotate. Returns a list of rounds of (home, away) pairs.
    """
    if n < 2 or n % 2:
        raise ConfigError('a round robin needs an even number of teams >= 2, got {}'.format(n))
    fixed = n - 1
    rotating = list(range(n - 1))
    rounds = []
    for r in range(n - 1):
        left, right = rotating[:n // 2], rotating[n // 2:]
        matches = [(rotating[0], fixed) if r % 2 == 0 else (fixed, rotating[0])]
        matches.extend(zip(islice(left, 1, None), reversed(right)))
        rounds.append(matches)
        rotating = right + left
    return rounds

def _score(margin):
    # winner scores the margin, loser nothing
    margin = int(margin)
    return (margin, 0) if margin >= 0 else (0, -margin)

def synthetic_roundrobin(n, double=True, strengths=None, noise=1.0, seed=0,
                         home_advantage=0.0, names=None):
    """A reproducible season: margins are strength differences plus rounded Gaussian noise.

    The second half of a double round robin mirrors the first with home
    and away swapped.
    """
    schedule = circle_method(n)
    if double:
        schedule = schedule + [[(away, home) for home, away in matches] for matches in schedule]
    if strengths is None:
        strengths = np.linspace(1.0, -1.0, n)
    strengths = np.asarray(strengths, dtype=float)
    if strengths.shape != (n,):
        raise ConfigError('expected {} strengths, got {}'.format(n, strengths.size))
    if noise < 0:
        raise ConfigError('noise must be nonnegative')
    names = names or ['Team {:02d}'.format(i + 1) for i in range(n)]
    if len(names) != n:
        raise ConfigError('expected {} team names, got {}'.format(n, len(names)))

    rng = np.random.default_rng(seed)
    matches = []
    for round_, pairs in enumerate(schedule, start=1):
        for home, away in pairs:
            expected = strengths[home] - strengths[away] + home_advantage
            margin = np.rint(expected + (rng.normal(0.0, noise) if noise > 0 else 0.0))
            home_score, away_score = _score(margin)
            matches.append(MatchRecord(round_, home, away, home_score, away_score, None))
    teams = tuple(Team(i, name) for i, name in enumerate(names))
    return MatchLog(teams, tuple(matches), len(schedule))
