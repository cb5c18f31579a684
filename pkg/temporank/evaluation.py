"""Backtesting: ranking correlations, foresight accuracy and home-field calibration.

Ratings at the end of round t predict the winners of round t+1. Drawn
matches are left out of both the numerator and the denominator.
"""
from collections import namedtuple
from itertools import combinations
import math
from multiprocessing import Pool

import numpy as np
from scipy import stats

from . import constants
from .errors import ConfigError
from .matchlog import team_index
from .utils import n_workers

RankingSnapshot = namedtuple('RankingSnapshot', ['method', 'round', 'ranks'])
PredictionOutcome = namedtuple('PredictionOutcome',
                               ['round', 'match', 'predicted', 'actual', 'correct'])
AccuracyReport = namedtuple('AccuracyReport',
                            ['method', 'hfa', 'per_round', 'aggregate', 'outcomes'])
KendallSeries = namedtuple('KendallSeries', ['pairs', 'rounds', 'coefficients'])
Calibration = namedtuple('Calibration', ['hfa', 'accuracy', 'curve'])
Histogram = namedtuple('Histogram', ['edges', 'counts', 'skipped'])
Trajectory = namedtuple('Trajectory', ['team', 'rounds', 'ratings', 'ranks'])
AccuracyRow = namedtuple('AccuracyRow', ['method', 'accuracy', 'hfa', 'accuracy_hfa'])

def rank_positions(values):
    """Competition ranks, 1 for the highest value; near-equal values share a rank"""
    values = np.round(np.asarray(values, dtype=float), constants.RANK_DECIMALS)
    return stats.rankdata(-values, method='min').astype(int)

def _last(log, upto):
    return log.rounds if upto is None else upto

def snapshot(method, log, t):
    values = method.ranking_values(log, t)[:, t]
    return RankingSnapshot(method.name, t, rank_positions(values))

def kendall_tau(a, b):
    """Kendall tau-b between two snapshots of the same teams"""
    ranks_a = np.asarray(getattr(a, 'ranks', a))
    ranks_b = np.asarray(getattr(b, 'ranks', b))
    if ranks_a.shape != ranks_b.shape:
        raise ValueError('snapshots cover different team sets')
    if len(ranks_a) < 2:
        raise ValueError('kendall tau needs at least 2 teams')
    tau, _ = stats.kendalltau(ranks_a, ranks_b, variant='b')
    return float(tau)

def correlation_series(log, methods, from_round=1, to_round=None):
    """Pairwise tau-b between the end-of-round rankings of every pair of methods"""
    if from_round < 1:
        raise ValueError('from_round must be at least 1')
    to_round = _last(log, to_round)
    rounds = list(range(from_round, to_round + 1))
    ranks = [[rank_positions(column) for column in method.ranking_values(log, to_round).T]
             for method in methods]
    pairs = []
    coefficients = {}
    for a, b in combinations(range(len(methods)), 2):
        pair = '{}-{}'.format(methods[a].name, methods[b].name)
        pairs.append(pair)
        coefficients[pair] = [kendall_tau(ranks[a][t], ranks[b][t]) for t in rounds]
    return KendallSeries(pairs, rounds, coefficients)

def _actual(m):
    if m.home_score > m.away_score:
        return 'win'
    if m.home_score < m.away_score:
        return 'loss'
    return 'draw'

def predict_rounds(log, values, hfa=0.0, warmup=1, method='custom'):
    """Score predictions made from a rating matrix (teams x rounds + 1)"""
    if warmup < 0:
        raise ValueError('warmup must be nonnegative')
    per_round = {t: [0, 0] for t in range(warmup + 1, log.rounds + 1)}
    outcomes = []
    for k, m in enumerate(log.matches):
        if m.round not in per_round:
            continue
        previous = values[:, m.round - 1]
        predicted = m.home if previous[m.home] + hfa >= previous[m.away] else m.away
        actual = _actual(m)
        if actual == 'draw':
            correct = None
        else:
            winner = m.home if actual == 'win' else m.away
            correct = predicted == winner
            per_round[m.round][0] += int(correct)
            per_round[m.round][1] += 1
        outcomes.append(PredictionOutcome(m.round, k, predicted, actual, correct))
    per_round = [(t, c, d) for t, (c, d) in per_round.items()]
    decisive = sum(d for _, _, d in per_round)
    aggregate = sum(c for _, c, _ in per_round) / decisive if decisive else math.nan
    return AccuracyReport(method, hfa, per_round, aggregate, outcomes)

def foresight_accuracy(log, method, hfa=0.0, warmup=1):
    values = method.history(log, log.rounds, hfa).values
    return predict_rounds(log, values, hfa, warmup, method.name)

def hfa_points(grid):
    low, high, step = (float(x) for x in grid)
    if high < low:
        raise ConfigError('empty hfa grid: max {} < min {}'.format(high, low))
    if step <= 0:
        if high > low:
            raise ConfigError('hfa grid step must be positive')
        return [low]
    count = int(math.floor((high - low) / step + 1e-9)) + 1
    return [round(low + k * step, 10) for k in range(count)]

def _grid_accuracy(task):
    log, method, hfa, warmup, values = task
    if values is None:
        values = method.history(log, log.rounds, hfa).values
    return predict_rounds(log, values, hfa, warmup, method.name).aggregate

def calibrate_hfa(log, method, grid=None, warmup=1, workers=1):
    """Exhaustive in-sample grid search; the smallest maximizing hfa wins.

    hfa = 0 is always searched, so calibrating never loses accuracy.
    """
    points = hfa_points(method.hfa_grid if grid is None else grid)
    if 0.0 not in points:
        points = sorted(points + [0.0])
    values = None if method.hfa_dependent else method.history(log, log.rounds).values
    tasks = [(log, method, h, warmup, values) for h in points]
    n = n_workers(workers, len(tasks))
    if n > 1:
        with Pool(n) as pool:
            curve = pool.map(_grid_accuracy, tasks)
    else:
        curve = [_grid_accuracy(task) for task in tasks]
    best, best_accuracy = points[0], -math.inf
    for h, accuracy in zip(points, curve):
        if not math.isnan(accuracy) and accuracy > best_accuracy:
            best, best_accuracy = h, accuracy
    if best_accuracy == -math.inf:
        best_accuracy = math.nan
    return Calibration(best, best_accuracy, list(zip(points, curve)))

def accuracy_histogram(report, bins=10):
    """Per-round accuracies binned into [0, 1/bins), ..., [1 - 1/bins, 1]"""
    if not report.per_round:
        raise ValueError('report has no predicted rounds')
    counts = [0] * bins
    skipped = 0
    for _, correct, decisive in report.per_round:
        if decisive == 0:
            skipped += 1
            continue
        counts[min((bins * correct) // decisive, bins - 1)] += 1
    edges = [(k / bins, (k + 1) / bins) for k in range(bins)]
    return Histogram(edges, counts, skipped)

def accuracy_summary(report):
    accuracies = np.array([c / d for _, c, d in report.per_round if d])
    if accuracies.size == 0:
        return {'rounds': 0, 'min': math.nan, 'median': math.nan, 'mean': math.nan, 'max': math.nan}
    return {
        'rounds': int(accuracies.size),
        'min': float(accuracies.min()),
        'median': float(np.median(accuracies)),
        'mean': float(accuracies.mean()),
        'max': float(accuracies.max()),
    }

def accuracy_table(log, methods, grids=None, warmup=1, workers=1):
    """Accuracy without and with a calibrated hfa for every method"""
    grids = grids or {}
    rows = []
    for method in methods:
        base = foresight_accuracy(log, method, 0.0, warmup).aggregate
        calibration = calibrate_hfa(log, method, grids.get(method.name), warmup, workers)
        rows.append(AccuracyRow(method.name, base, calibration.hfa, calibration.accuracy))
    return rows

def trajectory(log, method, teams, from_round=1, to_round=None):
    if not teams:
        raise ValueError('no teams requested')
    ids = [team_index(log, name) for name in teams]
    to_round = _last(log, to_round)
    if from_round < 0 or from_round > to_round:
        raise ValueError('invalid round range {}-{}'.format(from_round, to_round))
    values = method.history(log, to_round).values
    ranking = method.ranking_values(log, to_round)
    rounds = list(range(from_round, to_round + 1))
    ranks = {t: rank_positions(ranking[:, t]) for t in rounds}
    return [
        Trajectory(log.teams[i].name, rounds,
                   [float(values[i, t]) for t in rounds],
                   [int(ranks[t][i]) for t in rounds])
        for i in ids
    ]
