"""Temporalized Massey ratings.

A team's rating after its m-th match blends its previous rating with the
opponent's rating before the match plus the point spread:

    r_i(t) = (m-1)/m * r_i(t-1) + (s_i(t) + r_j(t-1)) / m

Matches of the same round read only the ratings of the previous round, so
they happen simultaneously. Every rating is a nonnegative combination of
realized spreads (plus initial strengths), which `trace_coefficients`
tracks explicitly.
"""
from collections import namedtuple
import math

import numpy as np

from .errors import UnknownTeamError
from .matchlog import matches_by_round, point_spread, spread_table, team_index

RatingHistory = namedtuple('RatingHistory', ['values', 'counts'])
CoefficientTrace = namedtuple('CoefficientTrace', ['team', 'round', 'spread_coeffs', 'init_coeffs'])
TemporalDecomposition = namedtuple('TemporalDecomposition', ['opponents', 'spread'])

def initial_strengths(n, rho=None):
    if rho is None:
        return np.zeros(n)
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (n,):
        raise ValueError('expected {} initial strengths, got {}'.format(n, rho.shape))
    if not np.all(np.isfinite(rho)):
        raise ValueError('initial strengths must be finite')
    return rho

def seed_strengths(log, prior, factor=1.0, missing=0.0):
    """Initial strengths from a previous season's final ratings (team name -> rating)"""
    rho = np.full(len(log.teams), float(missing))
    for name, rating in prior.items():
        try:
            rho[team_index(log, name)] = factor * float(rating)
        except UnknownTeamError:
            continue
    return rho

def _empty_history(n, upto, rho):
    values = np.zeros((n, upto + 1))
    values[:, 0] = rho
    counts = np.zeros((n, upto + 1), dtype=int)
    return values, counts

def run_recurrence(log, rho, upto, update):
    """Drive a per-match update round by round with batch semantics.

    `update(prev, i, j, s_i, m_i, m_j)` returns the new ratings of i and j
    from the column of the previous round.
    """
    n = len(log.teams)
    upto = log.rounds if upto is None else upto
    rho = initial_strengths(n, rho)
    values, counts = _empty_history(n, upto, rho)
    for t, matches in matches_by_round(log, upto).items():
        prev = values[:, t - 1]
        values[:, t] = prev
        counts[:, t] = counts[:, t - 1]
        for m in matches:
            i, j = m.home, m.away
            counts[i, t] += 1
            counts[j, t] += 1
            values[i, t], values[j, t] = update(prev, i, j, point_spread(m, i),
                                                counts[i, t], counts[j, t])
    return RatingHistory(values, counts)

def step_update(r_i_prev, r_j_prev, s_i, m_i, m_j):
    """One temporalized Massey match; m_i and m_j already count this match"""
    r_i = (m_i - 1) / m_i * r_i_prev + (s_i + r_j_prev) / m_i
    r_j = (m_j - 1) / m_j * r_j_prev + (-s_i + r_i_prev) / m_j
    return r_i, r_j

def rate_temporal(log, rho=None, upto=None):
    def update(prev, i, j, s_i, m_i, m_j):
        return step_update(prev[i], prev[j], s_i, m_i, m_j)
    return run_recurrence(log, rho, upto, update)

def rate_temporal_direct(log, rho=None, upto=None):
    """Mean form: r_i(t) = mean over past matches of (r_opp(t_k - 1) + s_i(t_k))"""
    n = len(log.teams)
    upto = log.rounds if upto is None else upto
    rho = initial_strengths(n, rho)
    values, counts = _empty_history(n, upto, rho)
    played = [[] for _ in range(n)] # (round, opponent, spread)
    by_round = matches_by_round(log, upto)
    for t in range(1, upto + 1):
        for m in by_round[t]:
            played[m.home].append((t, m.away, point_spread(m, m.home)))
            played[m.away].append((t, m.home, point_spread(m, m.away)))
        for i in range(n):
            counts[i, t] = len(played[i])
            if not played[i]:
                values[i, t] = rho[i]
                continue
            values[i, t] = sum(values[j, t_k - 1] + s for t_k, j, s in played[i]) / len(played[i])
    return RatingHistory(values, counts)

def decompose_temporal(log, history, t):
    """Split r(t) into the mean historical opponent rating and the mean spread"""
    n = len(log.teams)
    opponents = np.zeros(n)
    spreads = np.zeros(n)
    totals = np.zeros(n)
    for m in log.matches:
        if m.round > t:
            continue
        opponents[m.home] += history.values[m.away, m.round - 1]
        opponents[m.away] += history.values[m.home, m.round - 1]
        spreads[m.home] += point_spread(m, m.home)
        spreads[m.away] += point_spread(m, m.away)
        totals[m.home] += 1
        totals[m.away] += 1
    played = totals > 0
    opponents[played] /= totals[played]
    spreads[played] /= totals[played]
    opponents[~played] = history.values[~played, 0]
    return TemporalDecomposition(opponents, spreads)

def _blend(keep, own, gain, opponent):
    blended = {key: keep * value for key, value in own.items()} if keep else {}
    for key, value in opponent.items():
        blended[key] = blended.get(key, 0.0) + gain * value
    return blended

def trace_recurrence(log, i, t, weights):
    """Coefficients of r_i(t) on realized spreads and initial strengths.

    `weights(m)` returns the (keep, gain) pair applied after a team's m-th
    match: ((m-1)/m, 1/m) for the temporalized method.
    """
    n = len(log.teams)
    spreads = [dict() for _ in range(n)]
    inits = [np.eye(n)[k] for k in range(n)]
    played = [0] * n
    for round_, matches in matches_by_round(log, t).items():
        previous_spreads = list(spreads)
        previous_inits = list(inits)
        for m in matches:
            for a, b in ((m.home, m.away), (m.away, m.home)):
                keep, gain = weights(played[a] + 1)
                blended = _blend(keep, previous_spreads[a], gain, previous_spreads[b])
                blended[(a, round_)] = blended.get((a, round_), 0.0) + gain
                spreads[a] = blended
                inits[a] = keep * previous_inits[a] + gain * previous_inits[b]
            played[m.home] += 1
            played[m.away] += 1
    return CoefficientTrace(i, t, spreads[i], inits[i])

def trace_coefficients(log, i, t):
    return trace_recurrence(log, i, t, lambda m: ((m - 1) / m, 1.0 / m))

def reconstruct_from_trace(trace, log, rho=None):
    rho = initial_strengths(len(log.teams), rho)
    spreads = spread_table(log, trace.round)
    total = sum(coefficient * spreads[k, l] for (k, l), coefficient in trace.spread_coeffs.items())
    return total + float(trace.init_coeffs @ rho)

def column_sums(trace, t=None):
    t = trace.round if t is None else t
    sums = np.zeros(t)
    for (_, l), coefficient in trace.spread_coeffs.items():
        sums[l - 1] += coefficient
    return sums

def trace_matrix(trace, n, t=None):
    t = trace.round if t is None else t
    matrix = np.zeros((n, t))
    for (k, l), coefficient in trace.spread_coeffs.items():
        matrix[k, l - 1] = coefficient
    return matrix

def harmonic_number(t):
    return math.fsum(1.0 / l for l in range(1, t + 1))

def spread_range(log, upto=None):
    spreads = spread_table(log, upto)[:, 1:]
    if spreads.size == 0:
        return 0.0, 0.0
    return float(spreads.min()), float(spreads.max())

def harmonic_range(t, min_spread, max_spread):
    """H_t and the range [H_t min s, H_t max s] of full round-robin ratings"""
    if t < 1:
        raise ValueError('t must be at least 1')
    h = harmonic_number(t)
    return h, h * min_spread, h * max_spread
