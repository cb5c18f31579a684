"""Comparison methods: constant-coefficient Massey, Colley (static and
temporalized), weighted Massey and Elo.

The time-varying ones share the round-by-round driver of massey_temporal,
so all of them see same-round matches as simultaneous.
"""
from collections import namedtuple

import numpy as np
from scipy import linalg as sla

from .errors import ConfigError, SingularSystem
from .massey_static import build_incidence, build_normal, massey_system, solve_massey
from .massey_temporal import RatingHistory, initial_strengths, run_recurrence, trace_recurrence
from .matchlog import matches_by_round, point_spread

ConstantCoeffConfig = namedtuple('ConstantCoeffConfig', ['alpha', 'beta'])
EloConfig = namedtuple('EloConfig', ['kappa', 'zeta', 'initial', 'update_hfa'])

WEIGHT_MODES = ('uniform', 'linear', 'log')
ELO_SCORES = {'win': 1.0, 'draw': 0.5, 'loss': 0.0}

def constant_config(alpha):
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ConfigError('alpha must lie in (0, 1), got {}'.format(alpha))
    return ConstantCoeffConfig(alpha, 1.0 - alpha)

def elo_config(kappa=25.0, zeta=400.0, initial=0.0, update_hfa=True):
    if not kappa > 0:
        raise ConfigError('kappa must be positive, got {}'.format(kappa))
    if not zeta > 0:
        raise ConfigError('zeta must be positive, got {}'.format(zeta))
    return EloConfig(float(kappa), float(zeta), float(initial), bool(update_hfa))

def rate_constant(log, cfg, rho=None, upto=None):
    alpha, beta = cfg

    def update(prev, i, j, s_i, m_i, m_j):
        return (alpha * prev[i] + beta * prev[j] + beta * s_i,
                alpha * prev[j] + beta * prev[i] - beta * s_i)

    return run_recurrence(log, rho, upto, update)

def rate_constant_expansion(log, cfg, rho=None, upto=None):
    """r_i(t) = alpha^m rho_i + beta * sum_k alpha^(m-k) (r_opp(t_k - 1) + s_i(t_k))"""
    alpha, beta = cfg
    n = len(log.teams)
    upto = log.rounds if upto is None else upto
    rho = initial_strengths(n, rho)
    values = np.zeros((n, upto + 1))
    values[:, 0] = rho
    counts = np.zeros((n, upto + 1), dtype=int)
    played = [[] for _ in range(n)]
    by_round = matches_by_round(log, upto)
    for t in range(1, upto + 1):
        for m in by_round[t]:
            played[m.home].append((t, m.away, point_spread(m, m.home)))
            played[m.away].append((t, m.home, point_spread(m, m.away)))
        for i in range(n):
            total = len(played[i])
            counts[i, t] = total
            values[i, t] = alpha ** total * rho[i] + beta * sum(
                alpha ** (total - k) * (values[j, t_k - 1] + s)
                for k, (t_k, j, s) in enumerate(played[i], start=1))
    return RatingHistory(values, counts)

def trace_constant_coefficients(log, cfg, i, t):
    alpha, beta = cfg
    return trace_recurrence(log, i, t, lambda m: (alpha, beta))

def _win_margin(log, upto):
    # wins minus losses; a draw is half a win and half a loss
    margin = np.zeros(len(log.teams))
    for m in log.matches:
        if m.round > upto:
            continue
        outcome = np.sign(m.home_score - m.away_score)
        margin[m.home] += outcome
        margin[m.away] -= outcome
    return margin

def rate_colley_static(log, upto=None, margin_weight=1.0):
    """Solve (2 + D_ii) r_i - sum_j A_ij r_j = 1 + margin_weight (w_i - l_i).

    margin_weight=0.5 gives Colley's original form. A single win solves to
    3/4 against 1/4 here, while `rate_colley_temporal` gives 5/6 against 1/6
    after the same round: its update sees the opponent's prior 1/2 instead of
    the opponent's simultaneous rating.
    """
    upto = log.rounds if upto is None else upto
    n = len(log.teams)
    colley = 2.0 * np.identity(n) + massey_system(log, upto).M
    rhs = 1.0 + margin_weight * _win_margin(log, upto)
    try:
        return sla.solve(colley, rhs, assume_a='pos')
    except (np.linalg.LinAlgError, sla.LinAlgError) as err:
        raise SingularSystem('Colley system is singular: {}'.format(err))

def rate_colley_temporal(log, upto=None, margin_weight=1.0):
    n = len(log.teams)
    margin = np.zeros(n)
    opponents = np.zeros(n)

    def update(prev, i, j, s_i, m_i, m_j):
        outcome = np.sign(s_i)
        margin[i] += outcome
        margin[j] -= outcome
        opponents[i] += prev[j]
        opponents[j] += prev[i]
        return ((1.0 + margin_weight * margin[i] + opponents[i]) / (2.0 + m_i),
                (1.0 + margin_weight * margin[j] + opponents[j]) / (2.0 + m_j))

    return run_recurrence(log, np.full(n, 0.5), upto, update)

def elo_expectation(d, zeta):
    return 1.0 / (1.0 + 10.0 ** (-d / zeta))

def _elo_score(spread):
    if spread > 0:
        return ELO_SCORES['win']
    if spread < 0:
        return ELO_SCORES['loss']
    return ELO_SCORES['draw']

def rate_elo(log, cfg, hfa=0.0, upto=None):
    n = len(log.teams)
    home_term = hfa if cfg.update_hfa else 0.0

    def update(prev, home, away, s_home, m_home, m_away):
        mu = elo_expectation(prev[home] - prev[away] + home_term, cfg.zeta)
        delta = cfg.kappa * (_elo_score(s_home) - mu)
        return prev[home] + delta, prev[away] - delta

    return run_recurrence(log, np.full(n, cfg.initial), upto, update)

def match_weights(log, upto=None, mode='linear'):
    """One positive weight per match up to `upto`, in log order"""
    upto = log.rounds if upto is None else upto
    rounds = np.array([m.round for m in log.matches if m.round <= upto], dtype=float)
    if mode == 'uniform':
        return np.ones_like(rounds)
    if mode == 'linear':
        return rounds
    if mode == 'log':
        return 1.0 + np.log(rounds)
    raise ConfigError('Unknown weights mode {!r}; choose from {}'.format(mode, ', '.join(WEIGHT_MODES)))

def weighted_system(log, w, upto=None):
    incidence = build_incidence(log, upto)
    w = np.asarray(w, dtype=float)
    if w.shape != incidence.y.shape:
        raise ConfigError('expected {} weights, got {}'.format(len(incidence.y), len(w)))
    if np.any(~np.isfinite(w)) or np.any(w <= 0):
        raise ConfigError('weights must be positive')
    return build_normal(incidence, weights=w)

def rate_massey_weighted(log, w, upto=None):
    """Solve X^T W X r = X^T W y with sum(r) = 0"""
    return solve_massey(weighted_system(log, w, upto))
