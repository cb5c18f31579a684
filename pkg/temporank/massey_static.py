"""The original (static) Massey least-squares rating and its Laplacian spectrum"""
from collections import namedtuple
import math

import numpy as np

from . import constants
from .errors import DisconnectedGraph, TeamWithoutMatches
from .linalg import connected_components as _components, jacobi_eigenvalues, solve_zero_sum

IncidenceSystem = namedtuple('IncidenceSystem', ['X', 'y', 'upto'])
MasseySystem = namedtuple('MasseySystem', ['M', 'p', 'games', 'A'])
RatingDecomposition = namedtuple('RatingDecomposition', ['opponents', 'spread'])
SpectralReport = namedtuple('SpectralReport',
                            ['eigenvalues', 'algebraic_connectivity', 'bound_rhs',
                             'general_bound', 'deviation', 'connected', 'components'])

def build_incidence(log, upto=None):
    """One row per match up to round `upto`: +1 for the winner, -1 for the loser.

    On a draw the home team takes the +1 and the margin is 0.
    """
    upto = log.rounds if upto is None else upto
    matches = [m for m in log.matches if m.round <= upto]
    X = np.zeros((len(matches), len(log.teams)))
    y = np.zeros(len(matches))
    for k, m in enumerate(matches):
        if m.away_score > m.home_score:
            winner, loser = m.away, m.home
        else:
            winner, loser = m.home, m.away
        X[k, winner] = 1.0
        X[k, loser] = -1.0
        y[k] = abs(m.home_score - m.away_score)
    return IncidenceSystem(X, y, upto)

def build_normal(sys, weights=None):
    X, y = sys.X, sys.y
    if weights is None:
        M = X.T @ X
        p = X.T @ y
    else:
        w = np.asarray(weights, dtype=float)
        M = X.T @ (w[:, None] * X)
        p = X.T @ (w * y)
    games = np.diag(M).copy()
    A = np.diag(games) - M
    return MasseySystem(M, p, games, A)

def massey_system(log, upto=None):
    return build_normal(build_incidence(log, upto))

def connected_components(sys):
    return _components(sys.A)

def solve_massey(sys):
    """Zero-sum least-squares ratings r solving M r = p.

    Raises DisconnectedGraph when the match graph has more than one component.
    """
    n_components, _ = connected_components(sys)
    if n_components > 1:
        raise DisconnectedGraph(n_components)
    return solve_zero_sum(sys.M, sys.p)

def solve_massey_by_component(sys):
    """Rate every connected component on its own (zero-sum within each)"""
    n_components, labels = connected_components(sys)
    r = np.zeros(len(sys.p))
    for component in range(n_components):
        members = np.flatnonzero(labels == component)
        if len(members) < 2:
            continue
        block = np.ix_(members, members)
        r[members] = solve_zero_sum(sys.M[block], sys.p[members])
    return r

def decompose_rating(sys, r):
    """Split r into the mean rating of the opponents and the mean point spread"""
    games = sys.games
    idle = np.flatnonzero(games == 0)
    if len(idle):
        raise TeamWithoutMatches(idle.tolist())
    opponents = (sys.A @ r) / games
    spread = sys.p / games
    return RatingDecomposition(opponents, spread)

def spectral_report(sys, r=None):
    n = len(sys.p)
    eigenvalues = jacobi_eigenvalues(sys.M)
    components = int(np.sum(eigenvalues < constants.ZERO_EIGENVALUE))
    lambda_2 = float(eigenvalues[1]) if n > 1 else 0.0
    connected = lambda_2 > constants.ZERO_EIGENVALUE
    p_norm = float(np.linalg.norm(sys.p))
    if connected:
        bound_rhs = p_norm * (n - lambda_2) / (n * lambda_2)
        general_bound = p_norm * max(abs(1.0 / lam - 1.0 / n) for lam in eigenvalues[1:])
    else:
        bound_rhs = general_bound = math.inf
    deviation = float(np.linalg.norm(r - sys.p / n)) if r is not None and n else math.nan
    return SpectralReport(eigenvalues, lambda_2, bound_rhs, general_bound, deviation,
                          connected, components)
