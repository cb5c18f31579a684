from warnings import warn

import numpy as np

from .. import constants
from ..massey_temporal import RatingHistory
from ..matchlog import games_played
from ..utils import condense_rounds

class RatingMethod:
    def __init__(self):
        self.name = 'generic_method'
        self.hfa_grid = constants.SPREAD_HFA_GRID
        self.hfa_dependent = False # True if the ratings themselves depend on the hfa
        self.static = False

    def settings(self):
        return {}

    def history(self, log, upto=None, hfa=0.0):
        raise NotImplementedError

    def ranking_values(self, log, upto=None):
        """Per-round values a ranking snapshot orders teams by"""
        return self.history(log, upto).values

class StaticMethod(RatingMethod):
    """A method rated from scratch on all matches up to each round"""
    def __init__(self):
        super().__init__()
        self.baseline = 0.0
        self.static = True
        self.per_component_rounds = []

    def solve(self, log, upto):
        raise NotImplementedError

    def rate(self, log, upto=None):
        """Ratings after round `upto` alone, without the per-component fallback"""
        return self.solve(log, log.rounds if upto is None else upto)

    def history(self, log, upto=None, hfa=0.0):
        upto = log.rounds if upto is None else upto
        n = len(log.teams)
        values = np.full((n, upto + 1), self.baseline)
        self.per_component_rounds = []
        for t in range(1, upto + 1):
            values[:, t] = self.solve(log, t)
        if self.per_component_rounds:
            warn(RuntimeWarning('{}: match graph disconnected in rounds {}; rated per component'.format(
                self.name, condense_rounds(self.per_component_rounds))))
        return RatingHistory(values, games_played(log, upto))
