import numpy as np

from ._method import RatingMethod
from .. import constants
from ..massey_temporal import RatingHistory
from ..matchlog import games_played, official_standings

class OfficialMethod(RatingMethod):
    """League points; goal difference breaks ties when predicting"""
    def __init__(self):
        super().__init__()
        self.name = 'official'
        self.hfa_grid = constants.OFFICIAL_HFA_GRID

    def _table(self, log, upto, rating):
        upto = log.rounds if upto is None else upto
        values = np.zeros((len(log.teams), upto + 1))
        for t in range(1, upto + 1):
            values[:, t] = [rating(row) for row in official_standings(log, t)]
        return values, upto

    def history(self, log, upto=None, hfa=0.0):
        values, upto = self._table(log, upto, lambda row: row.points + row.goal_diff / 1000.0)
        return RatingHistory(values, games_played(log, upto))

    def ranking_values(self, log, upto=None):
        return self._table(log, upto, lambda row: float(row.points))[0]
