from ._method import RatingMethod, StaticMethod
from .. import constants
from ..variants import rate_colley_static, rate_colley_temporal

class ColleyMethod(StaticMethod):
    def __init__(self, margin_weight=1.0):
        super().__init__()
        self.name = 'colley'
        self.baseline = 0.5
        self.hfa_grid = constants.COLLEY_HFA_GRID
        self.margin_weight = margin_weight

    def settings(self):
        return {'margin_weight': self.margin_weight}

    def solve(self, log, upto):
        return rate_colley_static(log, upto, self.margin_weight)

class TemporalColleyMethod(RatingMethod):
    def __init__(self, margin_weight=1.0):
        super().__init__()
        self.name = 'tcolley'
        self.hfa_grid = constants.COLLEY_HFA_GRID
        self.margin_weight = margin_weight

    def settings(self):
        return {'margin_weight': self.margin_weight}

    def history(self, log, upto=None, hfa=0.0):
        return rate_colley_temporal(log, upto, self.margin_weight)
