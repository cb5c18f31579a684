from ._method import RatingMethod
from .. import constants
from ..variants import elo_config, rate_elo

class EloMethod(RatingMethod):
    def __init__(self, kappa=25.0, zeta=400.0, initial=0.0, update_hfa=True):
        super().__init__()
        self.name = 'elo'
        self.hfa_grid = constants.ELO_HFA_GRID
        self.config = elo_config(kappa, zeta, initial, update_hfa)
        self.hfa_dependent = self.config.update_hfa

    def settings(self):
        return self.config._asdict()

    def history(self, log, upto=None, hfa=0.0):
        return rate_elo(log, self.config, hfa, upto)
