from ._method import RatingMethod
from ..massey_temporal import rate_temporal, seed_strengths
from ..variants import constant_config, rate_constant

class TemporalMasseyMethod(RatingMethod):
    def __init__(self, prior=None, rho_factor=1.0):
        super().__init__()
        self.name = 'tmassey'
        self.prior = prior # team name -> previous-season rating
        self.rho_factor = rho_factor

    def settings(self):
        return {'rho_factor': self.rho_factor, 'seeded': self.prior is not None}

    def strengths(self, log):
        if self.prior is None:
            return None
        return seed_strengths(log, self.prior, self.rho_factor)

    def history(self, log, upto=None, hfa=0.0):
        return rate_temporal(log, self.strengths(log), upto)

class ConstantMasseyMethod(TemporalMasseyMethod):
    def __init__(self, alpha=0.9, prior=None, rho_factor=1.0):
        super().__init__(prior, rho_factor)
        self.name = 'cmassey'
        self.config = constant_config(alpha)

    def settings(self):
        settings = super().settings()
        settings['alpha'] = self.config.alpha
        return settings

    def history(self, log, upto=None, hfa=0.0):
        return rate_constant(log, self.config, self.strengths(log), upto)
