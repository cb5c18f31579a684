from ._method import StaticMethod
from ..errors import DisconnectedGraph
from ..massey_static import massey_system, solve_massey, solve_massey_by_component
from ..variants import match_weights, weighted_system

class MasseyMethod(StaticMethod):
    def __init__(self):
        super().__init__()
        self.name = 'massey'

    def system(self, log, upto):
        return massey_system(log, upto)

    def solve(self, log, upto):
        sys = self.system(log, upto)
        try:
            return solve_massey(sys)
        except DisconnectedGraph:
            self.per_component_rounds.append(upto)
            return solve_massey_by_component(sys)

    def rate(self, log, upto=None):
        return solve_massey(self.system(log, log.rounds if upto is None else upto))

class WeightedMasseyMethod(MasseyMethod):
    def __init__(self, weights='linear'):
        super().__init__()
        self.name = 'wmassey'
        self.weights = weights

    def settings(self):
        return {'weights': self.weights}

    def system(self, log, upto):
        return weighted_system(log, match_weights(log, upto, self.weights), upto)
