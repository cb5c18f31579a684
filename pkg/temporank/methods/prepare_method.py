from . import massey, temporal, colley, elo, official
from ..errors import ConfigError

def prepare_method(name, settings=None):
    settings = dict(settings or {})
    if name == 'massey':
        method = massey.MasseyMethod()
    elif name == 'wmassey':
        method = massey.WeightedMasseyMethod(weights=settings.get('weights', 'linear'))
    elif name == 'tmassey':
        method = temporal.TemporalMasseyMethod(prior=settings.get('prior'),
                                               rho_factor=settings.get('rho_factor', 1.0))
    elif name == 'cmassey':
        method = temporal.ConstantMasseyMethod(alpha=settings.get('alpha', 0.9),
                                               prior=settings.get('prior'),
                                               rho_factor=settings.get('rho_factor', 1.0))
    elif name == 'colley':
        method = colley.ColleyMethod(margin_weight=settings.get('margin_weight', 1.0))
    elif name == 'tcolley':
        method = colley.TemporalColleyMethod(margin_weight=settings.get('margin_weight', 1.0))
    elif name == 'elo':
        method = elo.EloMethod(kappa=settings.get('kappa', 25.0),
                               zeta=settings.get('zeta', 400.0),
                               initial=settings.get('initial', 0.0),
                               update_hfa=settings.get('update_hfa', True))
    elif name == 'official':
        method = official.OfficialMethod()
    else:
        raise ConfigError('Invalid method: {}'.format(name))
    return method
