import configparser
import math
import os
from warnings import warn

from .constants import globalconfigfile, localconfigfile, output_dir_env
from .errors import ConfigError
from .utils import ensure_temporank_folder_exists
from .variants import WEIGHT_MODES
from . import methods

defaults = {
    'DEFAULT': {
        'output_dir': '',
        'format': 'csv',
        'record_history': 'yes',
        'workers': '1',
    },
    'massey': {},
    'wmassey': {'weights': 'linear'},
    'tmassey': {'rho_factor': '1.0'},
    'cmassey': {'alpha': '0.9', 'rho_factor': '1.0'},
    'colley': {'margin_weight': '1.0'},
    'tcolley': {'margin_weight': '1.0'},
    'elo': {'kappa': '25', 'zeta': '400', 'initial': '0', 'update_hfa': 'yes'},
    'official': {},
}

def ensure_initialized():
    ensure_temporank_folder_exists()
    if not os.path.exists(localconfigfile):
        settings = configparser.ConfigParser()
        settings.read_dict(defaults)
        with open(localconfigfile, 'w') as config_file:
            settings.write(config_file)

def print_config(config):
    print('[DEFAULT]')
    for key, value in config.defaults().items():
        print('{} = {}'.format(key, value))
    print()
    for section in config.sections():
        print('[{}]'.format(section))
        for key, value in config.items(section):
            if key in config.defaults() and config.defaults()[key] == value:
                continue
            print('{} = {}'.format(key, value))
        print()

def get_active_config():
    """Defaults, then the global file, then the local file"""
    settings = configparser.ConfigParser()
    settings.read_dict(defaults)
    settings.read(globalconfigfile)
    settings.read(localconfigfile)
    return settings

def output_dir(settings):
    return os.environ.get(output_dir_env) or settings['DEFAULT'].get('output_dir') or None

def _get(section, key, parse):
    try:
        return parse(section, key)
    except ValueError:
        raise ConfigError('Invalid value for {}.{}: {!r}'.format(section.name, key, section.get(key)))

def method_settings(settings, name, overrides=None):
    """Validated constants for one method: config files first, then non-None overrides"""
    if name not in methods.__all__:
        raise ConfigError('Invalid method: {}'.format(name))
    section = settings[name]
    resolved = {}
    if name == 'cmassey':
        resolved['alpha'] = _get(section, 'alpha', lambda s, k: s.getfloat(k))
    if name in ('tmassey', 'cmassey'):
        resolved['rho_factor'] = _get(section, 'rho_factor', lambda s, k: s.getfloat(k))
    if name in ('colley', 'tcolley'):
        resolved['margin_weight'] = _get(section, 'margin_weight', lambda s, k: s.getfloat(k))
    if name == 'wmassey':
        resolved['weights'] = section.get('weights')
    if name == 'elo':
        for key in ('kappa', 'zeta', 'initial'):
            resolved[key] = _get(section, key, lambda s, k: s.getfloat(k))
        resolved['update_hfa'] = _get(section, 'update_hfa', lambda s, k: s.getboolean(k))
    for key, value in (overrides or {}).items():
        if value is not None and (key in resolved or key == 'prior'):
            resolved[key] = value
    validate_settings(name, resolved)
    return resolved

def validate_settings(name, resolved):
    alpha = resolved.get('alpha')
    if alpha is not None and not 0.0 < alpha < 1.0:
        raise ConfigError('{}: alpha must lie in (0, 1), got {}'.format(name, alpha))
    for key in ('kappa', 'zeta', 'margin_weight'):
        value = resolved.get(key)
        if value is not None and not value > 0:
            raise ConfigError('{}: {} must be positive, got {}'.format(name, key, value))
    rho_factor = resolved.get('rho_factor')
    if rho_factor is not None and not math.isfinite(rho_factor):
        raise ConfigError('{}: rho_factor must be finite'.format(name))
    weights = resolved.get('weights')
    if weights is not None and weights not in WEIGHT_MODES:
        raise ConfigError('{}: unknown weights mode {!r}; choose from {}'.format(
            name, weights, ', '.join(WEIGHT_MODES)))

def config(args):
    if args.read and args.write:
        raise ConfigError('Cannot read and write at the same time.')
    if args.read and args.global_ and args.local:
        args.global_ = False
        args.local = False
    if args.write and args.global_ and args.local:
        raise ConfigError('Cannot write to global and local config files simultaneously.')

    settings = configparser.ConfigParser()
    ensure_initialized()
    settings.read_dict(defaults)
    if args.global_ or not args.local:
        settings.read(globalconfigfile)
    if args.local or not args.global_:
        settings.read(localconfigfile)

    if args.write:
        for (section, key, value) in args.write:
            if section != 'DEFAULT' and section not in methods.__all__:
                warn('Unable to set {}.{}={} (invalid section: {}).'.format(section, key, value, section))
                continue
            settings[section][key] = value

        target = globalconfigfile if args.global_ else localconfigfile
        with open(target, 'w') as config_file:
            settings.write(config_file)
    else:
        print_config(settings)
