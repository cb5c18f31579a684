from . import constants

class TemporankError(Exception):
    exit_code = constants.EXIT_IO

class ConfigError(TemporankError, ValueError):
    exit_code = constants.EXIT_USAGE

class UnknownTeamError(ConfigError):
    def __init__(self, name):
        super().__init__('Unknown team: {}'.format(name))
        self.name = name

class ParseError(TemporankError, ValueError):
    exit_code = constants.EXIT_PARSE

    def __init__(self, message, row=None):
        if row is not None:
            message = 'row {}: {}'.format(row, message)
        super().__init__(message)
        self.row = row

class DataInvariantError(TemporankError, ValueError):
    exit_code = constants.EXIT_DATA

class NumericError(TemporankError, ArithmeticError):
    exit_code = constants.EXIT_NUMERIC

class DisconnectedGraph(NumericError):
    """Ratings are undefined across components of the match graph.

    Wait for more matches, or rate the components separately with
    `massey_static.solve_massey_by_component`.
    """
    def __init__(self, components):
        super().__init__('Match graph has {} connected components; '
                         'ratings are undefined across components'.format(components))
        self.components = components

class TeamWithoutMatches(NumericError):
    def __init__(self, teams):
        super().__init__('Teams without matches: {}'.format(', '.join(map(str, teams))))
        self.teams = teams

class SingularSystem(NumericError):
    pass
