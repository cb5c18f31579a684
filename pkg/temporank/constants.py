import os

# Basic constants
temporank_folder = '.temporank'
run_index = os.path.join(temporank_folder, 'run_index.csv') # id,date,time,subcommand,method,status,args
globalconfigfile = os.path.join(os.path.expanduser('~'), '.temporankconfig')
localconfigfile = os.path.join(temporank_folder, 'config')
output_dir_env = 'TEMPORANK_OUTPUT_DIR'

# Canonical file schemas
MATCH_HEADER = ['round', 'date', 'home', 'away', 'home_goals', 'away_goals']
FIXTURE_COLUMNS = ['Date', 'HomeTeam', 'AwayTeam', 'FTHG', 'FTAG']
STANDINGS_HEADER = ['team', 'points', 'goal_diff', 'goals_for', 'rank']
RATINGS_HEADER = ['team', 'rating']
HISTORY_HEADER = ['team', 'round', 'rating', 'games']
TRACE_HEADER = ['team', 'round', 'coefficient']
ACCURACY_HEADER = ['round', 'correct', 'decisive', 'accuracy']
HISTOGRAM_HEADER = ['bin_low', 'bin_high', 'count']
CORRELATION_HEADER = ['round', 'pair', 'tau']
TRAJECTORY_HEADER = ['team', 'round', 'rating', 'rank']
CALIBRATION_HEADER = ['hfa', 'accuracy']
TABLE_HEADER = ['method', 'accuracy', 'hfa', 'accuracy_hfa']
SPECTRAL_HEADER = ['quantity', 'value']
SUMMARY_HEADER = ['statistic', 'value']
VIOLATION_HEADER = ['kind', 'round', 'team', 'message']

# Points for a win, a draw and a loss
WIN_POINTS = 3
DRAW_POINTS = 1

# Numerical tolerances
ZERO_EIGENVALUE = 1e-8
JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100
RESIDUAL_TOLERANCE = 1e-9
RANK_DECIMALS = 9

# Home-field grids (min, max, step) per method family
SPREAD_HFA_GRID = (0.0, 2.0, 0.01)
ELO_HFA_GRID = (0.0, 200.0, 1.0)
COLLEY_HFA_GRID = (0.0, 0.2, 0.001)
OFFICIAL_HFA_GRID = (0.0, 3.0, 0.01)

# Exit codes
EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DATA = 4
EXIT_NUMERIC = 5
