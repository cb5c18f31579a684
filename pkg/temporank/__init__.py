"""Massey and temporalized Massey ratings for round-based seasons"""
from .matchlog import MatchLog, MatchRecord, Team, parse_csv, parse_fixtures_csv, infer_rounds
from .massey_static import massey_system, solve_massey, spectral_report
from .massey_temporal import rate_temporal, trace_coefficients
from .methods import prepare_method

__version__ = '0.1.0'
