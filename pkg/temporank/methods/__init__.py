__all__ = ['massey', 'wmassey', 'tmassey', 'cmassey', 'colley', 'tcolley', 'elo', 'official']
from .prepare_method import prepare_method
