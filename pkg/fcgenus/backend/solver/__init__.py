"""Maximum genus pipeline and theorem checkers."""

from .genus_solver import (
    corollary1_check,
    cut_between,
    maximum_genus,
    theorem4_increment,
    theorem5_check,
    verify_report,
)

__all__ = [
    'corollary1_check',
    'cut_between',
    'maximum_genus',
    'theorem4_increment',
    'theorem5_check',
    'verify_report',
]
