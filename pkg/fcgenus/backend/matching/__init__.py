"""Maximum-cardinality matching on general graphs."""

from .blossom import Matching, SimpleGraph, is_valid_matching, max_matching

__all__ = ['Matching', 'SimpleGraph', 'is_valid_matching', 'max_matching']
