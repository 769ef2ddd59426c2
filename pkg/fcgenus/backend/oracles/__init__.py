"""Brute-force oracles used to cross-check the pipeline."""

from .brute_force import (
    XiOracleResult,
    count_spanning_trees,
    enumerate_spanning_trees,
    genus_oracle,
    has_augmenting_path,
    matching_oracle,
    xi_oracle,
)

__all__ = [
    'XiOracleResult',
    'count_spanning_trees',
    'enumerate_spanning_trees',
    'genus_oracle',
    'has_augmenting_path',
    'matching_oracle',
    'xi_oracle',
]
