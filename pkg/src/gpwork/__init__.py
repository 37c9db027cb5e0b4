"""Workbench for graph products of cyclic groups: defining-graph algebra,
word arithmetic, cube complexes, embeddings, and surface-subgroup
classification."""

__version__ = "0.1.0"
