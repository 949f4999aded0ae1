"""Controlled Bad Sequence Bounds Tool.

A CLI tool to compute maximal lengths of controlled bad sequences over
normed wqos and to bound them with ordinal-indexed hierarchies.
"""

__version__ = "0.1.0"
