"""Exact index and monogenity analysis for trinomial number fields."""

__version__ = "0.1.0"
