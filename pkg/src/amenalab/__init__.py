"""Computational laboratory for fair amenability of semigroups."""
