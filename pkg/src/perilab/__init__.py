"""Computational toolkit for the periplectic Deligne category."""

__version__ = "0.1.0"
