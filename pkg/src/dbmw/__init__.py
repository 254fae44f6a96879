"""Exact computations for the D-type BMW algebra, its Hecke quotients and the dotted diagram model."""

__version__ = "0.1.0"
