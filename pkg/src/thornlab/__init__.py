"""Hyper Zagreb index audits for generalized thorn graphs."""

__version__ = "0.1.0"
