"""Exact computation lab for resolving and vertex-edge dominating graph parameters."""

__version__ = "0.1.0"
