"""Gadget-graph construction and exhaustive verification toolkit."""

__version__ = "0.1.0"
