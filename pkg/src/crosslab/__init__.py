"""Exact tooling for rectilinear crossing numbers of 3-symmetric point sets."""

__version__ = "0.1.0"
