"""Quantum trace maps for ideally triangulated cusped 3-manifolds."""

__version__ = "0.1.0"
