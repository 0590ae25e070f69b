"""Exact verification engine for the super-Jordanian deformation U_h(sl(N|1))."""

__version__ = "0.1.0"
