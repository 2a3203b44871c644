"""Exact computer algebra for Takiff algebras: central elements of U(g_ell) and
Segal-Sugawara vectors at the critical level."""

__version__ = "0.1.0"
