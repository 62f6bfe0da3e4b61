"""Exact construction of the Penrose dodecahedron, Witting polytope and E8
ray systems, with Kochen-Specker colorability and parity-proof analysis."""

__version__ = "0.1.0"
