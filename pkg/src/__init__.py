"""
Sinc-collocation solver for the KdV and KdV-Burgers equations
Theta-weighted time stepping, stability analysis and conservation diagnostics
"""

__version__ = "1.0.0"
