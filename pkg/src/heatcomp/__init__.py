"""Heat evolution of indicator initial data on constant-curvature planes.

The package computes temperatures f(t, x) = integral over a domain of the
heat kernel, and mechanizes geometric criteria that decide which of two
points is initially hotter: distance from the complement, spherical area
functions, boundary mean curvature, regular-polygon maximization, and
Steiner symmetrization, plus hottest-point dynamics and small-time tube
asymptotics with independent oracles for each.
"""

from . import compare, geometry, heat, hotspot, kernel, symmetrize, tube

__all__ = ["compare", "geometry", "heat", "hotspot", "kernel", "symmetrize", "tube"]
__version__ = "0.1.0"
