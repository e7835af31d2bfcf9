"""Exact skein-module computations on the quantum torus and Dehn-filling bounds."""
