"""Exact and floating-point kernels: scalars, characters, Euler/Bernoulli functions."""
