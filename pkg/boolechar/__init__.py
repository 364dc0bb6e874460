"""Character analogue of Boole summation: kernels, formulas and verification suites."""

__version__ = "0.1.0"
