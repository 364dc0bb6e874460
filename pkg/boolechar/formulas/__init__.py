"""Summation formulas, the alternating L-function and Hardy-Berndt sums."""
