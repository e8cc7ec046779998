"""Exact computations for Lie algebras twisted by invertible derivations."""
