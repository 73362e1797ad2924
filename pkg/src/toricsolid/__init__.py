"""Toric Fano threefolds as lattice data: Weyl groups, orbits, class groups,
solidity predicates, monomial birational maps and invariant torus subgroups."""

__version__ = "0.1.0"
