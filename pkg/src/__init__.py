"""Equivariant Euler-characteristic obstructions of tame cyclic covers."""
