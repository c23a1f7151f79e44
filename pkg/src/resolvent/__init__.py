"""Resolvent divisor calculus."""
