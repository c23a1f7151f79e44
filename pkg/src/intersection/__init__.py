"""Intersection forms and exponent vectors."""
