"""Encoding of exact results."""
