"""The modular-curve family of cyclic covers."""
