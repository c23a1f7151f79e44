"""Group-ring arithmetic over (Z/m)^x."""

from src.galois.ring import GaloisRingElement, RingModulusError

__all__ = ["GaloisRingElement", "RingModulusError"]
