"""pga-kit - Projective geometric algebra for the euclidean plane and space."""

from importlib.metadata import version

__version__ = version("pga-kit")
