"""Major-index distributions on Delannoy and Schroeder lattice paths."""

__version__ = "0.1.0"
