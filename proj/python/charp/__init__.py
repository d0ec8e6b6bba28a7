"""Python bindings for the charp library.

Polynomials are entered as strings in the same grammar as the command line
(``x^2+v*y^2``), or as ``Polynomial`` objects obtained from a ``Ring``.
"""

from ._charp import CharpError, Polynomial, Ring, run

__all__ = ["CharpError", "Polynomial", "Ring", "run"]
