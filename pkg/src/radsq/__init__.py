"""Homological structure of radical square zero algebras ``kQ/J^2``.

``quiver``        quiver data, Ext-quiver predicates, Delta(n, t) detection
``ext``           integer syzygy calculus and theorem-level checks
``rep``           explicit modules over F_p: resolutions, Ext, duality, AR translate
``constructions`` Tr D S(0), the envelope sequence of P(n-1), CM and AR checks
``harness``       corpus enumeration, oracle comparison, JSON-lines reports
"""

from .errors import ParseError, TheoremViolation, UsageError
from .quiver import DeltaShape, Quiver, delta_quiver, detect_delta_shape, parse_quiver

__all__ = [
    "DeltaShape",
    "ParseError",
    "Quiver",
    "TheoremViolation",
    "UsageError",
    "delta_quiver",
    "detect_delta_shape",
    "parse_quiver",
]
