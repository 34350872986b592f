"""Exact q-series, E8 lattice counts and degree tables for bisection-type Severi counts."""

__version__ = "0.1.0"

from .qseries import QSeries, divisor_sum, e4_infinity, eisenstein, theta  # noqa: E402
from .e8 import E8Vector, NoDecompositionError, ORDINARY, WEIERSTRASS  # noqa: E402
from .report import CheckReport  # noqa: E402

__all__ = [
    "__version__",
    "QSeries",
    "divisor_sum",
    "eisenstein",
    "theta",
    "e4_infinity",
    "E8Vector",
    "NoDecompositionError",
    "ORDINARY",
    "WEIERSTRASS",
    "CheckReport",
]
