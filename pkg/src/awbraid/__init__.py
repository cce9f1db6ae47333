"""Exact computer algebra for the three-strand Askey-Wilson braid algebra.

The package realizes the finite-dimensional quotient algebra presented by
braid generators with a degree-(2s+1) characteristic equation plus the
Askey-Wilson relations, and cross-checks it against the explicitly built
centralizer of the diagonal quantum-group action on three spin-s factors.
"""

from .halfint import HalfInt, halfint_range
from .laurent import LaurentQ, chi, cyclotomic, qfactor, qint
from .ratq import PoleError, RatQ, eval_q, ratq_arith
from .kpoly import KPoly, kpoly_rem
from .cyclo import CycloElem, cyclo_limit, cyclo_limit_with_valuations, phi_valuation

__version__ = "0.1.0"

__all__ = [
    "HalfInt",
    "halfint_range",
    "LaurentQ",
    "chi",
    "qfactor",
    "qint",
    "cyclotomic",
    "RatQ",
    "PoleError",
    "ratq_arith",
    "eval_q",
    "KPoly",
    "kpoly_rem",
    "CycloElem",
    "cyclo_limit",
    "cyclo_limit_with_valuations",
    "phi_valuation",
    "__version__",
]
