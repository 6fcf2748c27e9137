"""Linear-form extremal problems in Hardy spaces of the bidisc.

Exact polynomial certificates, H^p and dual-norm numerics for
phi = c1 z1 + c2 z2 on T^2, and the resulting classification of
Wirtinger derivative pairs of harmonic self-maps of the disc.
"""

from .errors import (
    BidiscError,
    ExactBorderline,
    InexactDivision,
    NoConvergence,
    NonzeroRemainder,
    NotFound,
    SlowConvergence,
)
from .exact import GaussianRational, PiExt, RatPoly, Rational
from .norms import LinearForm, hp_norm
from .dual import h4_dual_norm, hq_dual_norm, ratio_curve
from .schwarz import Verdict, classify

__version__ = "0.1.0"

__all__ = [
    "BidiscError",
    "ExactBorderline",
    "GaussianRational",
    "InexactDivision",
    "LinearForm",
    "NoConvergence",
    "NonzeroRemainder",
    "NotFound",
    "PiExt",
    "RatPoly",
    "Rational",
    "SlowConvergence",
    "Verdict",
    "classify",
    "h4_dual_norm",
    "hp_norm",
    "hq_dual_norm",
    "ratio_curve",
]
