"""Exact bilinear matrix multiplication schemes: verification, composition, flip-graph search and execution."""

from .algebra import SplitAxis, direct_sum, kronecker, mod_reduce, rotate
from .bundled import bundled_names, bundled_path, certify_bundled, load_bundled
from .exceptions import (
    FormatMismatchError,
    InadmissibleMoveError,
    ParseErrorCode,
    RingError,
    SchemeError,
    SchemeFileError,
    SearchInvariantError,
    StructuralError,
    WalkRejectedError,
)
from .generators import standard_scheme, strassen_scheme
from .known_ranks import KnownRankRegistry, known_ranks
from .models import CoeffMatrix, FactorPosition, Format, KnownRankEntry, RankOneTerm, Scheme, VerificationReport
from .ring import RingKind, RingSpec
from .verification import is_valid, target_tensor, verify

__all__ = [
    "CoeffMatrix",
    "FactorPosition",
    "Format",
    "FormatMismatchError",
    "InadmissibleMoveError",
    "KnownRankEntry",
    "KnownRankRegistry",
    "ParseErrorCode",
    "RankOneTerm",
    "RingError",
    "RingKind",
    "RingSpec",
    "Scheme",
    "SchemeError",
    "SchemeFileError",
    "SearchInvariantError",
    "SplitAxis",
    "StructuralError",
    "VerificationReport",
    "WalkRejectedError",
    "bundled_names",
    "bundled_path",
    "certify_bundled",
    "direct_sum",
    "is_valid",
    "known_ranks",
    "kronecker",
    "load_bundled",
    "mod_reduce",
    "rotate",
    "standard_scheme",
    "strassen_scheme",
    "target_tensor",
    "verify",
]
