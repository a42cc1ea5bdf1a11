from .rational import Rational
from .probability import BinomialSpec
from .allocation import ProblemInstance, Allocation, SymmetricSpec, SubsetCount, SubsetProfile
from .symmetric import CandidateEntry, CandidateReport, DeltaValue, Verdict, RegionFlags, RegionClass
from .bounds import BoundsReport
from .oracle import QuantizedSearchResult, MonteCarloEstimate

__all__ = [
    "Rational",
    "BinomialSpec",
    "ProblemInstance",
    "Allocation",
    "SymmetricSpec",
    "SubsetCount",
    "SubsetProfile",
    "CandidateEntry",
    "CandidateReport",
    "DeltaValue",
    "Verdict",
    "RegionFlags",
    "RegionClass",
    "BoundsReport",
    "QuantizedSearchResult",
    "MonteCarloEstimate",
]
