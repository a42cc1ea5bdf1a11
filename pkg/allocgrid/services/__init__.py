from .probability_service import ProbabilityService
from .allocation_service import AllocationService
from .symmetric_service import SymmetricService
from .bounds_service import BoundsService
from .oracle_service import OracleService
from .sweep_service import SweepService

__all__ = [
    "ProbabilityService",
    "AllocationService",
    "SymmetricService",
    "BoundsService",
    "OracleService",
    "SweepService",
]
