from pydantic import BaseModel, ConfigDict

from .allocation import Allocation
from .rational import Rational


class QuantizedSearchResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    best_allocation: Allocation
    best_probability: Rational
    quantum_denominator: int
    allocations_evaluated: int


class MonteCarloEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    estimate: float
    standard_error: float
    trials: int
    successes: int
    seed: int
    generator: str
    generator_version: str
    chunk_trials: int
