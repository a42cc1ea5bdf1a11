from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict

from .rational import Rational


class CandidateEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: int
    p_s: Rational


class CandidateReport(BaseModel):
    """Evaluated candidate m values; best_m is the smallest m attaining best_p_s"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    candidates: List[CandidateEntry]
    best_m: int
    best_p_s: Rational

    @property
    def argmax_ms(self) -> List[int]:
        return [c.m for c in self.candidates if c.p_s == self.best_p_s]


class DeltaValue(BaseModel):
    """Δ(p, T, k) = P_S(m=⌊(k+1)T⌋) − P_S(m=⌊kT⌋), with α = ⌊(k+1)T⌋ − ⌊kT⌋"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    alpha: int
    value: Rational


class Verdict(str, Enum):
    MAX_SPREAD = "MaxSpreadOptimal"
    MIN_SPREAD = "MinSpreadOptimal"
    BOTH = "MaxSpreadOptimal+MinSpreadOptimal"
    UNRESOLVED = "Unresolved"


class RegionFlags(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem2: bool
    theorem3: bool
    lemma2: bool
    lemma3_eq: bool
    lemma3_ineq: bool
    lemma4: bool

    @property
    def max_spread(self) -> bool:
        return self.theorem2 or self.lemma2

    @property
    def min_spread(self) -> bool:
        return self.theorem3 or self.lemma4 or self.lemma3_eq or self.lemma3_ineq


class RegionClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    flags: RegionFlags
