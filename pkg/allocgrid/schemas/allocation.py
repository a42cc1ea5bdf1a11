from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .rational import Rational


class ProblemInstance(BaseModel):
    """The triple (n, p, T): n nodes, access probability p, storage budget T"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    p: Rational
    T: Rational

    @model_validator(mode="after")
    def _check_ranges(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not 0 < self.p < 1:
            raise ValueError(f"p must lie strictly in (0, 1), got {self.p}")
        if not 1 <= self.T <= self.n:
            raise ValueError(f"T must lie in [1, n] = [1, {self.n}], got {self.T}")
        return self


class Allocation(BaseModel):
    """
    Multiset of nonnegative storage amounts.

    Amounts are kept sorted in non-increasing order so that permutations of the
    same multiset compare equal.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    amounts: Tuple[Rational, ...]

    @field_validator("amounts")
    @classmethod
    def _canonical(cls, amounts: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
        for x in amounts:
            if x < 0:
                raise ValueError(f"Storage amounts must be nonnegative, got {x}")
        return tuple(sorted(amounts, reverse=True))

    @property
    def total(self) -> Fraction:
        return sum(self.amounts, Fraction(0))

    def padded(self, n: int) -> Tuple[Fraction, ...]:
        return self.amounts + (Fraction(0),) * (n - len(self.amounts))


class SymmetricSpec(BaseModel):
    """x̄(n, T, m): m nodes holding T/m each, the remaining n - m empty"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1)
    T: Rational
    m: int

    @model_validator(mode="after")
    def _check_m(self):
        if not 1 <= self.m <= self.n:
            raise ValueError(f"m must lie in [1, n] = [1, {self.n}], got {self.m}")
        if self.T < 0:
            raise ValueError(f"T must be nonnegative, got {self.T}")
        return self


class SubsetCount(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r: int
    successful_subsets: int
    total_subsets: int
    upper_bound: Rational


class SubsetProfile(BaseModel):
    """S_r for every access-set size r, plus the probability rebuilt from them"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    counts: List[SubsetCount]
    recovery_probability: Rational
