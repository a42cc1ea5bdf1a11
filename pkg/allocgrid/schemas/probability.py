from pydantic import BaseModel, ConfigDict, Field, model_validator

from .rational import Rational


class BinomialSpec(BaseModel):
    """B(trials, success_prob) with 0 < success_prob < 1"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    trials: int = Field(ge=0)
    success_prob: Rational

    @model_validator(mode="after")
    def _check_prob(self):
        if not 0 < self.success_prob < 1:
            raise ValueError(f"success_prob must lie strictly in (0, 1), got {self.success_prob}")
        return self
