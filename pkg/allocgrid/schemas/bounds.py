from typing import Optional

from pydantic import BaseModel, ConfigDict

from .rational import Rational


class BoundsReport(BaseModel):
    """
    Upper bounds and the suboptimality certificate for maximal spreading.

    lemma1_upper - spread_all_p_s == theorem1_gap holds exactly;
    chernoff_envelope is only present when pT > 1.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lemma1_upper: Rational
    theorem1_gap: Rational
    chernoff_envelope: Optional[float] = None
    markov_cap: Rational
    spread_all_p_s: Rational
