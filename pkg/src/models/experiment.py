from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.params import CodecParams, Rational
from settings import DEFAULT_SEED


AlgorithmId = Literal["parity", "dot", "index", "dfa", "sum", "count"]
ChannelKind = Literal["random", "prefix_burst", "copy_targeted", "symbol_targeted", "periodic"]


class AlgorithmSpec(BaseModel):
    id: AlgorithmId = "dot"
    x: Optional[str] = None  # hex literal (0x...) or bit string, n bits, first bit = x_1
    y: Optional[str] = None
    target: Optional[int] = Field(None, ge=0)
    modulus: int = Field(2, ge=2)


class ChannelSpec(BaseModel):
    kind: ChannelKind = "random"
    copies: Optional[list[int]] = None
    # message index (1-based) whose outer symbol a symbol_targeted channel attacks
    target_index: Optional[int] = Field(None, ge=1)
    budget_check: bool = True


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    codec: CodecParams
    algorithm: AlgorithmSpec
    channels: list[ChannelSpec] = Field(default_factory=lambda: [ChannelSpec()])
    rhos: list[Rational] = Field(default_factory=lambda: [Fraction(0)])
    trials: int = Field(1, ge=1)
    decoder_seed: int = DEFAULT_SEED
    decoder_stride: int = 1
    channel_seed: int = DEFAULT_SEED + 1
    channel_stride: int = 1
    allow_over_budget: bool = False
    jobs: int = Field(1, ge=1)
    per_trial_csv: Optional[str] = None

    @model_validator(mode="after")
    def rhos_within_budget(self) -> "ExperimentConfig":
        limit = Fraction(1, 4) - self.codec.eps_budget
        for rho in self.rhos:
            if rho < 0 or rho > 1:
                raise ValueError(f"rho={rho} outside [0, 1]")
            if rho > limit and not self.allow_over_budget:
                raise ValueError(
                    f"rho={rho} exceeds the 1/4 - eps budget ({limit}); "
                    "set allow_over_budget to explore failure curves"
                )
        return self
