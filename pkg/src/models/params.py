from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)

from settings import DEFAULT_EPS_BUDGET, DEFAULT_SEED


def parse_fraction(value) -> Fraction:
    """Accept Fraction, int, "a/b" or decimal text; floats go through their repr (0.15 -> 3/20)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational number: {value!r}") from e
    raise ValueError(f"not a rational number: {value!r}")


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_fraction),
    PlainSerializer(lambda f: str(f), return_type=str),
]

Mode = Literal["linear", "general"]

DEFAULT_ELL = {"linear": 16, "general": 64}


class CodecParams(BaseModel):
    """Every tunable of the encoder/decoder pair."""

    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    n: int = Field(16, ge=1)
    r: int = Field(4, ge=2)
    ell: Optional[int] = Field(None, ge=1)
    T: int = Field(4, ge=1)
    k: int = Field(32, ge=1)
    mode: Mode = "linear"
    eps_ldc: Rational = Fraction(1, 2)
    eps_budget: Rational = DEFAULT_EPS_BUDGET

    q: Optional[int] = None
    d: Optional[int] = None
    nvars: Optional[int] = None
    reduction_poly: Optional[int] = None
    curve_degree: Literal[1, 2] = 2
    waive_field_range: bool = False

    @field_validator("eps_budget")
    @classmethod
    def budget_in_range(cls, value: Fraction) -> Fraction:
        if not 0 <= value < Fraction(1, 4):
            raise ValueError(f"eps_budget={value} must lie in [0, 1/4)")
        return value

    @field_validator("eps_ldc")
    @classmethod
    def eps_ldc_in_range(cls, value: Fraction) -> Fraction:
        if not 0 < value <= 1:
            raise ValueError(f"eps_ldc={value} must lie in (0, 1]")
        return value

    @model_validator(mode="after")
    def n_is_power_of_r(self) -> "CodecParams":
        power = 1
        while power < self.n:
            power *= self.r
        if power != self.n:
            raise ValueError(f"n={self.n} must equal r^D for some integer D (r={self.r})")
        return self

    @model_validator(mode="after")
    def general_mode_fills_every_slot(self) -> "CodecParams":
        # Slot a is first set in chunk a, so fewer chunks than sections leave slot r unset.
        if self.mode == "general" and self.resolved_ell < self.r:
            raise ValueError(f"general mode needs ell >= r (ell={self.resolved_ell}, r={self.r})")
        return self

    @property
    def resolved_ell(self) -> int:
        return self.ell if self.ell is not None else DEFAULT_ELL[self.mode]


class CliConfig(BaseModel):
    """Fully resolved CLI invocation: parameter file values overridden by flags."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    codec: CodecParams
    seed: int = DEFAULT_SEED
    seed_was_default: bool = True
    jobs: int = Field(1, ge=1)
    out: Optional[str] = None
