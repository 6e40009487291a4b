"""JSON pattern files: the generator descriptor, plus the flips when they are few."""
import json
import logging
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from errors import BudgetError, FormatError, InfrastructureError
from models.params import Rational
from services.channel import CorruptionPattern, build_pattern, pattern_budget
from settings import EXPLICIT_FLIPS_MAX


logger = logging.getLogger(__name__)


class PatternFile(BaseModel):
    kind: str
    seed: int
    rho: Rational
    length: int = Field(ge=0)
    weight: int = Field(ge=0)
    eps_budget: Rational
    budget_check: bool = True
    copies: Optional[list[int]] = None
    target_index: Optional[int] = None
    copy_len: Optional[int] = None
    block_len: Optional[int] = None
    symbol: Optional[int] = None
    flips: Optional[list[int]] = None


def write_pattern_file(path: str | Path, pattern: CorruptionPattern) -> None:
    explicit = pattern.weight <= EXPLICIT_FLIPS_MAX
    document = PatternFile(
        kind=pattern.kind,
        seed=pattern.seed,
        rho=pattern.rho,
        length=pattern.length,
        weight=pattern.weight,
        eps_budget=pattern.eps_budget,
        budget_check=pattern.budget_check,
        copies=list(pattern.copies) if pattern.copies is not None else None,
        target_index=pattern.target_index,
        copy_len=pattern.copy_len,
        block_len=pattern.block_len,
        symbol=pattern.symbol,
        flips=pattern.flips.tolist() if explicit else None,
    )
    try:
        Path(path).write_text(document.model_dump_json(indent=2))
    except OSError as e:
        raise InfrastructureError(f"cannot write pattern file {path}: {e}") from e
    logger.info("wrote %s pattern (%d flips, explicit=%s) to %s", pattern.kind, pattern.weight, explicit, path)


def read_pattern_file(path: str | Path) -> CorruptionPattern:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InfrastructureError(f"cannot read pattern file {path}: {e}") from e
    try:
        document = PatternFile.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise FormatError(f"{path}: not a pattern file: {e}") from e

    if document.flips is not None:
        pattern = _explicit_pattern(document, path)
    else:
        pattern = build_pattern(
            document.kind,
            document.rho,
            document.length,
            document.seed,
            copies=document.copies,
            target_index=document.target_index,
            copy_len=document.copy_len,
            block_len=document.block_len,
            symbol=document.symbol,
            budget_check=document.budget_check,
            eps_budget=document.eps_budget,
        )
    if pattern.weight != document.weight:
        raise FormatError(f"{path}: pattern has {pattern.weight} flips, header says {document.weight}")
    return pattern


def _explicit_pattern(document: PatternFile, path) -> CorruptionPattern:
    """Listed flips are taken as-is, so small patterns can be written by hand."""
    flips = np.asarray(document.flips, dtype=np.int64)
    if flips.size and (np.any(np.diff(flips) <= 0) or flips[0] < 0 or flips[-1] >= document.length):
        raise FormatError(f"{path}: flips must be strictly increasing positions in [0, {document.length})")
    budget = pattern_budget(document.length, document.eps_budget)
    if document.budget_check and flips.size > budget:
        raise BudgetError(f"{path}: {flips.size} flips exceed the budget of {budget}")
    return CorruptionPattern(
        length=document.length,
        flips=flips,
        kind=document.kind,
        seed=document.seed,
        rho=document.rho,
        copies=tuple(document.copies) if document.copies is not None else None,
        target_index=document.target_index,
        copy_len=document.copy_len,
        block_len=document.block_len,
        symbol=document.symbol,
        budget_check=document.budget_check,
        eps_budget=document.eps_budget,
    )
