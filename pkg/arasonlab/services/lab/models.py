"""Pydantic models for lab configuration and per-check reports."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from arasonlab.config import lab_defaults
from arasonlab.services.arith import square_class


class GenConfig(BaseModel):
    """Everything that determines a stream of generated instances."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, lt=2 ** 64)
    trials: int = Field(gt=0)
    height_bound: int = Field(gt=0)
    delta_pool: List[int] = Field(min_length=1)

    @field_validator("delta_pool")
    @classmethod
    def _non_squares(cls, pool: List[int]) -> List[int]:
        for d in pool:
            if d == 0 or square_class(d).is_one:
                raise ValueError(f"delta_pool entry {d} is a square; Q(sqrt({d})) is not a field")
        return pool

    @classmethod
    def from_defaults(cls, **overrides: Any) -> "GenConfig":
        """Defaults from the ``lab`` settings section; ``None`` overrides are ignored."""
        lab = lab_defaults()
        values = {key: lab[key] for key in ("seed", "trials", "height_bound", "delta_pool")}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class CheckReport(BaseModel):
    check: str
    seed: int
    trials: int
    trials_run: int = 0
    failures: List[Dict[str, Any]] = Field(default_factory=list)
    elapsed_ms: Optional[int] = None
    stats: Dict[str, int] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return self.model_dump()
