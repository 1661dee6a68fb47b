"""Core domain types shared by every stage of the pipeline.

All types are immutable after construction and safe to share between threads.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import registry
from .errors import InvalidBasisError, MissingTargetError

PER_100G = "per_100g"
PER_100KCAL = "per_100kcal"


@dataclass(frozen=True)
class NutrientProfile:
    """Map of target key -> value plus the energy basis it is expressed on."""

    values: dict[str, float]
    basis: str = PER_100KCAL

    def __post_init__(self):
        if self.basis not in (PER_100G, PER_100KCAL):
            raise InvalidBasisError(f"unknown basis {self.basis!r}")
        for key in self.values:
            registry.lookup(key)  # closed registry

    def get(self, key: str) -> float:
        registry.lookup(key)
        try:
            return self.values[key]
        except KeyError:
            raise MissingTargetError(f"profile has no value for {key!r}") from None

    def require_per_100kcal(self) -> None:
        if self.basis != PER_100KCAL:
            raise InvalidBasisError(f"expected {PER_100KCAL} basis, got {self.basis}")

    def is_complete(self) -> bool:
        return all(k in self.values for k in registry.target_keys())

    def to_jsonable(self) -> dict:
        return {"values": dict(sorted(self.values.items())), "basis": self.basis}

    @classmethod
    def from_jsonable(cls, data: dict) -> "NutrientProfile":
        return cls(values=dict(data["values"]), basis=data["basis"])


@dataclass(frozen=True)
class FoodRecord:
    """One food: its description, optional category, and nutrient profile."""

    description: str
    profile: NutrientProfile
    food_code: str = ""
    category: str | None = None
    published_fcs: int | None = None
    augmented: bool = False
    imputed: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.description.strip():
            raise ValueError("description must be non-empty after trimming")
        if self.published_fcs is not None and not (1 <= self.published_fcs <= 100):
            raise ValueError(f"published_fcs out of range: {self.published_fcs}")

    def to_jsonable(self) -> dict:
        out: dict = {
            "food_code": self.food_code,
            "description": self.description,
            "profile": dict(sorted(self.profile.values.items())),
            "basis": self.profile.basis,
        }
        if self.category is not None:
            out["category"] = self.category
        if self.published_fcs is not None:
            out["published_fcs"] = self.published_fcs
        if self.augmented:
            out["augmented"] = True
        if self.imputed:
            out["imputed"] = sorted(self.imputed)
        return out

    @classmethod
    def from_jsonable(cls, data: dict) -> "FoodRecord":
        return cls(
            description=data["description"],
            profile=NutrientProfile(values=dict(data["profile"]), basis=data["basis"]),
            food_code=data.get("food_code", ""),
            category=data.get("category"),
            published_fcs=data.get("published_fcs"),
            augmented=bool(data.get("augmented", False)),
            imputed=tuple(data.get("imputed", ())),
        )


def write_records_jsonl(records: list[FoodRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_jsonable(), sort_keys=True) + "\n")


def read_records_jsonl(path) -> list[FoodRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(FoodRecord.from_jsonable(json.loads(line)))
    return records


@dataclass(frozen=True)
class FcsBreakdown:
    """Nine domain scores, their sum, and the final 1-100 score with audit trail."""

    domains: tuple[float, ...]  # d1..d9
    raw_sum: float
    clipped_sum: float
    final_score: int
    sub_scores: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.domains) != 9:
            raise ValueError("expected nine domain scores")
        if not (1 <= self.final_score <= 100):
            raise ValueError(f"final score out of range: {self.final_score}")

    @property
    def d(self) -> tuple[float, ...]:
        return self.domains

    def to_jsonable(self) -> dict:
        return {
            "domains": {f"d{i + 1}": v for i, v in enumerate(self.domains)},
            "raw_sum": self.raw_sum,
            "clipped_sum": self.clipped_sum,
            "final_score": self.final_score,
            "sub_scores": self.sub_scores,
        }
