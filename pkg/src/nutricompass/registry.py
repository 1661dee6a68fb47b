"""Closed registry of prediction targets and their unit conventions.

Every value that flows through ingestion, training, and scoring is keyed by
one of the target keys below.  The registry is closed: unknown keys are
rejected at parse time everywhere in the pipeline.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, asdict

from .errors import UnknownTargetError, ConfigError

# Units.  "scaled" units are per-mass quantities that get rescaled when a
# profile is converted from a per-100-g to a per-100-kcal basis.
KCAL_PER_100G = "kcal_per_100g"
GRAMS = "g"
MILLIGRAMS = "mg"
MICROGRAMS = "mcg"
CUP_EQ = "cup_eq"
OZ_EQ = "oz_eq"
NOVA_CLASS = "class"
PERCENT = "percent"
FLAG = "flag"

_SCALED_UNITS = {GRAMS, MILLIGRAMS, MICROGRAMS, CUP_EQ, OZ_EQ}

MIN_REGISTRY_SIZE = 48
MAX_REGISTRY_SIZE = 54


@dataclass(frozen=True)
class TargetSpec:
    """One prediction target: key, unit, and model/prediction conventions."""

    key: str
    unit: str
    default_embedding_dim: int = 256
    required_for_scoring: bool = True
    # Prediction clamp range (lo, hi); hi None means unbounded above.
    clamp: tuple[float, float | None] = (0.0, None)
    # Rounded to the nearest integer after clamping (binary flags).
    round_to_int: bool = False

    @property
    def scaled_by_energy(self) -> bool:
        return self.unit in _SCALED_UNITS


def _vit(key: str) -> TargetSpec:
    unit = MICROGRAMS if key.endswith("_mcg") else MILLIGRAMS
    return TargetSpec(key, unit)


def _min(key: str) -> TargetSpec:
    unit = MICROGRAMS if key.endswith("_mcg") else MILLIGRAMS
    return TargetSpec(key, unit)


DEFAULT_TARGETS: tuple[TargetSpec, ...] = (
    # Energy density stays on its per-100-g meaning; it is the divisor of the
    # basis conversion, not a per-mass quantity, and is not scored.
    TargetSpec("calories", KCAL_PER_100G, 512, required_for_scoring=False),
    TargetSpec("protein_g", GRAMS, 512),
    TargetSpec("carbohydrate_g", GRAMS, 512),
    TargetSpec("fiber_g", GRAMS, 512),
    TargetSpec("saturated_fat_g", GRAMS, 512),
    TargetSpec("unsaturated_fat_g", GRAMS, 512),
    TargetSpec("cholesterol_mg", MILLIGRAMS),
    TargetSpec("epa_g", GRAMS, 128),
    TargetSpec("dha_g", GRAMS, 128),
    TargetSpec("ala_g", GRAMS, 128),
    TargetSpec("caprylic_g", GRAMS, 128),
    TargetSpec("capric_g", GRAMS, 128),
    TargetSpec("lauric_g", GRAMS, 128),
    TargetSpec("added_sugar_g", GRAMS),
    TargetSpec("flavonoids_mg", MILLIGRAMS, 128),
    TargetSpec("carotenoids_mcg", MICROGRAMS, 128),
    # 12 vitamins
    _vit("vitamin_a_rae_mcg"),
    _vit("thiamin_mg"),
    _vit("riboflavin_mg"),
    _vit("niacin_mg"),
    _vit("vitamin_b6_mg"),
    _vit("folate_dfe_mcg"),
    _vit("vitamin_b12_mcg"),
    _vit("vitamin_c_mg"),
    _vit("vitamin_d_mcg"),
    _vit("vitamin_e_mg"),
    _vit("vitamin_k_mcg"),
    _vit("choline_mg"),
    # 9 minerals
    _min("calcium_mg"),
    _min("iron_mg"),
    _min("magnesium_mg"),
    _min("phosphorus_mg"),
    _min("potassium_mg"),
    _min("zinc_mg"),
    _min("copper_mg"),
    _min("selenium_mcg"),
    _min("sodium_mg"),
    # ingredient cup/oz equivalents
    TargetSpec("fruits", CUP_EQ),
    TargetSpec("nonstarchy_vegetables", CUP_EQ),
    TargetSpec("beans_legumes", CUP_EQ),
    TargetSpec("nuts_seeds", OZ_EQ),
    TargetSpec("whole_grains", OZ_EQ),
    TargetSpec("refined_grains", OZ_EQ),
    TargetSpec("total_grains", OZ_EQ, required_for_scoring=False),
    TargetSpec("seafood", OZ_EQ),
    TargetSpec("yogurt", CUP_EQ),
    TargetSpec("red_meat", OZ_EQ),
    TargetSpec("cured_meat", OZ_EQ),
    TargetSpec("plant_oils_g", GRAMS),
    # processing attributes; not rescaled by the energy-basis conversion
    TargetSpec("nova_class", NOVA_CLASS, 512, clamp=(1.0, 4.0)),
    TargetSpec("fermented_pct", PERCENT, clamp=(0.0, 100.0)),
    TargetSpec("fried_flag", FLAG, clamp=(0.0, 1.0), round_to_int=True),
)

_INDEX: dict[str, TargetSpec] = {t.key: t for t in DEFAULT_TARGETS}

VITAMIN_KEYS = (
    "vitamin_a_rae_mcg", "thiamin_mg", "riboflavin_mg", "niacin_mg",
    "vitamin_b6_mg", "folate_dfe_mcg", "vitamin_b12_mcg", "vitamin_c_mg",
    "vitamin_d_mcg", "vitamin_e_mg", "vitamin_k_mcg", "choline_mg",
)
MINERAL_KEYS = (
    "calcium_mg", "iron_mg", "magnesium_mg", "phosphorus_mg", "potassium_mg",
    "zinc_mg", "copper_mg", "selenium_mcg", "sodium_mg",
)


def target_registry() -> tuple[TargetSpec, ...]:
    """The closed target registry, in declaration order."""
    return DEFAULT_TARGETS


def target_keys() -> tuple[str, ...]:
    return tuple(t.key for t in DEFAULT_TARGETS)


def lookup(key: str) -> TargetSpec:
    try:
        return _INDEX[key]
    except KeyError:
        raise UnknownTargetError(f"unknown target key: {key!r}") from None


def is_registered(key: str) -> bool:
    return key in _INDEX


def validate_registry(targets: tuple[TargetSpec, ...]) -> None:
    """Enforce registry invariants: unique keys, one unit each, bounded size."""
    keys = [t.key for t in targets]
    if len(set(keys)) != len(keys):
        raise ConfigError("duplicate target keys in registry")
    n = len(keys)
    if not (MIN_REGISTRY_SIZE <= n <= MAX_REGISTRY_SIZE):
        raise ConfigError(f"registry has {n} keys, expected {MIN_REGISTRY_SIZE}..{MAX_REGISTRY_SIZE}")
    valid_units = _SCALED_UNITS | {KCAL_PER_100G, NOVA_CLASS, PERCENT, FLAG}
    for t in targets:
        if t.unit not in valid_units:
            raise ConfigError(f"target {t.key}: unknown unit {t.unit!r}")


validate_registry(DEFAULT_TARGETS)


def registry_to_json() -> str:
    rows = []
    for t in DEFAULT_TARGETS:
        d = asdict(t)
        d["clamp"] = list(t.clamp)
        rows.append(d)
    return json.dumps(rows, indent=2, sort_keys=True)


def registry_from_json(text: str) -> tuple[TargetSpec, ...]:
    rows = json.loads(text)
    specs = []
    for row in rows:
        clamp = row.pop("clamp")
        specs.append(TargetSpec(clamp=(clamp[0], clamp[1]), **row))
    targets = tuple(specs)
    validate_registry(targets)
    return targets
