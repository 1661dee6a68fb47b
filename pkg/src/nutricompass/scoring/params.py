"""Scoring tables and configuration for the Food Compass 2.0 engine.

The embedded defaults carry the published vitamin, mineral, ingredient, and
lipid tables.  Everything is overridable from a JSON file so alternative
table readings stay auditable instead of being code edits.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .. import registry
from ..errors import ConfigError

ASCENDING = "ascending"
DESCENDING = "descending"

# Derived scoring inputs assembled from several predicted targets.
EPA_DHA = "epa_dha_g"
MCT = "mct_g"
RED_PROCESSED_MEAT = "red_processed_meat"
REFINED_CARBS = "refined_carbohydrates"

_DERIVED_SOURCES = {
    EPA_DHA: ("epa_g", "dha_g"),
    MCT: ("caprylic_g", "capric_g", "lauric_g"),
    RED_PROCESSED_MEAT: ("red_meat", "cured_meat"),
    REFINED_CARBS: ("refined_grains",),
}


@dataclass(frozen=True)
class AttributeParams:
    """One scored attribute: clip bounds, point range, direction, weight."""

    key: str
    low: float
    high: float
    p_min: float
    p_max: float
    direction: str = ASCENDING
    weight: float = 1.0

    def __post_init__(self):
        if self.high <= self.low:
            raise ConfigError(f"{self.key}: clip bounds require high > low")
        if self.direction not in (ASCENDING, DESCENDING):
            raise ConfigError(f"{self.key}: bad direction {self.direction!r}")


def _asc(key, high, p_max=10.0):
    return AttributeParams(key, 0.0, high, 0.0, p_max)


def _desc(key, high, weight=1.0):
    return AttributeParams(key, 0.0, high, -10.0, 0.0, direction=DESCENDING, weight=weight)


VITAMIN_TABLE = (
    _asc("vitamin_a_rae_mcg", 225.0),
    _asc("niacin_mg", 4.0),
    _asc("vitamin_c_mg", 22.5),
    _asc("vitamin_b6_mg", 0.325),
    _asc("vitamin_d_mcg", 3.75),
    _asc("folate_dfe_mcg", 100.0),
    _asc("vitamin_e_mg", 3.75),
    _asc("vitamin_b12_mcg", 0.6),
    _asc("vitamin_k_mcg", 30.0),
    _asc("choline_mg", 137.5),
    _asc("thiamin_mg", 0.3),
    _asc("riboflavin_mg", 0.325),
)

MINERAL_TABLE = (
    _asc("calcium_mg", 250.0),
    _asc("iron_mg", 4.5),
    _asc("magnesium_mg", 105.0),
    _asc("phosphorus_mg", 175.0),
    _asc("potassium_mg", 1175.0),
    _asc("zinc_mg", 2.75),
    _asc("copper_mg", 0.225),
    _asc("selenium_mcg", 13.75),
    _desc("sodium_mg", 575.0),
)

INGREDIENT_TABLE = (
    _asc("fruits", 1.75),
    _asc("nonstarchy_vegetables", 4.77),
    _asc("beans_legumes", 0.50),
    _asc("nuts_seeds", 1.35),
    _asc("whole_grains", 1.12),
    _asc("seafood", 3.86),
    _asc("yogurt", 0.81),
    _asc("plant_oils_g", 11.31),
    _desc(REFINED_CARBS, 1.38),
    _desc(RED_PROCESSED_MEAT, 2.69),
)

LIPID_TABLE = (
    _desc("cholesterol_mg", 75.0, weight=0.5),
    AttributeParams(EPA_DHA, 0.0, 0.0625, 0.0, 10.0, weight=1.0),
    AttributeParams("ala_g", 0.0, 0.4, 0.0, 10.0, weight=0.5),
    AttributeParams(MCT, 0.0, 0.32, 0.0, 10.0, weight=0.5),
)

# Log-ratio bounds for the nutrient-ratio domain, all mapped onto [-10, 10].
FAT_RATIO = AttributeParams("fat_ratio", -0.66, 1.77, -10.0, 10.0)
CARB_RATIO = AttributeParams("carb_ratio", -7.02, -0.78, -10.0, 10.0)
KNA_RATIO = AttributeParams("k_na_ratio", -2.02, 3.30, -10.0, 10.0)

NOVA_ANCHORS = ((1.0, 10.0), (2.0, 7.5), (3.0, 5.0), (4.0, -10.0))

# Added sugar: percent of calories 0 scores 0, falling linearly to -10 at 60.
SUGAR_CURVE = ((0.0, 0.0), (60.0, -10.0))
NITRATE_PARAMS = AttributeParams("cured_meat_pct_kcal", 0.0, 50.0, -10.0, 0.0, direction=DESCENDING)

FIBER_PARAMS = _asc("fiber_g", 9.5)
PROTEIN_PARAMS = _asc("protein_g", 14.0)
FLAVONOID_PARAMS = _asc("flavonoids_mg", 23.53)
CAROTENOID_PARAMS = _asc("carotenoids_mcg", 8746.81)

DAIRY_KEYWORDS = (
    "milk", "cheese", "yogurt", "yoghurt", "butter", "cream", "dairy",
    "kefir", "custard", "whey", "ricotta", "mozzarella", "cheddar", "ice cream",
)
FERMENTATION_KEYWORDS = (
    "fermented", "kimchi", "sauerkraut", "kefir", "miso", "tempeh",
    "kombucha", "sourdough", "pickled", "yogurt", "yoghurt",
)
FRYING_KEYWORDS = ("fried", "deep fried", "pan fried", "stir fried")

# Clip range for the summed domains and the span used by the final transform.
FORMULA_CLIP = (-12.43, 29.94, 42.37)
PROSE_CLIP = (-12.80, 29.42, 42.22)

GATE_AT_LEAST = "at_least"
GATE_BELOW = "below"


@dataclass(frozen=True)
class ScoringConfig:
    vitamins: tuple[AttributeParams, ...] = VITAMIN_TABLE
    minerals: tuple[AttributeParams, ...] = MINERAL_TABLE
    ingredients: tuple[AttributeParams, ...] = INGREDIENT_TABLE
    lipids: tuple[AttributeParams, ...] = LIPID_TABLE
    fat_ratio: AttributeParams = FAT_RATIO
    carb_ratio: AttributeParams = CARB_RATIO
    kna_ratio: AttributeParams = KNA_RATIO
    fat_energy_gate_pct: float = 10.0
    carb_energy_gate_pct: float = 10.0
    kna_gate_mg: float = 10.0
    gate_mode: str = GATE_AT_LEAST
    d1_aggregation: str = "mean"  # or "sum"
    nova_anchors: tuple[tuple[float, float], ...] = NOVA_ANCHORS
    sugar_curve: tuple[tuple[float, float], ...] = SUGAR_CURVE
    nitrate: AttributeParams = NITRATE_PARAMS
    fiber: AttributeParams = FIBER_PARAMS
    protein: AttributeParams = PROTEIN_PARAMS
    flavonoids: AttributeParams = FLAVONOID_PARAMS
    carotenoids: AttributeParams = CAROTENOID_PARAMS
    low_clip: float = FORMULA_CLIP[0]
    high_clip: float = FORMULA_CLIP[1]
    span: float = FORMULA_CLIP[2]
    # Atwater energy factors (kcal per gram) on the 100 kcal basis.
    kcal_per_g_sugar: float = 4.0
    kcal_per_g_carb: float = 4.0
    kcal_per_g_fat: float = 9.0
    cured_meat_kcal_per_oz: float = 50.0
    mct_include_lauric: bool = True
    dairy_keywords: tuple[str, ...] = DAIRY_KEYWORDS
    fermentation_keywords: tuple[str, ...] = FERMENTATION_KEYWORDS
    frying_keywords: tuple[str, ...] = FRYING_KEYWORDS
    log_epsilon: float = 1e-6
    # Score every (-10, 0) row with the literal printed formula (low maps to
    # -10) instead of the descending reading (low maps to 0).
    literal_formula_mode: bool = False

    def __post_init__(self):
        if abs((self.high_clip - self.low_clip) - self.span) > 1e-9:
            raise ConfigError("clip span must equal high_clip - low_clip")
        if self.gate_mode not in (GATE_AT_LEAST, GATE_BELOW):
            raise ConfigError(f"bad gate_mode {self.gate_mode!r}")
        if self.d1_aggregation not in ("mean", "sum"):
            raise ConfigError(f"bad d1_aggregation {self.d1_aggregation!r}")
        scores = [s for _, s in self.nova_anchors]
        if any(b >= a for a, b in zip(scores, scores[1:])):
            raise ConfigError("NOVA anchor scores must be strictly decreasing")
        self.validate_targets()

    def validate_targets(self) -> None:
        """Every key consumed by the tables must resolve to registry targets."""
        for table in (self.vitamins, self.minerals, self.ingredients, self.lipids):
            for row in table:
                for key in _DERIVED_SOURCES.get(row.key, (row.key,)):
                    registry.lookup(key)
        for row in (self.fiber, self.protein, self.flavonoids, self.carotenoids):
            registry.lookup(row.key)

    def required_targets(self) -> tuple[str, ...]:
        """Registry keys the engine reads, in registry order."""
        needed = set()
        for table in (self.vitamins, self.minerals, self.ingredients, self.lipids):
            for row in table:
                needed.update(_DERIVED_SOURCES.get(row.key, (row.key,)))
        needed.update(_DERIVED_SOURCES[EPA_DHA] + _DERIVED_SOURCES[MCT])
        needed.update(
            (self.fiber.key, self.protein.key, self.flavonoids.key, self.carotenoids.key,
             "saturated_fat_g", "unsaturated_fat_g", "carbohydrate_g", "fiber_g",
             "potassium_mg", "sodium_mg", "added_sugar_g", "cured_meat",
             "nova_class", "fermented_pct", "fried_flag")
        )
        return tuple(k for k in registry.target_keys() if k in needed)


def default_config() -> ScoringConfig:
    return ScoringConfig()


def prose_clip_config(**overrides) -> ScoringConfig:
    lo, hi, span = PROSE_CLIP
    return ScoringConfig(low_clip=lo, high_clip=hi, span=span, **overrides)


def _params_from_row(row: dict) -> AttributeParams:
    return AttributeParams(
        key=row["key"], low=row["low"], high=row["high"],
        p_min=row["p_min"], p_max=row["p_max"],
        direction=row.get("direction", ASCENDING),
        weight=row.get("weight", 1.0),
    )


def load_config(path) -> ScoringConfig:
    """Build a ScoringConfig from a JSON file of partial overrides."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    base = ScoringConfig()
    table_fields = {"vitamins", "minerals", "ingredients", "lipids"}
    row_fields = {"fat_ratio", "carb_ratio", "kna_ratio", "nitrate", "fiber",
                  "protein", "flavonoids", "carotenoids"}
    updates = {}
    for key, value in data.items():
        if key in table_fields:
            updates[key] = tuple(_params_from_row(r) for r in value)
        elif key in row_fields:
            updates[key] = _params_from_row(value)
        elif key in ("nova_anchors", "sugar_curve"):
            updates[key] = tuple((float(a), float(b)) for a, b in value)
        elif key in ("dairy_keywords", "fermentation_keywords", "frying_keywords"):
            updates[key] = tuple(value)
        elif hasattr(base, key):
            updates[key] = value
        else:
            raise ConfigError(f"unknown scoring config key: {key!r}")
    return replace(base, **updates)
