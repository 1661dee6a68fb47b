"""Food Compass 2.0 scoring engine.

Pure functions over a per-100-kcal nutrient profile and a ScoringConfig.
Nine domains are scored, summed, clipped, and mapped onto the 1-100 scale.
The final transform is evaluated in decimal arithmetic on the printed clip
constants so half-point raw sums round the way hand arithmetic does.
"""
from __future__ import annotations

import math
from decimal import Decimal, ROUND_HALF_UP

from ..text import contains_any
from ..types import NutrientProfile, FcsBreakdown
from .params import (
    ScoringConfig, AttributeParams, ASCENDING,
    EPA_DHA, MCT, RED_PROCESSED_MEAT, REFINED_CARBS, GATE_AT_LEAST,
)


def scale_score(value: float, params: AttributeParams, literal: bool = False) -> float:
    """Clip value into [low, high] and map it linearly onto the point range.

    Ascending rows map low -> p_min and high -> p_max; descending rows map
    low -> p_max and high -> p_min.  ``literal`` forces the ascending formula
    regardless of direction (the printed reading of (-10, 0) rows).
    """
    t = (min(max(value, params.low), params.high) - params.low) / (params.high - params.low)
    if params.direction == ASCENDING or literal:
        return params.p_min + (params.p_max - params.p_min) * t
    return params.p_max + (params.p_min - params.p_max) * t


def _piecewise(x: float, anchors) -> float:
    """Piecewise-linear interpolation through anchor points, clamped at the ends."""
    if x <= anchors[0][0]:
        return anchors[0][1]
    if x >= anchors[-1][0]:
        return anchors[-1][1]
    for (x0, y0), (x1, y1) in zip(anchors, anchors[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError("unreachable")


def nova_interpolate(nova: float, anchors) -> float:
    return _piecewise(min(max(nova, anchors[0][0]), anchors[-1][0]), anchors)


def scoring_inputs(profile: NutrientProfile, config: ScoringConfig) -> dict[str, float]:
    """Resolve the values the tables consume, assembling derived quantities."""
    values = dict(profile.values)
    mct = profile.get("caprylic_g") + profile.get("capric_g")
    if config.mct_include_lauric:
        mct += profile.get("lauric_g")
    values[MCT] = mct
    values[EPA_DHA] = profile.get("epa_g") + profile.get("dha_g")
    values[RED_PROCESSED_MEAT] = profile.get("red_meat") + profile.get("cured_meat")
    values[REFINED_CARBS] = profile.get("refined_grains")
    return values


def _top_k_mean(scores: list[float], k: int) -> tuple[float, list[int]]:
    """Mean of the k scores with largest absolute value; ties keep table order."""
    order = sorted(range(len(scores)), key=lambda i: (-abs(scores[i]), i))
    chosen = order[:k]
    return sum(scores[i] for i in chosen) / k, chosen


def score_nutrient_ratios(profile: NutrientProfile, description: str,
                          config: ScoringConfig) -> tuple[float, dict]:
    """D1: conditional log-ratio scores for fat quality, carb quality, K/Na."""
    eps = config.log_epsilon
    lit = config.literal_formula_mode
    at_least = config.gate_mode == GATE_AT_LEAST

    def gate(measure: float, threshold: float) -> bool:
        return measure >= threshold if at_least else measure < threshold

    sub: dict = {}
    applicable: list[float] = []

    sat = profile.get("saturated_fat_g")
    unsat = profile.get("unsaturated_fat_g")
    fat_energy_pct = config.kcal_per_g_fat * (sat + unsat)
    sub["fat_energy_pct"] = fat_energy_pct
    if gate(fat_energy_pct, config.fat_energy_gate_pct):
        score = scale_score(math.log(max(unsat, eps) / max(sat, eps)), config.fat_ratio, lit)
        if contains_any(description, config.dairy_keywords):
            score *= 0.5
            sub["dairy_halved"] = True
        sub["fat_ratio"] = score
        applicable.append(score)

    carb = profile.get("carbohydrate_g")
    fiber = profile.get("fiber_g")
    carb_energy_pct = config.kcal_per_g_carb * carb
    sub["carb_energy_pct"] = carb_energy_pct
    if gate(carb_energy_pct, config.carb_energy_gate_pct):
        score = scale_score(math.log(max(fiber, eps) / max(carb, eps)), config.carb_ratio, lit)
        sub["carb_ratio"] = score
        applicable.append(score)

    k = profile.get("potassium_mg")
    na = profile.get("sodium_mg")
    if at_least:
        kna_ok = k >= config.kna_gate_mg and na >= config.kna_gate_mg
    else:
        kna_ok = k < config.kna_gate_mg and na < config.kna_gate_mg
    if kna_ok:
        score = scale_score(math.log(max(k, eps) / max(na, eps)), config.kna_ratio, lit)
        sub["k_na_ratio"] = score
        applicable.append(score)

    if not applicable:
        return 0.0, sub
    if config.d1_aggregation == "mean":
        return sum(applicable) / len(applicable), sub
    return sum(applicable), sub


def _score_table(values: dict[str, float], table, config: ScoringConfig) -> list[float]:
    lit = config.literal_formula_mode
    return [scale_score(values[row.key], row, lit) for row in table]


def score_vitamins(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D2: mean of the top 5 vitamin scores by absolute value."""
    scores = _score_table(profile.values, config.vitamins, config)
    d2, chosen = _top_k_mean(scores, 5)
    sub = {row.key: s for row, s in zip(config.vitamins, scores)}
    sub["selected"] = [config.vitamins[i].key for i in chosen]
    return d2, sub


def score_minerals(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D3: mean of the top 5 mineral scores by absolute value."""
    scores = _score_table(profile.values, config.minerals, config)
    d3, chosen = _top_k_mean(scores, 5)
    sub = {row.key: s for row, s in zip(config.minerals, scores)}
    sub["selected"] = [config.minerals[i].key for i in chosen]
    return d3, sub


def score_ingredients(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D4: sum of beneficial and harmful ingredient scores."""
    values = scoring_inputs(profile, config)
    scores = _score_table(values, config.ingredients, config)
    sub = {row.key: s for row, s in zip(config.ingredients, scores)}
    return sum(scores), sub


def score_additives(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D5: mean of the added-sugar and nitrite-meat scores."""
    p_sugar = config.kcal_per_g_sugar * profile.get("added_sugar_g")
    sugar_score = _piecewise(p_sugar, config.sugar_curve)
    p_nitrate = min(100.0, profile.get("cured_meat") * config.cured_meat_kcal_per_oz)
    nitrite_score = scale_score(p_nitrate, config.nitrate, config.literal_formula_mode)
    sub = {"p_sugar": p_sugar, "sugar": sugar_score,
           "p_nitrate": p_nitrate, "nitrite": nitrite_score}
    return (sugar_score + nitrite_score) / 2.0, sub


def score_processing(profile: NutrientProfile, description: str,
                     config: ScoringConfig) -> tuple[float, dict]:
    """D6: NOVA interpolation plus half-weighted fermentation and frying."""
    s_nova = nova_interpolate(profile.get("nova_class"), config.nova_anchors)
    fermented = profile.get("fermented_pct")
    if fermented > 50.0 or contains_any(description, config.fermentation_keywords):
        fermented = 100.0
    s_ferm = scale_score(fermented, AttributeParams("fermented_pct", 0.0, 100.0, 0.0, 10.0))
    fried = profile.get("fried_flag") >= 0.5 or contains_any(description, config.frying_keywords)
    s_fry = -10.0 if fried else 0.0
    d6 = (s_nova + 0.5 * s_ferm + 0.5 * s_fry) / 2.0
    return d6, {"nova": s_nova, "fermentation": s_ferm, "frying": s_fry}


def score_lipids(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D7: half the weighted mean of the top 3 lipid scores by absolute value.

    Equal-magnitude ties prefer the lower-weight row, then table order.
    """
    values = scoring_inputs(profile, config)
    rows = config.lipids
    scores = _score_table(values, rows, config)
    order = sorted(range(len(rows)), key=lambda i: (-abs(scores[i]), rows[i].weight, i))
    chosen = order[:3]
    num = sum(rows[i].weight * scores[i] for i in chosen)
    den = sum(rows[i].weight for i in chosen)
    d7 = 0.5 * num / den
    sub = {row.key: s for row, s in zip(rows, scores)}
    sub["selected"] = [rows[i].key for i in chosen]
    return d7, sub


def score_fiber_protein(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D8: fiber score plus half-weighted protein score."""
    s_fiber = scale_score(profile.get(config.fiber.key), config.fiber)
    s_protein = scale_score(profile.get(config.protein.key), config.protein)
    return (s_fiber + 0.5 * s_protein) / 1.5, {"fiber": s_fiber, "protein": s_protein}


def score_phytochemicals(profile: NutrientProfile, config: ScoringConfig) -> tuple[float, dict]:
    """D9: half-weighted mean of the flavonoid and carotenoid scores."""
    s_flav = scale_score(profile.get(config.flavonoids.key), config.flavonoids)
    s_carot = scale_score(profile.get(config.carotenoids.key), config.carotenoids)
    return 0.5 * (s_flav + s_carot) / 2.0, {"flavonoids": s_flav, "carotenoids": s_carot}


def final_transform(raw_sum: float, config: ScoringConfig) -> tuple[float, int]:
    """Clip the domain sum and map it onto 1-100, rounding half away from zero."""
    clipped = min(max(raw_sum, config.low_clip), config.high_clip)
    c = Decimal(repr(clipped))
    high = Decimal(repr(config.high_clip))
    span = Decimal(repr(config.span))
    score = Decimal(100) - Decimal(99) * (high - c) / span
    final = int(score.quantize(Decimal("1"), rounding=ROUND_HALF_UP))
    return clipped, min(100, max(1, final))


def total_fcs(profile: NutrientProfile, description: str = "",
              config: ScoringConfig | None = None) -> FcsBreakdown:
    """Score all nine domains and produce the final 1-100 Food Compass score."""
    config = config or ScoringConfig()
    profile.require_per_100kcal()

    d1, s1 = score_nutrient_ratios(profile, description, config)
    d2, s2 = score_vitamins(profile, config)
    d3, s3 = score_minerals(profile, config)
    d4, s4 = score_ingredients(profile, config)
    d5, s5 = score_additives(profile, config)
    d6, s6 = score_processing(profile, description, config)
    d7, s7 = score_lipids(profile, config)
    d8, s8 = score_fiber_protein(profile, config)
    d9, s9 = score_phytochemicals(profile, config)

    domains = (d1, d2, d3, d4, d5, d6, d7, d8, d9)
    raw_sum = sum(domains)
    clipped, final = final_transform(raw_sum, config)
    sub_scores = {
        "nutrient_ratios": s1, "vitamins": s2, "minerals": s3,
        "ingredients": s4, "additives": s5, "processing": s6,
        "lipids": s7, "fiber_protein": s8, "phytochemicals": s9,
    }
    return FcsBreakdown(domains=domains, raw_sum=raw_sum,
                        clipped_sum=clipped, final_score=final,
                        sub_scores=sub_scores)
