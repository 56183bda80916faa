"""Occupation capability profiles and similarity scoring.

An occupation is described by a vector of capability ratings (skills,
abilities and knowledge areas), each carrying a required level and an
importance weight. The distance between two occupations is the sum of
absolute level and importance differences over all shared capabilities;
distances against a fixed origin occupation are then min-max rescaled onto
a 0-100 similarity score, where 100 means identical requirements to the
origin and 0 means the least similar occupation in the scored set.
"""

from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError, SchemaError

CAPABILITY_DOMAINS = ("skill", "ability", "knowledge")

# Rating scales follow the occupational-database convention the loaders
# expect by default: level on 0-7, importance on 1-5.
DEFAULT_LEVEL_SCALE = (0.0, 7.0)
DEFAULT_IMPORTANCE_SCALE = (1.0, 5.0)

PROFILE_COLUMNS = (
    "occupation_code",
    "occupation_title",
    "capability_id",
    "capability_domain",
    "level",
    "importance",
)


@dataclass(frozen=True)
class CapabilityDescriptor:
    id: str
    domain: str
    name: str


@dataclass(frozen=True)
class CapabilityRating:
    level: float
    importance: float


@dataclass(frozen=True)
class OccupationProfile:
    code: str
    title: str
    ratings: dict  # capability id -> CapabilityRating

    def capability_ids(self) -> frozenset:
        return frozenset(self.ratings)


@dataclass(frozen=True)
class SimilarityResult:
    code: str
    diff: float
    sim: float


def _open_rows(source):
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            yield from csv.DictReader(fh)
    else:
        yield from csv.DictReader(source)


def _check_scale(value, scale, what, code, cap_id):
    lo, hi = scale
    if not (lo <= value <= hi):
        raise DataError(
            f"{what} {value} for occupation {code!r}, capability {cap_id!r} "
            f"outside the declared scale [{lo}, {hi}]"
        )


def load_profiles(
    source,
    *,
    level_scale=DEFAULT_LEVEL_SCALE,
    importance_scale=DEFAULT_IMPORTANCE_SCALE,
):
    """Load occupation capability profiles from a long-format CSV.

    Expects one row per occupation x capability with the columns
    occupation_code, occupation_title, capability_id, capability_domain,
    level, importance. Every occupation must rate the identical capability
    set; a missing cell is an error, never imputed.
    """
    rows = list(_open_rows(source))
    if not rows:
        raise SchemaError("capability file is empty")
    missing = [c for c in PROFILE_COLUMNS if c not in rows[0]]
    if missing:
        raise SchemaError(f"capability file lacks columns: {', '.join(missing)}")

    descriptors = {}
    profiles = {}
    titles = {}
    for i, row in enumerate(rows, start=2):
        code = row["occupation_code"].strip()
        cap_id = row["capability_id"].strip()
        domain = row["capability_domain"].strip()
        if domain not in CAPABILITY_DOMAINS:
            raise DataError(
                f"row {i}: unknown capability domain {domain!r} "
                f"(expected one of {', '.join(CAPABILITY_DOMAINS)})"
            )
        try:
            level = float(row["level"])
            importance = float(row["importance"])
        except ValueError as exc:
            raise DataError(f"row {i}: non-numeric rating ({exc})") from None
        _check_scale(level, level_scale, "level", code, cap_id)
        _check_scale(importance, importance_scale, "importance", code, cap_id)

        known = descriptors.get(cap_id)
        if known is None:
            descriptors[cap_id] = CapabilityDescriptor(cap_id, domain, cap_id)
        elif known.domain != domain:
            raise DataError(
                f"capability {cap_id!r} listed under two domains "
                f"({known.domain!r} and {domain!r})"
            )
        ratings = profiles.setdefault(code, {})
        if cap_id in ratings:
            raise DataError(
                f"duplicate rating for occupation {code!r}, capability {cap_id!r}"
            )
        ratings[cap_id] = CapabilityRating(level, importance)
        titles.setdefault(code, row["occupation_title"].strip())

    all_ids = frozenset(descriptors)
    for code, ratings in profiles.items():
        lacking = all_ids - ratings.keys()
        if lacking:
            raise DataError(
                f"occupation {code!r} is missing ratings for: "
                f"{', '.join(sorted(lacking))}"
            )

    return [
        OccupationProfile(code, titles[code], dict(sorted(profiles[code].items())))
        for code in sorted(profiles)
    ]


def capability_distance(a: OccupationProfile, b: OccupationProfile) -> float:
    """Sum of absolute level and importance gaps over all capabilities.

    Symmetric, zero iff all ratings coincide. Requires both profiles to be
    rated on the identical capability set.
    """
    if a.capability_ids() != b.capability_ids():
        only_a = sorted(a.capability_ids() - b.capability_ids())
        only_b = sorted(b.capability_ids() - a.capability_ids())
        raise DataError(
            f"capability sets differ between {a.code!r} and {b.code!r} "
            f"(only in {a.code!r}: {only_a}; only in {b.code!r}: {only_b})"
        )
    total = 0.0
    for cap_id, ra in a.ratings.items():
        rb = b.ratings[cap_id]
        total += abs(ra.level - rb.level) + abs(ra.importance - rb.importance)
    return total


def similarity_scores(origin: OccupationProfile, candidates) -> list:
    """Score every candidate against the origin occupation on 0-100.

    The origin itself takes part in the min-max normalisation, so its own
    distance of zero anchors the score 100 (perfect match) and the most
    distant occupation in the set scores 0. Raises if every distance is
    equal, since the rescaling is undefined there.
    """
    candidates = list(candidates)
    if not candidates:
        raise DataError("similarity scoring needs at least one candidate")
    scored = [(origin, 0.0)] + [
        (cand, capability_distance(origin, cand)) for cand in candidates
    ]
    diffs = [d for _, d in scored]
    lo, hi = min(diffs), max(diffs)
    if hi <= lo:
        raise DataError(
            "all capability distances are equal; similarity rescaling is undefined"
        )
    span = hi - lo
    return [
        SimilarityResult(prof.code, diff, 100.0 * (1.0 - (diff - lo) / span))
        for prof, diff in scored
    ]


def shortlist(results, threshold: float = 70.0, *, origin_code: str | None = None):
    """Keep results at or above the similarity threshold, best first.

    The origin occupation (when its code is given) is dropped; ordering is
    similarity descending with occupation-code ties broken ascending.
    """
    if not (0.0 <= threshold <= 100.0):
        raise ValueError(f"threshold {threshold} outside [0, 100]")
    kept = [
        r for r in results if r.sim >= threshold and r.code != origin_code
    ]
    return sorted(kept, key=lambda r: (-r.sim, r.code))


def score_distribution(results) -> dict:
    """Arithmetic mean and median of similarity scores (origin excluded)."""
    if not results:
        raise DataError("score distribution undefined on an empty result set")
    sims = [r.sim for r in results]
    return {"mean": statistics.fmean(sims), "median": statistics.median(sims)}
