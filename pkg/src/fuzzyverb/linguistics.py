"""Verbalization of fuzzy rule bases into natural English.

Every descriptor is rendered from dataset statistics alone:

* location: seven labels (micro .. giant) from the descriptor's center
  relative to the attribute mean, in units of half standard deviations for
  two-tailed shapes and of the mean for one-tailed shapes;
* fuzziness: five adverbs (strictly .. loosely) from the spread-to-stddev
  ratio of a two-tailed shape;
* slope: five adverbs (hardly .. stepwise) from |s * stddev| of a
  one-tailed shape.

The rendered text follows the fixed listing layout::

    RULE 1
    IF     input 1 is loosely tiny
       AND input 2 is loosely tiny
    THEN output is strictly giant.

Label indices are truncated (floor) and clamped to the label range; see the
tests for the exact bin boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dataset import AttributeStats
from .membership import (
    Gaussian,
    MembershipFunction,
    Semitriangular,
    Singleton,
    Tail,
    Trapezoidal,
    Triangular,
)
from .rulebase import AnnbfisTriangle, MamdaniTriangle, RuleBase, TskLinear

LOCATION_NAMES = ("micro", "tiny", "small", "medium", "large", "huge", "giant")
FUZZINESS_NAMES = ("strictly", "distinctly", "moderately", "mildly", "loosely")
SLOPE_NAMES = ("hardly", "mildly", "moderately", "distinctly", "stepwise")
IMPORTANCE_NAMES = ("negligible", "low", "medium", "high")

MEDIUM_INDEX = len(LOCATION_NAMES) // 2  # floor(7/2)

# Fuzziness bins on spread/stddev: left-closed upper bounds.
_FUZZINESS_BOUNDS = (0.5, 1.0, 2.0, 5.0)
# Slope bins on |s * stddev|, from steep ("hardly") downward; tanh saturates
# faster, hence its tighter column.
_SLOPE_BOUNDS_DEFAULT = (10.0, 4.0, 1.0, 0.4)
_SLOPE_BOUNDS_TANH = (5.0, 2.0, 0.5, 0.2)
# Importance bins on |w| * stddev_attr / stddev_output.
_IMPORTANCE_BOUNDS = (0.05, 0.5, 2.0)


@dataclass(frozen=True)
class LocationLabel:
    index: int

    def __post_init__(self):
        if not 0 <= self.index < len(LOCATION_NAMES):
            raise ValueError(f"location index out of range: {self.index}")

    @property
    def name(self) -> str:
        return LOCATION_NAMES[self.index]

    @classmethod
    def named(cls, name: str) -> "LocationLabel":
        return cls(LOCATION_NAMES.index(name))


@dataclass(frozen=True)
class DescriptorDescription:
    attribute: str
    modifier: str  # fuzziness or slope adverb, or "exactly"
    relation: str  # "is", "is less than", "is greater than"
    location: LocationLabel
    notes: tuple[str, ...] = ()

    def text(self) -> str:
        return f"{self.attribute} {self.relation.replace('is', 'is ' + self.modifier, 1)} {self.location.name}"


@dataclass(frozen=True)
class ImportanceTerm:
    attribute: str
    magnitude: str
    sign: str | None  # "positive" / "negative"; None when the weight is zero

    def text(self) -> str:
        if self.sign is None:
            return f"{self.attribute} has {self.magnitude} importance"
        return f"{self.attribute} has {self.magnitude} {self.sign} importance"


@dataclass(frozen=True)
class TskConsequenceDescription:
    importances: tuple[ImportanceTerm, ...]
    constant_location: LocationLabel
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class RuleDescription:
    premise: tuple[DescriptorDescription, ...]
    consequence: DescriptorDescription | TskConsequenceDescription


@dataclass(frozen=True)
class LinguisticDescription:
    rules: tuple[RuleDescription, ...]

    def to_dict(self) -> dict:
        return {"rules": [_rule_desc_to_dict(r) for r in self.rules], "text": render_text(self)}


def _clamp_floor(value: float) -> int:
    return int(min(max(math.floor(value), 0), len(LOCATION_NAMES) - 1))


def location_label_two_tailed(
    center: float, stats: AttributeStats, literal_sign: bool = False
) -> tuple[LocationLabel, bool]:
    """Location label for a two-tailed descriptor centered at `center`.

    The default orientation maps centers above the mean to labels above
    "medium"; literal_sign=True flips it.  A zero-stddev attribute yields
    "medium" with the degenerate flag set.
    """
    if stats.stddev == 0:
        return LocationLabel(MEDIUM_INDEX), True
    offset = 2.0 * (center - stats.mean) / stats.stddev
    if literal_sign:
        offset = -offset
    return LocationLabel(_clamp_floor(offset + MEDIUM_INDEX)), False


def location_label_one_tailed(
    crosspoint: float, stats: AttributeStats, literal_sign: bool = False
) -> tuple[LocationLabel, bool]:
    """Location label for a one-tailed descriptor's crosspoint.

    The offset is measured in units of the attribute mean; a zero mean falls
    back to stddev units (flagged), and zero mean + zero stddev yields
    "medium" (flagged).
    """
    degenerate = False
    if stats.mean != 0:
        offset = (crosspoint - stats.mean) / stats.mean
    elif stats.stddev != 0:
        offset = (crosspoint - stats.mean) / stats.stddev
        degenerate = True
    else:
        return LocationLabel(MEDIUM_INDEX), True
    if literal_sign:
        offset = -offset
    return LocationLabel(_clamp_floor(offset + MEDIUM_INDEX)), degenerate


def fuzziness_label(spread: float, stats: AttributeStats) -> tuple[str, bool]:
    """Fuzziness adverb from the spread / stddev ratio (left-closed bins)."""
    if stats.stddev == 0:
        return FUZZINESS_NAMES[0], True
    ratio = spread / stats.stddev
    for i, bound in enumerate(_FUZZINESS_BOUNDS):
        if ratio < bound:
            return FUZZINESS_NAMES[i], False
    return FUZZINESS_NAMES[-1], False


def slope_label(s: float, stats: AttributeStats, family: str) -> tuple[str, bool]:
    """Slope adverb from |s * stddev|; `family` is a membership kind name
    ("tanh" uses the tighter bin column)."""
    if stats.stddev == 0:
        return SLOPE_NAMES[-1], True
    bounds = _SLOPE_BOUNDS_TANH if family == "tanh" else _SLOPE_BOUNDS_DEFAULT
    magnitude = abs(s * stats.stddev)
    for i, bound in enumerate(bounds):
        if magnitude >= bound:
            return SLOPE_NAMES[i], False
    return SLOPE_NAMES[-1], False


def triangle_centroid(tri: Triangular) -> float:
    return tri.centroid()


def trapezoid_centroid(trap: Trapezoidal) -> float:
    return trap.centroid()


def tsk_importance(
    weight: float, attr_stats: AttributeStats, output_stats: AttributeStats
) -> tuple[str, str | None]:
    """Importance magnitude and sign of one TSK/ANNBFIS linear weight."""
    if weight == 0:
        return IMPORTANCE_NAMES[0], None
    influence = abs(weight) * attr_stats.stddev / max(output_stats.stddev, 1e-12)
    magnitude = IMPORTANCE_NAMES[-1]
    for i, bound in enumerate(_IMPORTANCE_BOUNDS):
        if influence < bound:
            magnitude = IMPORTANCE_NAMES[i]
            break
    return magnitude, "positive" if weight > 0 else "negative"


def describe_membership(
    attribute: str,
    mf: MembershipFunction,
    stats: AttributeStats,
    literal_sign: bool = False,
) -> DescriptorDescription:
    """Structured description of one premise descriptor."""
    notes: list[str] = []
    tail = mf.tail
    if tail is Tail.CRISP:
        location, degenerate = location_label_two_tailed(mf.a, stats, literal_sign)
        if degenerate:
            notes.append("degenerate-stats")
        return DescriptorDescription(attribute, "exactly", "is", location, tuple(notes))
    if tail is Tail.TWO_TAILED:
        if isinstance(mf, Gaussian):
            center, spread = mf.m, mf.sigma
        elif isinstance(mf, Triangular):
            center, spread = mf.centroid(), (mf.c - mf.a) / 2.0
        elif isinstance(mf, Trapezoidal):
            center, spread = mf.centroid(), (mf.d - mf.a) / 2.0
        else:  # pragma: no cover - every two-tailed shape is handled above
            raise TypeError(f"no verbalization for {mf.kind}")
        location, degenerate = location_label_two_tailed(center, stats, literal_sign)
        modifier, fdeg = fuzziness_label(spread, stats)
        if degenerate or fdeg:
            notes.append("degenerate-stats")
        return DescriptorDescription(attribute, modifier, "is", location, tuple(notes))
    # One-tailed shapes: crosspoint location plus slope adverb.
    if isinstance(mf, Semitriangular):
        crosspoint, s = mf.crosspoint(), mf.ramp_slope()
    else:
        crosspoint, s = mf.c, mf.s
    location, degenerate = location_label_one_tailed(crosspoint, stats, literal_sign)
    modifier, sdeg = slope_label(s, stats, mf.kind)
    if degenerate or sdeg:
        notes.append("degenerate-stats")
    relation = "is greater than" if tail is Tail.INCREASING else "is less than"
    return DescriptorDescription(attribute, modifier, relation, location, tuple(notes))


def describe_rulebase(
    rb: RuleBase,
    input_stats,
    output_stats: AttributeStats,
    literal_sign: bool = False,
) -> LinguisticDescription:
    """Structured + renderable description of a whole rule base.

    input_stats: sequence of AttributeStats aligned with the rule base's
    attribute indices.  Attributes are named "input 1" .. "input k" and
    "output" to match the listing format.
    """
    input_stats = list(input_stats)
    if len(input_stats) != rb.input_width:
        raise ValueError(
            f"got statistics for {len(input_stats)} attributes, "
            f"rule base has {rb.input_width}"
        )
    rules = []
    for rule in rb.rules:
        clauses = tuple(
            describe_membership(
                f"input {attr + 1}", mf, input_stats[attr], literal_sign
            )
            for attr, mf in rule.premise.clauses
        )
        cq = rule.consequence
        if isinstance(cq, MamdaniTriangle):
            consequence = describe_membership(
                "output", cq.triangle, output_stats, literal_sign
            )
        else:
            terms = []
            for j, w in enumerate(cq.weights):
                magnitude, sign = tsk_importance(w, input_stats[j], output_stats)
                terms.append(ImportanceTerm(f"input {j + 1}", magnitude, sign))
            location, degenerate = location_label_two_tailed(
                cq.constant, output_stats, literal_sign
            )
            consequence = TskConsequenceDescription(
                tuple(terms),
                location,
                ("degenerate-stats",) if degenerate else (),
            )
        rules.append(RuleDescription(clauses, consequence))
    return LinguisticDescription(tuple(rules))


def render_text(desc: LinguisticDescription) -> str:
    """Fixed listing layout; continuation lines carry a trailing space and
    each rule ends with a period."""
    blocks = []
    for n, rule in enumerate(desc.rules, start=1):
        lines = [f"RULE {n}"]
        for k, clause in enumerate(rule.premise):
            prefix = "IF     " if k == 0 else "   AND "
            lines.append(f"{prefix}{clause.text()} ")
        cq = rule.consequence
        if isinstance(cq, DescriptorDescription):
            lines.append(f"THEN {cq.text()}.")
        else:
            parts = [t.text() for t in cq.importances]
            parts.append(f"constant term is {cq.constant_location.name}")
            for k, part in enumerate(parts):
                prefix = "THEN   " if k == 0 else "   AND "
                suffix = "." if k == len(parts) - 1 else " "
                lines.append(f"{prefix}{part}{suffix}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _descriptor_to_dict(d: DescriptorDescription) -> dict:
    return {
        "attribute": d.attribute,
        "modifier": d.modifier,
        "relation": d.relation,
        "location": d.location.name,
        "notes": list(d.notes),
    }


def _rule_desc_to_dict(rule: RuleDescription) -> dict:
    cq = rule.consequence
    if isinstance(cq, DescriptorDescription):
        consequence = {"kind": "fuzzy_set", **_descriptor_to_dict(cq)}
    else:
        consequence = {
            "kind": "linear",
            "importances": [
                {"attribute": t.attribute, "magnitude": t.magnitude, "sign": t.sign}
                for t in cq.importances
            ],
            "constant_location": cq.constant_location.name,
            "notes": list(cq.notes),
        }
    return {
        "premise": [_descriptor_to_dict(c) for c in rule.premise],
        "consequence": consequence,
    }
