"""Fuzzy rule bases and MA / TSK / ANNBFIS inference.

A rule is a conjunction of (attribute, descriptor) clauses plus a
consequence.  Premise conjunction uses the product t-norm (differentiable,
which gradient training needs).  Defuzzification is analytic throughout:

* MA: firing- and area-weighted mean of consequence-triangle centroids
  (height scaling keeps a triangle's centroid abscissa fixed).
* TSK: firing-weighted mean of the moving singletons w.x + w0.
* ANNBFIS: the moving isosceles triangle's apex equals its centroid, so the
  crisp output reduces to a firing-weighted apex mean; the width parameter
  is kept on the consequence but does not enter the reduced output.

When every firing strength is zero (extreme extrapolation) inference falls
back to the unweighted mean of the consequence values and flags it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import membership
from .membership import MembershipFunction, Triangular


class SchemaError(ValueError):
    """Rule base JSON violates the schema; message names the offending path."""


class SystemKind(enum.Enum):
    MA = "MA"
    TSK = "TSK"
    ANNBFIS = "ANNBFIS"


@dataclass(frozen=True)
class Premise:
    clauses: tuple[tuple[int, MembershipFunction], ...]

    def __post_init__(self):
        clauses = tuple((int(a), mf) for a, mf in self.clauses)
        indices = [a for a, _ in clauses]
        if len(set(indices)) != len(indices):
            raise ValueError("premise uses the same attribute twice")
        if any(a < 0 for a in indices):
            raise ValueError("negative attribute index in premise")
        object.__setattr__(self, "clauses", clauses)

    def firing(self, x) -> float:
        strength = 1.0
        for attr, mf in self.clauses:
            strength *= mf.evaluate(float(x[attr]))
        return strength


@dataclass(frozen=True)
class MamdaniTriangle:
    triangle: Triangular

    def value(self, x) -> float:
        return self.triangle.centroid()

    def area(self) -> float:
        return self.triangle.area()


@dataclass(frozen=True)
class TskLinear:
    weights: tuple[float, ...]
    constant: float

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))

    def value(self, x) -> float:
        return float(np.dot(self.weights, x[: len(self.weights)])) + self.constant


@dataclass(frozen=True)
class AnnbfisTriangle:
    width: float
    weights: tuple[float, ...]
    constant: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError(f"ANNBFIS triangle width must be positive, got {self.width}")
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))

    def value(self, x) -> float:
        return float(np.dot(self.weights, x[: len(self.weights)])) + self.constant


Consequence = MamdaniTriangle | TskLinear | AnnbfisTriangle

_CONSEQUENCE_FOR_KIND = {
    SystemKind.MA: MamdaniTriangle,
    SystemKind.TSK: TskLinear,
    SystemKind.ANNBFIS: AnnbfisTriangle,
}


@dataclass(frozen=True)
class Rule:
    premise: Premise
    consequence: Consequence


@dataclass(frozen=True)
class RuleBase:
    rules: tuple[Rule, ...]
    kind: SystemKind
    input_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "input_names", tuple(self.input_names))
        if not self.rules:
            raise ValueError("rule base needs at least one rule")
        want = _CONSEQUENCE_FOR_KIND[self.kind]
        width = self.input_width
        for i, rule in enumerate(self.rules):
            if not isinstance(rule.consequence, want):
                raise ValueError(
                    f"rule {i}: {self.kind.value} rule base requires "
                    f"{want.__name__} consequences"
                )
            if isinstance(rule.consequence, (TskLinear, AnnbfisTriangle)):
                if len(rule.consequence.weights) != width:
                    raise ValueError(
                        f"rule {i}: consequence weight vector length "
                        f"{len(rule.consequence.weights)} != input width {width}"
                    )
            for attr, _ in rule.premise.clauses:
                if attr >= width:
                    raise ValueError(
                        f"rule {i}: premise attribute index {attr} out of range"
                    )

    @property
    def input_width(self) -> int:
        return len(self.input_names)

    def _rule_weight(self, rule: Rule, g: float) -> float:
        if isinstance(rule.consequence, MamdaniTriangle):
            return g * rule.consequence.area()
        return g

    def infer_verbose(self, x) -> tuple[float, bool]:
        """Crisp output and a flag marking the all-zero-firing fallback."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.input_width,):
            raise ValueError(
                f"input has shape {x.shape}, expected ({self.input_width},)"
            )
        num = 0.0
        den = 0.0
        values = []
        for rule in self.rules:
            g = rule.premise.firing(x)
            v = rule.consequence.value(x)
            w = self._rule_weight(rule, g)
            num += w * v
            den += w
            values.append(v)
        if den <= 0.0:
            return float(np.mean(values)), True
        return num / den, False

    def infer(self, x) -> float:
        return self.infer_verbose(x)[0]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "inputs": list(self.input_names),
            "rules": [_rule_to_dict(rule) for rule in self.rules],
        }


def _rule_to_dict(rule: Rule) -> dict:
    cq = rule.consequence
    if isinstance(cq, MamdaniTriangle):
        consequence = {"kind": "mamdani_triangle", "triangle": cq.triangle.to_dict()}
    elif isinstance(cq, TskLinear):
        consequence = {
            "kind": "tsk_linear",
            "weights": list(cq.weights),
            "constant": cq.constant,
        }
    else:
        consequence = {
            "kind": "annbfis_triangle",
            "width": cq.width,
            "weights": list(cq.weights),
            "constant": cq.constant,
        }
    return {
        "premise": [
            {"attr": attr, "mf": mf.to_dict()} for attr, mf in rule.premise.clauses
        ],
        "consequence": consequence,
    }


def _need(obj: dict, key: str, path: str):
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object")
    if key not in obj:
        raise SchemaError(f"{path}.{key}: missing")
    return obj[key]


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{path}: expected a number")
    return float(value)


def _consequence_from_dict(obj, path: str) -> Consequence:
    kind = _need(obj, "kind", path)
    if kind == "mamdani_triangle":
        tri_obj = _need(obj, "triangle", path)
        try:
            mf = membership.from_dict(tri_obj)
        except membership.InvalidParameters as exc:
            raise SchemaError(f"{path}.triangle: {exc}") from exc
        if not isinstance(mf, Triangular):
            raise SchemaError(f"{path}.triangle: must be a triangular membership")
        return MamdaniTriangle(mf)
    if kind in ("tsk_linear", "annbfis_triangle"):
        weights = _need(obj, "weights", path)
        if not isinstance(weights, list):
            raise SchemaError(f"{path}.weights: expected an array")
        ws = tuple(
            _number(w, f"{path}.weights[{i}]") for i, w in enumerate(weights)
        )
        constant = _number(_need(obj, "constant", path), f"{path}.constant")
        if kind == "tsk_linear":
            return TskLinear(ws, constant)
        width = _number(_need(obj, "width", path), f"{path}.width")
        try:
            return AnnbfisTriangle(width, ws, constant)
        except ValueError as exc:
            raise SchemaError(f"{path}.width: {exc}") from exc
    raise SchemaError(f"{path}.kind: unknown consequence kind {kind!r}")


def from_dict(obj: dict) -> RuleBase:
    """Parse the rule base JSON schema; SchemaError messages carry JSON paths."""
    kind_name = _need(obj, "kind", "$")
    try:
        kind = SystemKind(kind_name)
    except ValueError:
        raise SchemaError(f"$.kind: unknown system kind {kind_name!r}") from None
    inputs = _need(obj, "inputs", "$")
    if not isinstance(inputs, list) or not all(isinstance(n, str) for n in inputs):
        raise SchemaError("$.inputs: expected an array of attribute names")
    rules_obj = _need(obj, "rules", "$")
    if not isinstance(rules_obj, list) or not rules_obj:
        raise SchemaError("$.rules: expected a non-empty array")
    rules = []
    for i, rule_obj in enumerate(rules_obj):
        rpath = f"$.rules[{i}]"
        premise_obj = _need(rule_obj, "premise", rpath)
        if not isinstance(premise_obj, list):
            raise SchemaError(f"{rpath}.premise: expected an array")
        clauses = []
        for k, clause_obj in enumerate(premise_obj):
            cpath = f"{rpath}.premise[{k}]"
            attr = _need(clause_obj, "attr", cpath)
            if isinstance(attr, bool) or not isinstance(attr, int):
                raise SchemaError(f"{cpath}.attr: expected an integer index")
            mf_obj = _need(clause_obj, "mf", cpath)
            try:
                mf = membership.from_dict(mf_obj)
            except membership.InvalidParameters as exc:
                raise SchemaError(f"{cpath}.mf: {exc}") from exc
            clauses.append((attr, mf))
        consequence = _consequence_from_dict(
            _need(rule_obj, "consequence", rpath), f"{rpath}.consequence"
        )
        try:
            rules.append(Rule(Premise(tuple(clauses)), consequence))
        except ValueError as exc:
            raise SchemaError(f"{rpath}: {exc}") from exc
    try:
        return RuleBase(tuple(rules), kind, tuple(inputs))
    except ValueError as exc:
        raise SchemaError(f"$: {exc}") from exc
