"""Membership functions for fuzzy descriptors.

Eight shapes are supported.  Triangular, trapezoidal, Gaussian, and singleton
sets model two-tailed notions ("low", "high"); semitriangular, sigmoidal,
arctangent, and hyperbolic tangent sets model one-tailed notions ("less
than", "greater than").  Gaussian, sigmoidal, arctangent, and hyperbolic
tangent are differentiable with respect to their parameters and expose an
analytic gradient for training.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields


class InvalidParameters(ValueError):
    """Membership function parameters violate their constraints."""


class UnsupportedGradient(TypeError):
    """Parameter gradient requested for a non-differentiable shape."""


class Tail(enum.Enum):
    TWO_TAILED = "two_tailed"
    INCREASING = "increasing_one_tailed"
    DECREASING = "decreasing_one_tailed"
    CRISP = "crisp"

    @property
    def one_tailed(self) -> bool:
        return self in (Tail.INCREASING, Tail.DECREASING)


@dataclass(frozen=True)
class MembershipFunction:
    """Base class; immutable, safe to share across threads."""

    kind = "abstract"

    def evaluate(self, x: float) -> float:
        raise NotImplementedError

    def gradient(self, x: float) -> dict[str, float]:
        raise UnsupportedGradient(
            f"{self.kind} membership function has no parameter gradient"
        )

    @property
    def tail(self) -> Tail:
        raise NotImplementedError

    def params(self) -> dict[str, float]:
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": self.params()}

    def __call__(self, x: float) -> float:
        return self.evaluate(x)


@dataclass(frozen=True)
class Triangular(MembershipFunction):
    a: float  # support min
    b: float  # core
    c: float  # support max

    kind = "triangular"

    def __post_init__(self):
        if not (self.a <= self.b <= self.c):
            raise InvalidParameters(
                f"triangular requires a <= b <= c, got ({self.a}, {self.b}, {self.c})"
            )

    def evaluate(self, x: float) -> float:
        # Degenerate ramps (a == b or b == c) evaluate as steps.
        if x < self.a or x > self.c:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        if x > self.b:
            return (self.c - x) / (self.c - self.b)
        return 1.0

    @property
    def tail(self) -> Tail:
        return Tail.TWO_TAILED

    def centroid(self) -> float:
        return (self.a + self.b + self.c) / 3.0

    def area(self) -> float:
        """Area under the unit-height triangle."""
        return (self.c - self.a) / 2.0


@dataclass(frozen=True)
class Trapezoidal(MembershipFunction):
    a: float  # support min
    b: float  # core min
    c: float  # core max
    d: float  # support max

    kind = "trapezoidal"

    def __post_init__(self):
        if not (self.a <= self.b <= self.c <= self.d):
            raise InvalidParameters(
                "trapezoidal requires a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )

    def evaluate(self, x: float) -> float:
        if x < self.a or x > self.d:
            return 0.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        if x > self.c:
            return (self.d - x) / (self.d - self.c)
        return 1.0

    @property
    def tail(self) -> Tail:
        return Tail.TWO_TAILED

    def centroid(self) -> float:
        return (self.a + self.b + self.c + self.d) / 4.0


@dataclass(frozen=True)
class Gaussian(MembershipFunction):
    m: float  # core
    sigma: float  # spread, > 0

    kind = "gaussian"

    def __post_init__(self):
        if not self.sigma > 0:
            raise InvalidParameters(f"gaussian requires sigma > 0, got {self.sigma}")

    def evaluate(self, x: float) -> float:
        return math.exp(-((x - self.m) ** 2) / (2.0 * self.sigma**2))

    def gradient(self, x: float) -> dict[str, float]:
        mu = self.evaluate(x)
        return {
            "m": mu * (x - self.m) / self.sigma**2,
            "sigma": mu * (x - self.m) ** 2 / self.sigma**3,
        }

    @property
    def tail(self) -> Tail:
        return Tail.TWO_TAILED


@dataclass(frozen=True)
class Singleton(MembershipFunction):
    a: float

    kind = "singleton"

    def evaluate(self, x: float) -> float:
        # Exact comparison on purpose: singletons are produced, never matched
        # against noisy input.
        return 1.0 if x == self.a else 0.0

    @property
    def tail(self) -> Tail:
        return Tail.CRISP


@dataclass(frozen=True)
class Semitriangular(MembershipFunction):
    """One sloped edge between a (membership 1) and b (membership 0)."""

    a: float
    b: float

    kind = "semitriangular"

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidParameters("semitriangular requires a != b")

    def evaluate(self, x: float) -> float:
        return max(min(1.0, (self.b - x) / (self.b - self.a)), 0.0)

    @property
    def tail(self) -> Tail:
        return Tail.INCREASING if self.a > self.b else Tail.DECREASING

    def ramp_slope(self) -> float:
        """Signed slope of the linear edge; |1/(b-a)| steers the slope label."""
        return 1.0 / (self.a - self.b)

    def crosspoint(self) -> float:
        return (self.a + self.b) / 2.0


def _require_nonzero_slope(s: float, kind: str) -> None:
    if s == 0:
        raise InvalidParameters(f"{kind} requires s != 0")


@dataclass(frozen=True)
class Sigmoidal(MembershipFunction):
    c: float  # crosspoint
    s: float  # slope, != 0

    kind = "sigmoidal"

    def __post_init__(self):
        _require_nonzero_slope(self.s, self.kind)

    def evaluate(self, x: float) -> float:
        t = self.s * (x - self.c)
        if t >= 0:
            return 1.0 / (1.0 + math.exp(-t))
        z = math.exp(t)
        return z / (1.0 + z)

    def gradient(self, x: float) -> dict[str, float]:
        mu = self.evaluate(x)
        core = mu * (1.0 - mu)
        return {"c": -self.s * core, "s": (x - self.c) * core}

    @property
    def tail(self) -> Tail:
        return Tail.INCREASING if self.s > 0 else Tail.DECREASING


@dataclass(frozen=True)
class Arctangent(MembershipFunction):
    c: float
    s: float

    kind = "arctan"

    def __post_init__(self):
        _require_nonzero_slope(self.s, self.kind)

    def evaluate(self, x: float) -> float:
        return 0.5 + math.atan(self.s * (x - self.c)) / math.pi

    def gradient(self, x: float) -> dict[str, float]:
        u = self.s * (x - self.c)
        core = 1.0 / (math.pi * (1.0 + u * u))
        return {"c": -self.s * core, "s": (x - self.c) * core}

    @property
    def tail(self) -> Tail:
        return Tail.INCREASING if self.s > 0 else Tail.DECREASING


@dataclass(frozen=True)
class HyperbolicTangent(MembershipFunction):
    c: float
    s: float

    kind = "tanh"

    def __post_init__(self):
        _require_nonzero_slope(self.s, self.kind)

    def evaluate(self, x: float) -> float:
        return 0.5 + 0.5 * math.tanh(self.s * (x - self.c))

    def gradient(self, x: float) -> dict[str, float]:
        th = math.tanh(self.s * (x - self.c))
        core = 0.5 * (1.0 - th * th)
        return {"c": -self.s * core, "s": (x - self.c) * core}

    @property
    def tail(self) -> Tail:
        return Tail.INCREASING if self.s > 0 else Tail.DECREASING


_KINDS: dict[str, type[MembershipFunction]] = {
    cls.kind: cls
    for cls in (
        Triangular,
        Trapezoidal,
        Gaussian,
        Singleton,
        Semitriangular,
        Sigmoidal,
        Arctangent,
        HyperbolicTangent,
    )
}

DIFFERENTIABLE_KINDS = frozenset({"gaussian", "sigmoidal", "arctan", "tanh"})


def from_dict(obj: dict) -> MembershipFunction:
    """Build a membership function from {"kind": ..., "params": {...}}."""
    if not isinstance(obj, dict):
        raise InvalidParameters(f"membership function must be an object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind not in _KINDS:
        raise InvalidParameters(f"unknown membership kind {kind!r}")
    cls = _KINDS[kind]
    params = obj.get("params")
    if not isinstance(params, dict):
        raise InvalidParameters(f"missing params object for membership kind {kind!r}")
    expected = [f.name for f in fields(cls)]
    missing = [name for name in expected if name not in params]
    if missing:
        raise InvalidParameters(f"{kind} membership missing params: {', '.join(missing)}")
    extra = [name for name in params if name not in expected]
    if extra:
        raise InvalidParameters(f"{kind} membership has unknown params: {', '.join(extra)}")
    try:
        values = {name: float(params[name]) for name in expected}
    except (TypeError, ValueError) as exc:
        raise InvalidParameters(f"{kind} membership has non-numeric params") from exc
    return cls(**values)
