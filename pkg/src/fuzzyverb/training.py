"""Rule base elaboration: FCM initialization, gradient premise tuning,
least-squares consequence solving.

Premise training requires Gaussian descriptors throughout.  All training is
batch (full dataset) with a fixed learning rate and is fully deterministic
for a given (dataset, config) pair.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import _kernels as kernels
from .dataset import Dataset, stats
from .membership import Gaussian, UnsupportedGradient
from .rulebase import (
    AnnbfisTriangle,
    MamdaniTriangle,
    Premise,
    Rule,
    RuleBase,
    SystemKind,
    Triangular,
    TskLinear,
)

SIGMA_FLOOR = 1e-6
FCM_SIGMA_REL_FLOOR = 1e-3
FCM_FUZZIFIER = 2.0
FCM_MAX_ITER = 100
FCM_TOL = 1e-6
RIDGE = 1e-9


@dataclass(frozen=True)
class TrainConfig:
    kind: SystemKind
    n_rules: int
    epochs: int
    learning_rate: float
    seed: int

    def __post_init__(self):
        if self.n_rules < 1:
            raise ValueError(f"n_rules must be >= 1, got {self.n_rules}")
        if self.epochs < 0:
            raise ValueError(f"epochs must be >= 0, got {self.epochs}")
        if self.learning_rate < 0:
            raise ValueError(f"learning_rate must be >= 0, got {self.learning_rate}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class TrainReport:
    rmse_per_epoch: tuple[float, ...]  # epochs + 1 entries, index 0 = pre-training
    final_rulebase: RuleBase


def _premise_arrays(rb: RuleBase):
    """(M, S, mask) arrays for Gaussian premises; raises on other shapes."""
    R, p = len(rb.rules), rb.input_width
    M = np.zeros((R, p))
    S = np.ones((R, p))
    mask = np.zeros((R, p), dtype=np.bool_)
    for r, rule in enumerate(rb.rules):
        for attr, mf in rule.premise.clauses:
            if not isinstance(mf, Gaussian):
                raise UnsupportedGradient(
                    f"premise gradient training requires Gaussian descriptors, "
                    f"rule {r} uses {mf.kind}"
                )
            M[r, attr] = mf.m
            S[r, attr] = mf.sigma
            mask[r, attr] = True
    return M, S, mask


def _consequence_arrays(rb: RuleBase):
    """(W, B, A): linear weights, constants/centroids, area factors."""
    R, p = len(rb.rules), rb.input_width
    W = np.zeros((R, p))
    B = np.zeros(R)
    A = np.ones(R)
    for r, rule in enumerate(rb.rules):
        cq = rule.consequence
        if isinstance(cq, MamdaniTriangle):
            B[r] = cq.triangle.centroid()
            A[r] = cq.triangle.area()
        else:
            W[r] = cq.weights
            B[r] = cq.constant
    return W, B, A


def _with_premises(rb: RuleBase, M, S, mask) -> RuleBase:
    rules = []
    for r, rule in enumerate(rb.rules):
        clauses = tuple(
            (attr, Gaussian(float(M[r, attr]), float(S[r, attr])))
            for attr, _ in rule.premise.clauses
        )
        rules.append(replace(rule, premise=Premise(clauses)))
    return replace(rb, rules=tuple(rules))


def _firing_matrix(rb: RuleBase, X) -> np.ndarray:
    """Firing strengths for every (sample, rule); kernel path for Gaussian
    premises, generic python path otherwise."""
    try:
        M, S, mask = _premise_arrays(rb)
    except UnsupportedGradient:
        return np.array(
            [[rule.premise.firing(x) for rule in rb.rules] for x in X]
        )
    return kernels.firing(X, M, S, mask)


def predict(rb: RuleBase, X) -> np.ndarray:
    """Vectorized crisp outputs for a batch of inputs."""
    X = np.asarray(X, dtype=np.float64)
    G = _firing_matrix(rb, X)
    W, B, A = _consequence_arrays(rb)
    C = X @ W.T + B[None, :]
    GA = G * A[None, :]
    D = GA.sum(axis=1)
    ok = D > 0.0
    y = np.where(ok, (GA * C).sum(axis=1) / np.where(ok, D, 1.0), C.mean(axis=1))
    return y


def rmse(rb: RuleBase, d: Dataset) -> float:
    resid = predict(rb, d.rows) - d.outputs
    return float(np.sqrt(np.mean(resid**2)))


def initialize(d: Dataset, cfg: TrainConfig) -> RuleBase:
    """FCM-based rule base: one rule per cluster, Gaussian premise per
    attribute, consequences anchored at the output mean."""
    if cfg.n_rules > d.n_rows:
        raise ValueError(
            f"n_rules={cfg.n_rules} exceeds the number of rows {d.n_rows}"
        )
    X = d.rows
    if np.all(X == X[0]):
        raise ValueError("cannot initialize from all-identical rows")
    st = stats(d)
    rng = np.random.default_rng(cfg.seed)
    U0 = rng.random((d.n_rows, cfg.n_rules))
    U0 /= U0.sum(axis=1, keepdims=True)
    centers, U = kernels.fcm(
        np.ascontiguousarray(X), U0, FCM_FUZZIFIER, FCM_MAX_ITER, FCM_TOL
    )

    Wm = U**FCM_FUZZIFIER
    wsum = Wm.sum(axis=0)
    y_mean = st[d.output_name].mean
    y_std = st[d.output_name].stddev
    half_width = max(y_std, SIGMA_FLOOR)

    rules = []
    for r in range(cfg.n_rules):
        clauses = []
        for j, name in enumerate(d.attribute_names):
            var = float((Wm[:, r] * (X[:, j] - centers[r, j]) ** 2).sum() / wsum[r])
            floor = max(FCM_SIGMA_REL_FLOOR * st[name].stddev, SIGMA_FLOOR)
            sigma = max(np.sqrt(var), floor)
            clauses.append((j, Gaussian(float(centers[r, j]), float(sigma))))
        if cfg.kind is SystemKind.MA:
            cq = MamdaniTriangle(
                Triangular(y_mean - half_width, y_mean, y_mean + half_width)
            )
        elif cfg.kind is SystemKind.TSK:
            cq = TskLinear((0.0,) * d.n_attributes, y_mean)
        else:
            cq = AnnbfisTriangle(half_width, (0.0,) * d.n_attributes, y_mean)
        rules.append(Rule(Premise(tuple(clauses)), cq))
    return RuleBase(tuple(rules), cfg.kind, d.attribute_names)


def _premise_step(rb: RuleBase, d: Dataset, learning_rate: float) -> RuleBase:
    M, S, mask = _premise_arrays(rb)
    W, B, A = _consequence_arrays(rb)
    dM, dS = kernels.premise_grad(d.rows, d.outputs, M, S, mask, W, B, A)
    M = M - learning_rate * dM
    S = np.maximum(S - learning_rate * dS, SIGMA_FLOOR)
    return _with_premises(rb, M, S, mask)


def train_premises_gradient(rb: RuleBase, d: Dataset, cfg: TrainConfig) -> RuleBase:
    """cfg.epochs batch gradient steps on the Gaussian premise parameters."""
    for _ in range(cfg.epochs):
        rb = _premise_step(rb, d, cfg.learning_rate)
    return rb


def _ma_consequence_step(rb: RuleBase, d: Dataset, learning_rate: float) -> RuleBase:
    """Gradient step on MA consequence-triangle centroids (widths fixed)."""
    X, t = d.rows, d.outputs
    n = X.shape[0]
    G = _firing_matrix(rb, X)
    W, B, A = _consequence_arrays(rb)
    GA = G * A[None, :]
    D = GA.sum(axis=1)
    ok = D > 0.0
    D_safe = np.where(ok, D, 1.0)
    y = np.where(ok, (GA * B[None, :]).sum(axis=1) / D_safe, B.mean())
    err = np.where(ok, y - t, 0.0)
    dB = (2.0 / n) * ((err / D_safe)[:, None] * GA).sum(axis=0)
    rules = []
    for r, rule in enumerate(rb.rules):
        tri = rule.consequence.triangle
        shift = -learning_rate * float(dB[r])
        moved = Triangular(tri.a + shift, tri.b + shift, tri.c + shift)
        rules.append(replace(rule, consequence=MamdaniTriangle(moved)))
    return replace(rb, rules=tuple(rules))


def solve_consequences_ls(rb: RuleBase, d: Dataset) -> tuple[RuleBase, bool]:
    """Jointly solve all TSK/ANNBFIS consequence parameters by linear least
    squares on the normalized firing strengths.  Returns (rule base,
    rank_deficient flag); rank deficiency switches to a ridge solution."""
    if rb.kind is SystemKind.MA:
        raise ValueError("least-squares consequence solving applies to TSK/ANNBFIS only")
    X, t = d.rows, d.outputs
    n, p = X.shape
    R = len(rb.rules)
    G = _firing_matrix(rb, X)
    D = G.sum(axis=1)
    ok = D > 0.0
    # All-zero firing rows see every rule equally.
    Gbar = np.where(ok[:, None], G / np.where(ok, D, 1.0)[:, None], 1.0 / R)
    X1 = np.column_stack([X, np.ones(n)])
    # Design matrix: per rule r, columns gbar_r * [x, 1].
    Phi = (Gbar[:, :, None] * X1[:, None, :]).reshape(n, R * (p + 1))
    cols = Phi.shape[1]
    solution, _, rank, _ = np.linalg.lstsq(Phi, t, rcond=None)
    rank_deficient = rank < cols
    if rank_deficient:
        gram = Phi.T @ Phi + RIDGE * np.eye(cols)
        solution = np.linalg.solve(gram, Phi.T @ t)
    solution = solution.reshape(R, p + 1)
    rules = []
    for r, rule in enumerate(rb.rules):
        weights = tuple(float(w) for w in solution[r, :p])
        constant = float(solution[r, p])
        if rb.kind is SystemKind.TSK:
            cq = TskLinear(weights, constant)
        else:
            cq = replace(rule.consequence, weights=weights, constant=constant)
        rules.append(replace(rule, consequence=cq))
    return replace(rb, rules=tuple(rules)), rank_deficient


def train(d: Dataset, cfg: TrainConfig) -> TrainReport:
    """Initialize, then per epoch: consequence update (least squares for
    TSK/ANNBFIS, centroid gradient for MA) followed by a premise gradient
    step; RMSE recorded before training and after every epoch."""
    rb = initialize(d, cfg)
    history = [rmse(rb, d)]
    for _ in range(cfg.epochs):
        if cfg.kind is SystemKind.MA:
            rb = _ma_consequence_step(rb, d, cfg.learning_rate)
        else:
            rb, _ = solve_consequences_ls(rb, d)
        rb = _premise_step(rb, d, cfg.learning_rate)
        history.append(rmse(rb, d))
    return TrainReport(tuple(history), rb)
