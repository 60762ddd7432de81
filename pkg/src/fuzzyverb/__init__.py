"""Neuro-fuzzy rule engine with English verbalization of rule bases."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .dataset import AttributeStats, Dataset, four_gausses, load_csv, save_csv, stats
from .linguistics import describe_rulebase, render_text
from .membership import (
    Arctangent,
    Gaussian,
    HyperbolicTangent,
    MembershipFunction,
    Semitriangular,
    Sigmoidal,
    Singleton,
    Trapezoidal,
    Triangular,
)
from .rulebase import (
    AnnbfisTriangle,
    MamdaniTriangle,
    Premise,
    Rule,
    RuleBase,
    SystemKind,
    TskLinear,
)
from .training import TrainConfig, TrainReport, initialize, train

__all__ = [
    "KERNEL_BACKEND",
    "AttributeStats",
    "Dataset",
    "four_gausses",
    "load_csv",
    "save_csv",
    "stats",
    "describe_rulebase",
    "render_text",
    "Arctangent",
    "Gaussian",
    "HyperbolicTangent",
    "MembershipFunction",
    "Semitriangular",
    "Sigmoidal",
    "Singleton",
    "Trapezoidal",
    "Triangular",
    "AnnbfisTriangle",
    "MamdaniTriangle",
    "Premise",
    "Rule",
    "RuleBase",
    "SystemKind",
    "TskLinear",
    "TrainConfig",
    "TrainReport",
    "initialize",
    "train",
]

__version__ = "0.1.0"
