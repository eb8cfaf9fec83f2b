"""Exact q-series verification of raft-move identities on distinct-part partitions."""

from .identities import (
    PROFILES,
    REGISTRY,
    CheckReport,
    FirstDiff,
    IdentityCheck,
    all_names,
    first_difference,
    run_check,
    run_many,
)
from .partitions import EvenPartition, Partition, Run
from .rafts import (
    MinimalProfile,
    MoveError,
    RaftedPartition,
    RaftError,
    compose,
    decompose,
    enumerate_minimal,
    enumerate_rafted,
    minimal_profile,
)
from .series import (
    NonUnitConstantError,
    PochhammerSpec,
    QSeries,
    TruncationMismatchError,
    XQSeries,
    gaussian_binomial,
    pochhammer,
    xq_pochhammer,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "EvenPartition",
    "FirstDiff",
    "IdentityCheck",
    "MinimalProfile",
    "MoveError",
    "NonUnitConstantError",
    "PROFILES",
    "Partition",
    "PochhammerSpec",
    "QSeries",
    "REGISTRY",
    "RaftError",
    "RaftedPartition",
    "Run",
    "TruncationMismatchError",
    "XQSeries",
    "__version__",
    "all_names",
    "compose",
    "decompose",
    "enumerate_minimal",
    "enumerate_rafted",
    "first_difference",
    "gaussian_binomial",
    "minimal_profile",
    "pochhammer",
    "run_check",
    "run_many",
    "xq_pochhammer",
]
