"""
Gauges module — probability uniform gauges, limit operators and contractions.
"""

from .contraction import (
    EPS_OMEGA_GRID,
    ContractionReport,
    ContractionViolation,
    FactorizationReport,
    check_random_contraction,
    verify_reflection_factorization,
    witness_closure,
)
from .explorer import GapReport, min_limit_gap
from .gauge import (
    LAMBDA_GRID,
    Gauge,
    GaugeKind,
    SequenceSpec,
    VersionSequence,
    coreflect,
    limit_operator,
    limit_operator_window,
    limsup_hat,
    limsup_seq,
    random_version_sequence,
    reflect,
    version_sequence,
)

__all__ = [
    "Gauge",
    "GaugeKind",
    "SequenceSpec",
    "VersionSequence",
    "LAMBDA_GRID",
    "limsup_seq",
    "limsup_hat",
    "limit_operator",
    "limit_operator_window",
    "reflect",
    "coreflect",
    "version_sequence",
    "random_version_sequence",
    "min_limit_gap",
    "GapReport",
    "check_random_contraction",
    "verify_reflection_factorization",
    "witness_closure",
    "ContractionReport",
    "ContractionViolation",
    "FactorizationReport",
    "EPS_OMEGA_GRID",
]
