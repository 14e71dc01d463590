"""
probmetric — exact probability metrics, minimal metrics and uniform gauges on
finite metric spaces.

Random variables live on the sample space [0,1) with Lebesgue measure; every
value is computed with rational arithmetic so identities can be checked with
zero tolerance.
"""

__version__ = "0.1.0"

from .errors import ProbMetricError  # noqa: E402
from .gauges import Gauge, SequenceSpec, coreflect, limit_operator, reflect  # noqa: E402
from .metrics import (  # noqa: E402
    Comparator,
    Indicator,
    KyFan,
    LInf,
    Lp,
    MetricValue,
    ProbabilityMetric,
    Prokhorov,
    SupOf,
    TotalVariation,
)
from .minimal import MinimalMetric, hat, hat_with_witness  # noqa: E402
from .models import (  # noqa: E402
    ChainLaw,
    CouplingMatrix,
    FinMetricSpace,
    Law,
    RandomVariable,
    make_space,
)
from .probability import joint_law, law_of, realize, realize_chain  # noqa: E402

__all__ = [
    "__version__",
    "ProbMetricError",
    "FinMetricSpace",
    "Law",
    "RandomVariable",
    "ChainLaw",
    "CouplingMatrix",
    "make_space",
    "law_of",
    "joint_law",
    "realize",
    "realize_chain",
    "ProbabilityMetric",
    "MetricValue",
    "Comparator",
    "KyFan",
    "Lp",
    "LInf",
    "Indicator",
    "Prokhorov",
    "TotalVariation",
    "SupOf",
    "MinimalMetric",
    "hat",
    "hat_with_witness",
    "Gauge",
    "SequenceSpec",
    "limit_operator",
    "reflect",
    "coreflect",
]
