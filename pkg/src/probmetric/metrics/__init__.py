"""
Metrics module — exact probability metrics between random variables.
"""

from .base import (
    EXACT,
    Comparator,
    MetricDescriptor,
    MetricFunctional,
    MetricValue,
    ProbabilityMetric,
    SupOf,
    compare_values,
    eval_metric,
    is_simple,
    max_value,
    min_value,
)
from .oracles import GridOracleResult, kyfan_grid_oracle, prokhorov_grid_oracle
from .pathwise import (
    Indicator,
    KyFan,
    LInf,
    Lp,
    distance_distribution,
    indicator_metric,
    ky_fan,
    linf_metric,
    lp_metric,
    small_lambda,
    threshold_infimum,
)
from .simple import (
    Prokhorov,
    TotalVariation,
    prokhorov,
    prokhorov_profile,
    total_variation,
    tv_subset_oracle,
)

# Descriptor keyword -> class. Parametrized entries take one rational argument.
METRIC_MAP: dict[str, type[ProbabilityMetric]] = {
    "kyfan": KyFan,
    "lp": Lp,
    "linf": LInf,
    "ind": Indicator,
    "prok": Prokhorov,
    "tv": TotalVariation,
}

PARAMETRIZED = frozenset({"kyfan", "lp", "prok"})

__all__ = [
    "ProbabilityMetric",
    "MetricDescriptor",
    "MetricFunctional",
    "MetricValue",
    "Comparator",
    "EXACT",
    "SupOf",
    "compare_values",
    "max_value",
    "min_value",
    "eval_metric",
    "is_simple",
    # Pathwise
    "KyFan",
    "Lp",
    "LInf",
    "Indicator",
    "ky_fan",
    "lp_metric",
    "linf_metric",
    "indicator_metric",
    "distance_distribution",
    "threshold_infimum",
    "small_lambda",
    # Simple
    "Prokhorov",
    "TotalVariation",
    "prokhorov",
    "total_variation",
    "prokhorov_profile",
    "tv_subset_oracle",
    # Oracles
    "GridOracleResult",
    "kyfan_grid_oracle",
    "prokhorov_grid_oracle",
    "METRIC_MAP",
    "PARAMETRIZED",
]
