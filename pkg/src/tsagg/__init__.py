"""Time-series aggregation into weighted typical periods with segments."""

from .core import (
    NormParams,
    PeriodFrame,
    TimeSeriesSet,
    denormalize,
    normalize,
    to_periods,
    validate_and_build,
)
from .errors import ConfigError, DataError
from .hierarchy import ClusterResult, Connectivity, Linkage, medoid_of, ward_cluster, ward_linkage
from .metrics import (
    MetricsReport,
    attribute_rmse,
    build_report,
    duration_curve_rmse,
    reconstruct,
    rmse_tot,
)
from .pathway import (
    ConfigEvaluator,
    PathwayState,
    PathwayTrace,
    build_grid,
    evaluate_config,
    pathway_search,
    select_config,
)
from .representation import (
    RepresentativeSet,
    represent,
    represent_centroid,
    represent_distribution,
    represent_medoid,
)
from .segmentation import Segment, SegmentLayout, segment_period, segment_representatives

__all__ = [
    "ClusterResult",
    "ConfigError",
    "ConfigEvaluator",
    "Connectivity",
    "DataError",
    "Linkage",
    "MetricsReport",
    "NormParams",
    "PathwayState",
    "PathwayTrace",
    "PeriodFrame",
    "RepresentativeSet",
    "Segment",
    "SegmentLayout",
    "TimeSeriesSet",
    "attribute_rmse",
    "build_grid",
    "build_report",
    "denormalize",
    "duration_curve_rmse",
    "evaluate_config",
    "medoid_of",
    "normalize",
    "pathway_search",
    "reconstruct",
    "represent",
    "represent_centroid",
    "represent_distribution",
    "represent_medoid",
    "rmse_tot",
    "segment_period",
    "segment_representatives",
    "select_config",
    "to_periods",
    "validate_and_build",
    "ward_cluster",
    "ward_linkage",
]
