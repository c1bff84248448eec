"""
核心泛函 F(p, t) 与 log 凸性探针
"""
from .functional_spec import (
    FunctionalSpec,
    Variant,
    build_spec,
    evaluate_F,
    log_evaluate_F,
)
from .grid import ProbeGrid
from .probes import (
    kyfan_geometric_limit,
    limit_probe,
    monotone_section_check,
    poslin_power_probe,
    probe_map_logconvexity,
    probe_logconvexity,
    reciprocal_lie_trotter_probe,
)

__all__ = [
    "FunctionalSpec",
    "Variant",
    "build_spec",
    "evaluate_F",
    "log_evaluate_F",
    "ProbeGrid",
    "kyfan_geometric_limit",
    "limit_probe",
    "monotone_section_check",
    "poslin_power_probe",
    "probe_map_logconvexity",
    "probe_logconvexity",
    "reciprocal_lie_trotter_probe",
]
