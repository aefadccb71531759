"""Willmore energies, hyperbolic elastica and gradient flow for surfaces of
revolution with clamped boundary."""

from . import errors
from .curve import SampledCurve, catenoid_arc, from_function
from .elastica import (Branch, ElasticaArc, Orientation, partial_energies,
                       s0_from_x, side_energy, singularity_x, solve_boundary,
                       solve_frenet)
from .flow import (FlowConfig, FlowMonitors, FlowState, discrete_energy,
                   discrete_gradient, run, step)
from .hyper import (BoundaryPoint, HPoint, MoebiusMap, UnitTangent, frame_map,
                    geodesic_curvature, geodesic_curvature_array,
                    hyperbolic_length, invert_at_circle, transport_map)
from .revsurf import (BoundaryData, CapSpec, EnergyReport,
                      boundary_bracket, bryant_griffiths_check, cap_curve,
                      caps_for, closed_willmore_energy, elastic_energy,
                      principal_curvatures, read_boundary_data,
                      willmore_energy)
from .threshold import (ThresholdResult, admissibility, asymptotic_probe,
                        closed_energy_horizontal, closed_energy_of_cx,
                        minimize_threshold, pair_elastic_energy)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "SampledCurve", "catenoid_arc", "from_function",
    "Branch", "ElasticaArc", "Orientation", "partial_energies", "s0_from_x",
    "side_energy", "singularity_x", "solve_boundary", "solve_frenet",
    "FlowConfig", "FlowMonitors", "FlowState", "discrete_energy",
    "discrete_gradient", "run", "step",
    "BoundaryPoint", "HPoint", "MoebiusMap", "UnitTangent", "frame_map",
    "geodesic_curvature", "geodesic_curvature_array", "hyperbolic_length",
    "invert_at_circle", "transport_map",
    "BoundaryData", "CapSpec", "EnergyReport", "boundary_bracket",
    "bryant_griffiths_check", "cap_curve", "caps_for",
    "closed_willmore_energy", "elastic_energy", "principal_curvatures",
    "read_boundary_data", "willmore_energy",
    "ThresholdResult", "admissibility", "asymptotic_probe",
    "closed_energy_horizontal", "closed_energy_of_cx", "minimize_threshold",
    "pair_elastic_energy",
]
