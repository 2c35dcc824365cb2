"""Monochromatic components of edge-colored complete graphs.

A library and CLI for the component structure of edge colorings of complete
(multipartite) graphs: exact Cauchy-Schwarz-style inequality checkers, a
heavy-component selector with a guaranteed edge count, extremal coloring
generators, exhaustive small-case search, and Eulerian circuit extraction.
"""

from .bounds import (
    SmoothingInstance,
    Theorem1Trace,
    exact_sqrt,
    lower_bound,
    smoothing_feasible,
    smoothing_max,
    theorem1_trace,
)
from .circuits import (
    Circuit,
    ParityFixResult,
    best_mono_circuit,
    eulerian_circuit,
    parity_fix,
)
from .constructions import (
    AffinePlane,
    FourPartition,
    SwapSearchExhausted,
    affine_coloring,
    density_split,
    k3_initial_nice,
    k3_optimize,
    k3_optimize_trace,
)
from .graphs import (
    ColoredCompleteGraph,
    ColoringFormatError,
    Component,
    MultipartiteHost,
    Subgraph,
    TheoremCheckError,
    color_class,
    components_of,
    f_weight,
    max_mono_component,
    ordered_pair_count,
    parse_coloring,
    render_coloring,
)
from .inequalities import (
    InequalityReport,
    WeightVectors,
    check_multipartite_cs,
    check_weight_cs,
    guaranteed_component,
    heavy_component,
)
from .search import SearchResult, brute_force_M, random_coloring

__all__ = [
    "AffinePlane",
    "Circuit",
    "ColoredCompleteGraph",
    "ColoringFormatError",
    "Component",
    "FourPartition",
    "InequalityReport",
    "MultipartiteHost",
    "ParityFixResult",
    "SearchResult",
    "SmoothingInstance",
    "Subgraph",
    "SwapSearchExhausted",
    "Theorem1Trace",
    "TheoremCheckError",
    "WeightVectors",
    "affine_coloring",
    "best_mono_circuit",
    "brute_force_M",
    "check_multipartite_cs",
    "check_weight_cs",
    "color_class",
    "components_of",
    "density_split",
    "eulerian_circuit",
    "exact_sqrt",
    "f_weight",
    "guaranteed_component",
    "heavy_component",
    "k3_initial_nice",
    "k3_optimize",
    "k3_optimize_trace",
    "lower_bound",
    "max_mono_component",
    "ordered_pair_count",
    "parity_fix",
    "parse_coloring",
    "random_coloring",
    "render_coloring",
    "smoothing_feasible",
    "smoothing_max",
    "theorem1_trace",
]
