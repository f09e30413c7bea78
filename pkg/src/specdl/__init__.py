"""Distance Laplacian spectra, energies and bound verification for small graphs."""

from __future__ import annotations

from .closed_form import (
    AnalyticSpectrum,
    analytic_for,
    dl_from_laplacian_diam2,
    dl_spectrum_complete,
    dl_spectrum_complete_bipartite,
    dl_spectrum_complete_split,
    dl_spectrum_connectivity_family,
    dl_spectrum_join,
    dl_spectrum_join_laplacian,
)
from .eigen import Spectrum, jacobi_eigenvalues, positive_inertia, spectra_equal, sym_eigenvalues
from .energy import (
    EnergyReport,
    de,
    dle,
    dle_via_max,
    energy_report,
    le,
    s_k,
    sigma_count,
    trace_norm_deviation,
    u_k,
)
from .errors import *  # noqa: F401,F403
from .families import FamilySpec, build, parse_family
from .graph import (
    Graph,
    bipartition,
    canonical_form,
    delete_edge,
    enumerate_connected,
    is_connected,
    join,
    union,
)
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .metrics import (
    DistanceData,
    apsp,
    distance_laplacian,
    distance_matrix,
    independence_number,
    laplacian,
    vertex_connectivity,
)
from .search import ClassSpec, ExtremalResult, min_dle_over_class, sigma_census
from .sweep import SweepResult, run_sweep
from .theorems import BoundCheck, GraphProfile, check_all

__version__ = "0.1.0"
