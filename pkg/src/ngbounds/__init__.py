"""ngbounds: spectral graph bound verification.

Computes eigenvalue power sums and related invariants, evaluates a catalog
of spectral and Nordhaus-Gaddum inequalities over graph streams, and hunts
extremal graphs and counterexamples.
"""

from .backend import ACTIVE as BACKEND
from .bounds import (ALL_BOUND_IDS, CONJECTURE_IDS, THEOREM_IDS, BoundCheck,
                     CATALOG, check_graph, evaluate_bound, f_correction)
from .graphs import (FamilySpec, Graph, Graph6Error, basic_props,
                     classify_structure, complement, enumerate_labeled,
                     family, make_family, parse_graph6, to_graph6)
from .invariants import (InvariantSet, chromatic_number, collect_invariants,
                         invariant_pair, randic_index)
from .scan import ScanReport, run_scan, subgraph_monotonicity_scan
from .search import SearchConfig, best_complete_split, make_objective, optimize
from .spectral import (ConferenceValues, Spectrum, SpectralSums,
                       conference_closed_form, eigen_decompose, exact_inertia,
                       spectral_profile, spectral_sums)

__version__ = "0.1.0"
