"""Shadows, homogeneous-block types, and speeds of ordered graphs.

The library makes the objects executable: bitmask ordered graphs and their
shadows, the block/type calculus with its lattice identification, the
simplex-lattice shadow toolkit, a hereditary-property speed engine, and an
exhaustive / branch-and-bound search layer with reproducible reports. Hot
enumeration loops run in a compiled extension when it is available and in a
numpy fallback otherwise; `kernel_backend()` tells you which one is active.
"""

from ._kernels import BACKEND as _backend
from .blocks import (BlockDecomposition, GraphType, contains_line, excess,
                     group_by_type, homogeneous_blocks, phi, realize,
                     semi_homogeneous_witness, type_excess, type_of,
                     type_preserving_shadow)
from .errors import Infeasible, InvalidInput, UnrealizableType
from .families import named_family
from .graphs import GraphFamily, OrderedGraph, pair_count, pair_index
from .lattice import LatticeSet, extremal_sets, simplex_points, simplex_size, verify_line_dichotomy
from .search import (SearchReport, all_graphs, check_obs_calc, min_shadow,
                     question_5_1, verify_allcliques, verify_conjecture_generalk,
                     verify_difftypes, verify_line_family_bound,
                     verify_shadow_theorem, verify_type_dichotomy)
from .speeds import (HereditaryProperty, SpeedReport, closure, from_forbidden,
                     is_hereditary, named_property, speed_sequence,
                     verify_theorem_hered)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which scan backend is active: "compiled" or "python"."""
    return _backend
