"""Branching rules and generalized Weyl-Verma/BGG decompositions for regular subalgebras.

Everything is exact: weights are tuples of ``fractions.Fraction`` in an
ambient orthogonal basis, characters are sparse integer-valued maps.
"""

from .branching import BranchingResult, DepthError, Fan, branch, compute_fan
from .embedding import EmbeddingError, EmbeddingSpec, build_embedding
from .formal import FormalElement
from .resolution import (
    ResolutionSequence, bgg_resolution, resolution_from_branching, verify_euler,
)
from .rootspace import AlgebraId, RootDatum, build_root_datum
from .singular import SingularDecomposition, decompose, singular_element
from .verma import (
    GVChar, ParabolicData, gv_character, gv_to_ordinary, parabolic_data,
    standard_weyl_verma, weyl_verma_decompose,
)
from .weyl import WeylElement, enumerate_group

__version__ = "0.1.0"

__all__ = [
    "AlgebraId", "BranchingResult", "DepthError", "EmbeddingError", "EmbeddingSpec", "Fan",
    "FormalElement", "GVChar", "ParabolicData", "ResolutionSequence", "RootDatum",
    "SingularDecomposition", "WeylElement", "bgg_resolution", "branch", "build_embedding",
    "build_root_datum", "compute_fan", "decompose", "enumerate_group", "gv_character",
    "gv_to_ordinary", "parabolic_data", "resolution_from_branching", "singular_element",
    "standard_weyl_verma", "verify_euler", "weyl_verma_decompose",
]
