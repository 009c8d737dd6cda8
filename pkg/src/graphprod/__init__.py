"""Graph products of groups and graded algebras over a flag complex."""

from .complex import FlagComplex, flag_complete
from .errors import ChainComplexError, TruncationError, ValidationError
from .exactmath import GF, QQ, Field, RationalFunction, TruncatedSeries, parse_field
from .galg import GradedAlgebraSpec, GraphProductAlgebra, builtin_algebra, exterior, free, trunc_poly
from .groupprod import GraphProduct, LocalGroup, NormalFormWord, WordSpace, certify_word_problem
from .homology import reduced_betti, reduced_homology
from .barcomplex import TorTable, check_acyclic_full, polyhedral_bar, tor_dims_bar, tor_dims_polyhedral
from .torform import (
    ep_series_AK,
    ep_series_Aprime,
    is_free_Aprime,
    is_free_H_groups,
    min_generators_Aprime,
    tor_AK_closed,
    tor_Aprime_closed,
)

__version__ = "0.1.0"
