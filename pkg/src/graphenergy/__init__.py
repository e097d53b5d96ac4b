"""Adjacency spectra and graph energy.

The common entry points are re-exported here; the submodules hold the rest.
"""

from .classify import (
    EnergyReport,
    PairCertificate,
    certify_pair,
    classify_energy,
    is_isomorphic,
)
from .errors import (
    CapacityError,
    GraphEnergyError,
    InvalidOrderError,
    InvalidSpecError,
    NumericFailure,
    ParseError,
    RegularityError,
    UndecidableError,
)
from .expr import build, parse_expr
from .graph import (
    Graph,
    canonical_superpath,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    from_graph6,
    path,
    star,
    superpath,
    to_graph6,
)
from .ops import (
    bipartite_kronecker,
    duplicate,
    duplicate_iter,
    join,
    join_charpoly_regular,
    kronecker,
    shadow,
    splitting,
)
from .spectral import (
    CharPoly,
    Spectrum,
    char_poly,
    cospectral,
    energy,
    energy_closed_form,
    integer_spectrum,
    is_integral,
    spectrum,
)

__version__ = "0.1.0"
