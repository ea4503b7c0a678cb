"""Matroids, Orlik-Solomon series and holonomy Lie algebras of set-arrangements."""
from .errors import HolokitError, InputError, InvariantError, NotChordalError, ResourceError
from .matroid import (
    Graph,
    GroundSet,
    Matroid,
    SetArrangement,
    TwoPartition,
    arrangement_of,
    closure,
    complete_graph,
    dependent_triples_matroid,
    explicit_matroid,
    flats,
    graphic_matroid,
    matroid_from_two_partition,
    matroid_of_arrangement,
    rank,
    two_partition,
    validate_matroid,
)
from .lattice import FlatsLattice, Polynomial, flats_lattice, os_hilbert_series, rank3_series, region_count
from .series import GradedDims, SeriesTruncation, enveloping_series, series_product, witt
from .lie import LiePresentation, TensorVector, expand_bracket, ideal_dims
from .nq import GradedLieAlgebra, graded_dims
from .graphs import elimination_tower, graph_arrangement, lfs_exponents
from .holonomy import (
    DecompositionReport,
    HolonomyPresentation,
    decomposability,
    exponent_scan,
    holonomy_presentation,
    ideal_I_dims,
    ideal_J_dims,
    is_closed,
    kohno_series,
    local_dims,
    subalgebra_ideal_dims,
    verify_tower,
)
from .named import catalog

__version__ = "0.1.0"
