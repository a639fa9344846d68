"""Exact maximum independent set via augmenting subgraphs.

Targets graphs with no induced spider(1,1,3) and no induced complete
bipartite K(p,p): a greedy start is improved by repeated augmentation
using three finders (alternating chordless paths, subdivided-star
extensions, and a finite catalogue of minimal augmenting graphs), plus
enumeration-backed verifiers for the structure facts the method rests on.
"""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    bipartition,
    connected_components,
    induced_subgraph,
    is_independent,
    neighbourhood,
    restricted_neighbourhood,
)
from .patterns import (
    Pattern,
    build_pattern,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_forbidden,
    find_induced,
    is_free,
    max_subdivided_star,
    parse_pattern,
    path_graph,
    spider,
    subdivided_star,
)
from .irreducible import (
    Catalog,
    CatalogEntry,
    ColoredBipartite,
    SearchBudgetError,
    bicolored,
    bipartite_ramsey_bound,
    bipartite_ramsey_search,
    canonical_code,
    enumerate_irreducible,
    hall_surplus_check,
    is_irreducible,
    max_bipartite_matching,
    verify_min_classes,
)
from .finders import (
    AugCandidate,
    ClassViolationWarning,
    find_augmenting_path,
    find_from_catalog,
    find_tree_extension,
    is_augmenting,
)
from .solver import (
    MisResult,
    SolveConfig,
    SolveResult,
    augment,
    brute_force_mis,
    class_patterns,
    default_catalog,
    greedy_initial,
    solve_mis,
)
from .instances import (
    GenerationError,
    PlantSpec,
    gen_free_random,
    line_graph,
    max_matching_size,
    plant_augmenting_tree,
)
from .verify import (
    StarAnatomy,
    SweepReport,
    anatomy_violations,
    compute_anatomy,
    verify_extension_bound,
    verify_path_or_cycle,
    verify_star_anatomy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
