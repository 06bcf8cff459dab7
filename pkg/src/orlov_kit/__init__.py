"""Exact module-category computations for Nakayama algebras.

The package computes, over linear and cyclic Nakayama algebras given by a
quiver and one path relation: extension closures [T]_n and the star product,
generation times and Orlov spectra, torsion-radical layer lengths and their
spectrum formula, projective/injective dimensions, ghost/coghost chains, and
the Auslander-Reiten quiver of the hereditary linear case.  A separate GF(2)
matrix-representation oracle (``orlov_kit.oracle``) recomputes hom spaces,
extensions, and decompositions from scratch so the combinatorial fast paths
are continuously cross-checked rather than trusted.
"""

from .nakayama import (
    CYCLIC,
    INFINITE,
    LINEAR,
    Algebra,
    AlgebraDescriptor,
    InputError,
    ModuleSum,
    RefusalError,
    Relation,
    SpiClass,
    Uniserial,
    algebra_from_kupisch,
    algebra_loewy_length,
    build_algebra,
    format_module,
    indecomposables,
    injective,
    load_algebra,
    loewy_length,
    parse_module_literal,
    projective,
    radical,
    regular_module,
    simple,
    socle,
    spi_classify,
    top,
)
from .homext import (
    ARArrow,
    ARQuiver,
    ar_quiver,
    ar_quiver_dot,
    ext1_nonzero,
    hom_dim,
    middle_term,
)
from .closure import (
    IndecSet,
    OrlovResult,
    bracket_n,
    fac_closure,
    generation_time,
    is_strong_generator,
    orlov_spectrum,
    star,
    sub_closure,
    verify_subset_lemmas,
)
from .layers import (
    TorsionSpec,
    algebra_llts,
    finite_pd_simples,
    global_dimension,
    injective_dimension,
    oriented_cycle_report,
    projective_dimension,
    radical_layer_length,
    theorem2_spectrum,
    torsion_quotient,
    torsion_radical,
    truncation_triples,
    wd_generator,
)
from .morphisms import (
    Morphism,
    coghost_chain_exists,
    coghost_lemma_check,
    compose,
    find_coghost_chain,
    ghost_chain_exists,
    irreducible_coghosts,
    is_coghost,
    is_ghost,
    left_approximation,
    morphism,
    radical_nilpotence_check,
    tm_generator,
)
from .oracle import middle_terms, oracle_report, verify_star_sweep

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraDescriptor",
    "ARArrow",
    "ARQuiver",
    "CYCLIC",
    "INFINITE",
    "IndecSet",
    "InputError",
    "LINEAR",
    "ModuleSum",
    "Morphism",
    "OrlovResult",
    "RefusalError",
    "Relation",
    "SpiClass",
    "TorsionSpec",
    "Uniserial",
    "algebra_from_kupisch",
    "algebra_llts",
    "algebra_loewy_length",
    "ar_quiver",
    "ar_quiver_dot",
    "bracket_n",
    "build_algebra",
    "coghost_chain_exists",
    "coghost_lemma_check",
    "compose",
    "ext1_nonzero",
    "fac_closure",
    "finite_pd_simples",
    "find_coghost_chain",
    "format_module",
    "generation_time",
    "ghost_chain_exists",
    "global_dimension",
    "hom_dim",
    "indecomposables",
    "injective",
    "injective_dimension",
    "irreducible_coghosts",
    "is_coghost",
    "is_ghost",
    "is_strong_generator",
    "left_approximation",
    "load_algebra",
    "loewy_length",
    "middle_term",
    "middle_terms",
    "morphism",
    "oracle_report",
    "oriented_cycle_report",
    "orlov_spectrum",
    "parse_module_literal",
    "projective",
    "projective_dimension",
    "radical",
    "radical_layer_length",
    "radical_nilpotence_check",
    "regular_module",
    "simple",
    "socle",
    "spi_classify",
    "star",
    "sub_closure",
    "theorem2_spectrum",
    "tm_generator",
    "top",
    "torsion_quotient",
    "torsion_radical",
    "truncation_triples",
    "verify_star_sweep",
    "verify_subset_lemmas",
    "wd_generator",
]
