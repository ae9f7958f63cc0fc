"""Exact double covers of symmetric and alternating groups, their minimal
faithful 2-group representation dimensions, and rational quadratic-form
invariants (Hilbert symbols, Hasse classes, trace forms of etale algebras).
"""

from .chartab import (
    CharTable,
    DixonPrime,
    count_min_faithful,
    dixon_character_table,
    min_faithful_irrep_dim,
)
from .clifford import (
    CliffordElem,
    CliffordSignature,
    Cyclotomic8,
    Dyadic,
    basic_spin_matrices,
    cl_mul,
    grade_involution,
    lift_transposition,
    spin_representation,
    spinor_norm,
    transpose,
    verify_spin_representation,
)
from .covers import (
    CocycleInconsistency,
    Cover,
    CoverElem,
    CoverSpec,
    FiniteGroupTable,
    SizeBoundExceeded,
    VerificationError,
    alt_cover_subgroup,
    center,
    clear_cover_cache,
    cocycle,
    conjugacy_classes,
    cyclic_table,
    generalized_quaternion_table,
    get_cover,
    group_from_spec_json,
    in_alt_cover,
    inv,
    iso_small,
    mul,
    preimage_subgroup,
    release_lift_caches,
    verify_presentation,
)
from .edcalc import (
    EdReport,
    alt_ed_bounds,
    ed2_computed,
    ed2_formula,
    ed_bounds,
    ed_report,
    table1,
)
from .perms import (
    canonical_word,
    dyadic_profile,
    sylow2_alt_generators,
    sylow2_sym_generators,
)
from .qforms import (
    BrauerClass2,
    EtaleAlgebraQ,
    Place,
    QuadFormQ,
    SquareClass,
    brauer_index,
    contains_ones,
    discriminant,
    etale_discriminant,
    hasse_invariant,
    hilbert_symbol,
    is_isometric,
    is_isotropic,
    lemma_disc_one_identity,
    quaternion_class,
    random_etale_algebra,
    signature,
    splitting_tower,
    trace_form,
    witt_index,
)

__all__ = [name for name in dict(vars()) if not name.startswith("_")]
__version__ = "0.1.0"
