"""Finite-model computations for point-free bitopology.

D-frames are pairs of finite frames linked by consistency and totality
relations.  This package validates them, classifies their morphisms,
enumerates their sub-d-locale lattices, and computes pseudocomplements and
smallest dense quotients, all over explicit finite carriers.
"""

from .order import (
    Lattice,
    Poset,
    directed_join_closure,
    down_closure_pairs,
    scott_closure,
    up_closure_pairs,
)
from .frames import (
    Frame,
    FrameHom,
    Nucleus,
    Sublocale,
    booleanization,
    check_frame_hom,
    closed_sublocale,
    enumerate_sublocales,
    one_sublocale,
    open_sublocale,
    sublocale_label,
    whole_sublocale,
)
from .dframe import (
    DFrame,
    DFrameHom,
    check_dframe,
    check_dframe_hom,
    close_con_generators,
    close_tot_generators,
    dense_hom_witness,
    image_factorization,
    is_dense_hom,
    is_extremal_epi,
    is_monomorphism,
    is_regular,
    minimal_dframe,
    rather_below,
    symmetric_dframe,
)
from .subdlocale import (
    SubDLocale,
    SubDLocaleLattice,
    build_sub_d_locale,
    enumerate_sub_d_locales,
    hasse_dot,
    join_sub_d_locales,
    try_sub_d_locale,
)
from .density import (
    ConPreorder,
    DenseCore,
    Pseudocomplements,
    are_isomorphic,
    classify,
    coreflection_report,
    corrigibility,
    dense_core,
    dense_core_map,
    dframe_isomorphism,
    double_pseudocomplement_sets,
    galois_check,
    is_corrigible,
    is_dense_sub_d_locale,
    is_double_negation,
    is_dually_subfit,
    is_excluded_middle,
    is_skeletal,
    pseudocomplement,
    sublocale_generated_by,
)
from .search import all_distributive_lattices, all_lattices, mine, standard_corpus

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
