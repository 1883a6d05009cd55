"""D-frames: axioms, canonical constructions, and morphism classes.
===================================================================

A d-frame is two frames linked by a consistency relation con (which pairs
are "disjoint") and a totality relation tot (which pairs "cover").  Nine
named axioms govern them; the checker reports a witness for any failure.
"""

import numpy as np

from dframes import (
    DFrame,
    Frame,
    check_dframe,
    image_factorization,
    is_dense_hom,
    is_extremal_epi,
    is_monomorphism,
    is_regular,
    minimal_dframe,
    symmetric_dframe,
)
from dframes.dframe import DFrameHom, dense_hom_witness
from dframes.fixtures import componentwise_dense_counterexample

c3 = Frame.chain(3)

# The minimal relations: con holds only against a bottom, tot only with a
# top.  This d-frame is called 3.3.
tt = minimal_dframe(c3, c3, name="3.3")
print("3.3 con pairs:", sorted(tt.con_pairs()))
print("3.3 tot pairs:", sorted(tt.tot_pairs()))

# The symmetric construction: con is disjointness, tot is covering.
sym = symmetric_dframe(Frame.boolean(2))
print("\nSym(B4) valid:", check_dframe(sym).ok, " regular:", is_regular(sym))

# Break an axiom on purpose: with every pair related, con-tot collapses the
# order.  The report names the axiom and a witness chain.
c2 = Frame.chain(2)
bad = DFrame(c2, c2, np.ones((2, 2), bool), np.ones((2, 2), bool))
report = check_dframe(bad)
print("\nall-pairs candidate:", report.first_failure)

# Morphisms are frame-hom pairs preserving both relations.  Monos are the
# componentwise one-one ones; extremal epis are componentwise surjections
# whose relation images fill the codomain.
ident = DFrameHom.identity(tt)
print("\nidentity: mono", is_monomorphism(ident), "| extremal", is_extremal_epi(ident))

# Every morphism factors as an extremal epi onto its image followed by a
# mono; the image d-frame carries the (Scott-closed) image relations.
dom, cod, collapse = componentwise_dense_counterexample()
fac = image_factorization(collapse)
print("\ncollapse factors through", fac.image.name,
      "| recomposes:", fac.embedding.compose(fac.onto) == collapse)

# Density for d-frame morphisms asks that consistency be reflected, which
# is strictly stronger than both components being dense frame maps.
print("components dense:", collapse.minus.is_dense, collapse.plus.is_dense)
print("pair dense:", is_dense_hom(collapse), "| witness:", dense_hom_witness(collapse))
