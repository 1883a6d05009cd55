"""Sublocales, quotients, and the Booleanization.
=================================================

A sublocale of a finite frame is a member set containing the top, closed
under meets and under implication from arbitrary elements.  Each one
carries a quotient map (its nucleus) and is itself a frame.
"""

from dframes import (
    Frame,
    booleanization,
    closed_sublocale,
    enumerate_sublocales,
    open_sublocale,
    sublocale_label,
)

c3 = Frame.chain(3)

# All sublocales of the 3-chain, smallest first.
for sub in enumerate_sublocales(c3):
    print(f"{sublocale_label(sub):6s} members={c3.names(sub.members)}")

# Closed and open sublocales of a point.
cc = closed_sublocale(c3, "c")
oc = open_sublocale(c3, "c")
print("\nc(c) =", c3.names(cc.members), "  o(c) =", c3.names(oc.members))

# The quotient map sends each element to the least member above it.
print("q_{c(c)}:", {c3.elements[x]: c3.elements[q] for x, q in enumerate(cc.quotient)})

# Joins of sublocales close the union under meets; meets intersect.
print("c(c) v o(c) =", c3.names(cc.join_with(oc).members))
print("c(c) ^ o(c) =", c3.names(cc.meet_with(oc).members))

# The Booleanization: elements fixed by double pseudocomplement.  It is the
# least dense sublocale, and its map sends a to a**.
sub, bmap = booleanization(c3)
print("\nBooleanization of the 3-chain:", c3.names(sub.members))
print("b(c) =", bmap.cod.elements[bmap(c3.idx('c'))])

dense = [s for s in enumerate_sublocales(c3) if c3.bottom in s.members]
print("dense sublocales:", [sublocale_label(s) for s in dense])
print("Booleanization below all of them:",
      all(s.contains(sub) for s in dense))
