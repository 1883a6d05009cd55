"""Finite frames, frame homomorphisms, sublocales and nuclei.

A finite frame is exactly a finite distributive lattice, so Frame is a thin
validated wrapper around Lattice.  Sublocales are stored extensionally as
member index sets; the associated quotient map and nucleus are derived
views.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import CarrierMismatch, DomainMismatch, NotAFrame, SizeGuardExceeded
from .order import Lattice


class Frame:
    """A validated finite frame over a distributive bounded lattice."""

    def __init__(self, lattice: Lattice, name: str | None = None):
        if not lattice.is_distributive:
            witness = lattice.names(lattice.distributivity_witness)
            raise NotAFrame(f"not distributive; witness triple {witness}")
        self.lattice = lattice
        self.name = name if name is not None else f"F{lattice.n}"

    # Delegation keeps call sites free of `.lattice` noise.
    @property
    def n(self):
        return self.lattice.n

    @property
    def elements(self):
        return self.lattice.elements

    @property
    def leq(self):
        return self.lattice.leq

    @property
    def meet(self):
        return self.lattice.meet

    @property
    def join(self):
        return self.lattice.join

    @property
    def bottom(self):
        return self.lattice.bottom

    @property
    def top(self):
        return self.lattice.top

    def idx(self, element):
        return self.lattice.idx(element)

    def implies(self, a, b):
        return self.lattice.implies(a, b)

    def pseudocomplement(self, a):
        return self.lattice.pseudocomplement(a)

    def meet_all(self, idxs):
        return self.lattice.meet_all(idxs)

    def join_all(self, idxs):
        return self.lattice.join_all(idxs)

    def names(self, idxs):
        return self.lattice.names(idxs)

    @property
    def is_trivial(self):
        return self.n == 1

    @classmethod
    def chain(cls, n: int) -> "Frame":
        return cls(Lattice.chain(n), name=str(n))

    @classmethod
    def boolean(cls, atoms: int) -> "Frame":
        return cls(Lattice.boolean(atoms), name=f"B{2 ** atoms}")

    def __repr__(self):
        return f"Frame({self.name}, {list(self.elements)})"


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: tuple

    def __str__(self):
        return f"{self.law} fails at {self.witness}"


class FrameHom:
    """A candidate map between frames, stored as an index array."""

    def __init__(self, dom: Frame, cod: Frame, mapping):
        if isinstance(mapping, dict):
            mapping = [mapping[e] for e in dom.elements]
        arr = np.asarray(
            [cod.idx(m) if isinstance(m, str) else int(m) for m in mapping], dtype=np.int64
        )
        if arr.shape != (dom.n,):
            raise DomainMismatch(f"map must be total on {dom.n} elements, got shape {arr.shape}")
        if arr.min(initial=0) < 0 or arr.max(initial=0) >= cod.n:
            raise DomainMismatch("map hits indices outside the codomain")
        self.dom = dom
        self.cod = cod
        self.mapping = arr
        self.mapping.flags.writeable = False

    def __call__(self, i: int) -> int:
        return int(self.mapping[i])

    @classmethod
    def identity(cls, frame: Frame) -> "FrameHom":
        return cls(frame, frame, np.arange(frame.n))

    def compose(self, inner: "FrameHom") -> "FrameHom":
        """self after inner."""
        if inner.cod is not self.dom and inner.cod.elements != self.dom.elements:
            raise CarrierMismatch("composition carriers do not line up")
        return FrameHom(inner.dom, self.cod, self.mapping[inner.mapping])

    def violations(self) -> list[LawViolation]:
        """First violation of each frame-hom law (bottom, top, meet, join)."""
        f, dom, cod = self.mapping, self.dom, self.cod
        out = []
        if f[dom.bottom] != cod.bottom:
            out.append(LawViolation("bottom", (dom.elements[dom.bottom],)))
        if f[dom.top] != cod.top:
            out.append(LawViolation("top", (dom.elements[dom.top],)))
        for law, table_d, table_c in (("meet", dom.meet, cod.meet), ("join", dom.join, cod.join)):
            bad = f[table_d] != table_c[np.ix_(f, f)]
            if bad.any():
                i, j = next(zip(*np.where(bad)))
                out.append(LawViolation(law, (dom.elements[i], dom.elements[j])))
        return out

    @cached_property
    def is_hom(self) -> bool:
        """Preserving 0, 1 and binary meets/joins suffices at finite size."""
        return not self.violations()

    @cached_property
    def is_dense(self) -> bool:
        """Reflects bottom: only the bottom maps to the bottom."""
        return bool(((self.mapping == self.cod.bottom) == (np.arange(self.dom.n) == self.dom.bottom)).all())

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.mapping.tolist())) == self.dom.n

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.mapping.tolist())) == self.cod.n

    def image_indices(self) -> tuple:
        return tuple(sorted(set(self.mapping.tolist())))

    def __eq__(self, other):
        return (
            isinstance(other, FrameHom)
            and self.dom.elements == other.dom.elements
            and self.cod.elements == other.cod.elements
            and (self.mapping == other.mapping).all()
        )

    def __hash__(self):
        return hash((self.dom.elements, self.cod.elements, self.mapping.tobytes()))

    def __repr__(self):
        pairs = ", ".join(
            f"{d}->{self.cod.elements[self.mapping[i]]}" for i, d in enumerate(self.dom.elements)
        )
        return f"FrameHom({self.dom.name}->{self.cod.name}: {pairs})"


def check_frame_hom(hom: FrameHom) -> tuple[bool, list[LawViolation]]:
    """Verdict plus the list of first per-law violations."""
    bad = hom.violations()
    return (not bad, bad)


class Sublocale:
    """A sublocale stored as its member set.

    Membership must contain the top, be closed under binary meets, and be
    closed under implication from arbitrary elements.
    """

    def __init__(self, frame: Frame, members):
        idxs = sorted({frame.idx(m) if isinstance(m, str) else int(m) for m in members})
        self.frame = frame
        self.members = tuple(idxs)

    @cached_property
    def member_vector(self) -> np.ndarray:
        vec = np.zeros(self.frame.n, dtype=bool)
        vec[list(self.members)] = True
        vec.flags.writeable = False
        return vec

    @cached_property
    def is_valid(self) -> bool:
        return self.violation() is None

    def violation(self):
        """None, or a tuple describing the first failed closure property."""
        F, mem = self.frame, self.member_vector
        if not mem[F.top]:
            return ("top", ())
        sub = np.asarray(self.members)
        meets = F.meet[np.ix_(sub, sub)]
        if not mem[meets].all():
            i, j = next(zip(*np.where(~mem[meets])))
            return ("meet", (F.elements[sub[i]], F.elements[sub[j]]))
        imps = F.lattice.implication[:, sub]
        if not mem[imps].all():
            a, s = next(zip(*np.where(~mem[imps])))
            return ("implication", (F.elements[a], F.elements[sub[s]]))
        return None

    @cached_property
    def quotient(self) -> np.ndarray:
        """q[a] = least member above a (total because members are meet-closed)."""
        out = np.zeros(self.frame.n, dtype=np.int64)
        for a in range(self.frame.n):
            above = [s for s in self.members if self.frame.leq[a, s]]
            out[a] = self.frame.meet_all(above)
        out.flags.writeable = False
        return out

    def nucleus(self) -> "Nucleus":
        return Nucleus(self.frame, self.quotient)

    @cached_property
    def as_frame(self) -> Frame:
        """The members as a frame: meets inherited, joins via the quotient."""
        sub = np.asarray(self.members)
        leq = self.frame.leq[np.ix_(sub, sub)]
        frame = Frame(Lattice(self.frame.names(sub), leq), name=sublocale_label(self))
        return frame

    def position(self, parent_index: int) -> int:
        """Index of a member inside as_frame."""
        return self.members.index(parent_index)

    def quotient_hom(self) -> FrameHom:
        """The quotient map onto the member frame."""
        target = self.as_frame
        return FrameHom(self.frame, target, [self.position(q) for q in self.quotient])

    def inclusion_positions(self) -> np.ndarray:
        return np.asarray(self.members)

    # -- lattice of sublocales ---------------------------------------------

    def meet_with(self, other: "Sublocale") -> "Sublocale":
        """Intersection of member sets (the sublocale meet)."""
        self._same_carrier(other)
        return Sublocale(self.frame, set(self.members) & set(other.members))

    def join_with(self, other: "Sublocale") -> "Sublocale":
        """All meets of subsets of the union (the sublocale join)."""
        self._same_carrier(other)
        F = self.frame
        pool = sorted(set(self.members) | set(other.members))
        out = {F.top}
        frontier = set(pool)
        while frontier:
            out |= frontier
            frontier = {
                F.meet[x, y] for x in out for y in pool if F.meet[x, y] not in out
            }
        return Sublocale(F, out)

    def _same_carrier(self, other):
        if self.frame is not other.frame and self.frame.elements != other.frame.elements:
            raise CarrierMismatch("sublocales live over different frames")

    def contains(self, other: "Sublocale") -> bool:
        return set(other.members) <= set(self.members)

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.frame.n

    @property
    def is_one(self) -> bool:
        return self.members == (self.frame.top,)

    def __eq__(self, other):
        return (
            isinstance(other, Sublocale)
            and self.frame.elements == other.frame.elements
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.frame.elements, self.members))

    def __repr__(self):
        return f"Sublocale({self.frame.name}: {{{', '.join(self.frame.names(self.members))}}})"


class Nucleus:
    """A candidate nucleus: a self-map checked for the four nucleus laws."""

    def __init__(self, frame: Frame, mapping):
        self.frame = frame
        self.mapping = np.asarray(mapping, dtype=np.int64)
        if self.mapping.shape != (frame.n,):
            raise DomainMismatch("nucleus map must be total")

    def __call__(self, i: int) -> int:
        return int(self.mapping[i])

    def violation(self):
        F, j = self.frame, self.mapping
        mono = F.leq & ~F.leq[np.ix_(j, j)]
        if mono.any():
            a, b = next(zip(*np.where(mono)))
            return ("monotone", (F.elements[a], F.elements[b]))
        if not F.leq[np.arange(F.n), j].all():
            a = int(np.where(~F.leq[np.arange(F.n), j])[0][0])
            return ("inflationary", (F.elements[a],))
        if not (j[j] == j).all():
            a = int(np.where(j[j] != j)[0][0])
            return ("idempotent", (F.elements[a],))
        bad = j[F.meet] != F.meet[np.ix_(j, j)]
        if bad.any():
            a, b = next(zip(*np.where(bad)))
            return ("meet-preserving", (F.elements[a], F.elements[b]))
        return None

    @cached_property
    def is_valid(self) -> bool:
        return self.violation() is None

    def fixpoints(self) -> Sublocale:
        return Sublocale(self.frame, [i for i in range(self.frame.n) if self.mapping[i] == i])


# -- constructions -----------------------------------------------------------


def whole_sublocale(frame: Frame) -> Sublocale:
    return Sublocale(frame, range(frame.n))


def one_sublocale(frame: Frame) -> Sublocale:
    return Sublocale(frame, [frame.top])


def closed_sublocale(frame: Frame, a) -> Sublocale:
    """The up-set of a."""
    a = frame.idx(a) if isinstance(a, str) else int(a)
    return Sublocale(frame, np.where(frame.leq[a, :])[0])


def open_sublocale(frame: Frame, a) -> Sublocale:
    """{a -> b | b in the frame}."""
    a = frame.idx(a) if isinstance(a, str) else int(a)
    return Sublocale(frame, set(frame.lattice.implication[a, :].tolist()))


def booleanization(frame: Frame) -> tuple[Sublocale, FrameHom]:
    """The members fixed by double pseudocomplement, with the map into them.

    This is the least dense sublocale; joins in the image are recomputed as
    the double pseudocomplement of the carrier join.
    """
    star = frame.lattice.implication[:, frame.bottom]
    double = star[star]
    sub = Sublocale(frame, set(double.tolist()))
    hom = FrameHom(frame, sub.as_frame, [sub.position(int(d)) for d in double])
    return sub, hom


def enumerate_sublocales(frame: Frame, max_frame: int = 12) -> list[Sublocale]:
    """All sublocales, by brute force over subsets containing the top.

    Ordered by (size, membership vector) so outputs are reproducible.
    """
    if frame.n > max_frame:
        raise SizeGuardExceeded(f"frame has {frame.n} > {max_frame} elements")
    rest = [i for i in range(frame.n) if i != frame.top]
    found = []
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            cand = Sublocale(frame, (frame.top,) + extra)
            if cand.is_valid:
                found.append(cand)
    found.sort(key=lambda s: (len(s.members), s.members))
    return found


def sublocale_label(s: Sublocale) -> str:
    """Label a sublocale the way order diagrams name them.

    Whole frame and one-point sublocales get the frame name and "1"; up-sets
    are closed sublocales c(a); implication images are open sublocales o(a);
    anything else lists its members.
    """
    F = s.frame
    if s.is_whole:
        return F.name
    if s.is_one:
        return "1"
    for a in range(F.n):
        if s == closed_sublocale(F, a):
            return f"c({F.elements[a]})"
    for a in range(F.n):
        if s == open_sublocale(F, a):
            return f"o({F.elements[a]})"
    return "{" + ",".join(F.names(s.members)) + "}"
