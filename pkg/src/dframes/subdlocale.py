"""Sub-d-locales and their complete lattice.

A pair of component sublocales determines at most one d-frame quotient: the
consistency relation is the Scott closure of the image of con under the
quotient pair, and the totality relation is the restriction of tot.  A pair
is admitted exactly when the induced quadruple passes the d-frame axioms.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .dframe import DFrame, DFrameHom, check_dframe
from .errors import CarrierMismatch, NotASubDLocale, SizeGuardExceeded
from .frames import FrameHom, Sublocale, enumerate_sublocales, sublocale_label
from .order import scott_closure


class SubDLocale:
    """A valid sublocale pair with its induced relations.

    Construct through try_sub_d_locale so the axioms are known to hold.
    The induced matrices are indexed by positions inside the member frames.
    """

    def __init__(self, parent: DFrame, minus: Sublocale, plus: Sublocale,
                 con: np.ndarray, tot: np.ndarray):
        self.parent = parent
        self.minus = minus
        self.plus = plus
        self.con = con
        self.tot = tot

    @cached_property
    def label(self) -> str:
        return f"{sublocale_label(self.minus)}.{sublocale_label(self.plus)}"

    @cached_property
    def as_dframe(self) -> DFrame:
        return DFrame(self.minus.as_frame, self.plus.as_frame, self.con, self.tot,
                      name=self.label)

    def quotient_hom(self) -> DFrameHom:
        """The extremal epimorphism from the parent onto this sub-d-locale."""
        target = self.as_dframe
        q_minus = FrameHom(self.parent.minus, target.minus,
                           [self.minus.position(q) for q in self.minus.quotient])
        q_plus = FrameHom(self.parent.plus, target.plus,
                          [self.plus.position(q) for q in self.plus.quotient])
        return DFrameHom(self.parent, target, q_minus, q_plus, name=f"q[{self.label}]")

    def restricted_con(self) -> np.ndarray:
        """Parent con restricted to the member sets, in position space."""
        return self.parent.con[np.ix_(self.plus.members, self.minus.members)]

    def restricted_tot(self) -> np.ndarray:
        return self.parent.tot[np.ix_(self.minus.members, self.plus.members)]

    def leq(self, other: "SubDLocale") -> bool:
        """Componentwise sublocale inclusion."""
        return other.minus.contains(self.minus) and other.plus.contains(self.plus)

    @property
    def is_whole(self) -> bool:
        return self.minus.is_whole and self.plus.is_whole

    def __eq__(self, other):
        return (
            isinstance(other, SubDLocale)
            and self.parent.minus.elements == other.parent.minus.elements
            and self.parent.plus.elements == other.parent.plus.elements
            and self.minus.members == other.minus.members
            and self.plus.members == other.plus.members
        )

    def __hash__(self):
        return hash((self.minus.members, self.plus.members))

    def __repr__(self):
        return f"SubDLocale({self.label} of {self.parent.name})"


def induced_relations(parent: DFrame, minus: Sublocale, plus: Sublocale):
    """The unique candidate relations for the quotient onto a sublocale pair.

    con is the Scott closure of the image of parent con under the quotient
    pair (the image of a lower set under a surjection is a lower set, so the
    closure is the identity and is asserted); tot is the image of parent
    tot, which always equals the restriction.
    """
    q_m, q_p = minus.quotient, plus.quotient
    pos_m = {m: k for k, m in enumerate(minus.members)}
    pos_p = {p: k for k, p in enumerate(plus.members)}

    con = np.zeros((len(plus.members), len(minus.members)), dtype=bool)
    ps, ms = np.where(parent.con)
    con[[pos_p[int(q_p[p])] for p in ps], [pos_m[int(q_m[m])] for m in ms]] = True
    closed = scott_closure(plus.as_frame.lattice, minus.as_frame.lattice, con)
    assert (closed == con).all(), "quotient image of con must be Scott closed"

    tot = np.zeros((len(minus.members), len(plus.members)), dtype=bool)
    ms, ps = np.where(parent.tot)
    tot[[pos_m[int(q_m[m])] for m in ms], [pos_p[int(q_p[p])] for p in ps]] = True
    restriction = parent.tot[np.ix_(minus.members, plus.members)]
    assert (tot == restriction).all(), "quotient image of tot must equal its restriction"
    return con, tot


def build_sub_d_locale(parent: DFrame, minus: Sublocale, plus: Sublocale):
    """(SubDLocale, report): the candidate and its axiom report."""
    con, tot = induced_relations(parent, minus, plus)
    candidate = SubDLocale(parent, minus, plus, con, tot)
    report = check_dframe(candidate.as_dframe)
    return candidate, report


def try_sub_d_locale(parent: DFrame, minus: Sublocale, plus: Sublocale) -> SubDLocale:
    """Validate a sublocale pair; raises NotASubDLocale with the witness."""
    candidate, report = build_sub_d_locale(parent, minus, plus)
    if not report.ok:
        raise NotASubDLocale(report)
    return candidate


def join_sub_d_locales(a: SubDLocale, b: SubDLocale) -> SubDLocale:
    """Least upper bound: componentwise sublocale joins with induced relations.

    Always valid; this is how arbitrary joins witness that the sub-d-locales
    form a complete lattice.
    """
    if a.parent is not b.parent and (
        a.parent.minus.elements != b.parent.minus.elements
        or a.parent.plus.elements != b.parent.plus.elements
    ):
        raise CarrierMismatch("sub-d-locales of different parents")
    return try_sub_d_locale(
        a.parent, a.minus.join_with(b.minus), a.plus.join_with(b.plus)
    )


class SubDLocaleLattice:
    """The enumerated lattice of sub-d-locales of one parent."""

    def __init__(self, parent: DFrame, members: list[SubDLocale]):
        self.parent = parent
        self.members = tuple(members)
        n = len(members)
        leq = np.zeros((n, n), dtype=bool)
        for i, s in enumerate(members):
            for j, t in enumerate(members):
                leq[i, j] = s.leq(t)
        self.leq = leq
        self.leq.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.members)

    @cached_property
    def labels(self) -> tuple:
        return tuple(s.label for s in self.members)

    def index_of(self, s: SubDLocale) -> int:
        for i, m in enumerate(self.members):
            if m == s:
                return i
        raise KeyError(f"{s!r} is not a member")

    @cached_property
    def bottom(self) -> int:
        return int(np.where(self.leq.sum(axis=1) == self.n)[0][0])

    @cached_property
    def top(self) -> int:
        return int(np.where(self.leq.sum(axis=0) == self.n)[0][0])

    def join_index(self, i: int, j: int) -> int:
        """Least upper bound, located through the order matrix."""
        uppers = np.where(self.leq[i, :] & self.leq[j, :])[0]
        least = uppers[self.leq[np.ix_(uppers, uppers)].all(axis=1)]
        assert len(least) == 1, "sub-d-locales must have unique joins"
        return int(least[0])

    def meet_index(self, i: int, j: int) -> int:
        """Greatest lower bound through the order matrix.

        Generally NOT the componentwise intersection: the intersection pair
        may fail the axioms, in which case the meet drops further down.
        """
        lowers = np.where(self.leq[:, i] & self.leq[:, j])[0]
        greatest = lowers[self.leq[np.ix_(lowers, lowers)].all(axis=0)]
        assert len(greatest) == 1, "sub-d-locales must have unique meets"
        return int(greatest[0])

    def join(self, i: int, j: int) -> int:
        """Join by the componentwise construction, cross-checked against the
        order-matrix least upper bound."""
        idx = self.index_of(join_sub_d_locales(self.members[i], self.members[j]))
        assert idx == self.join_index(i, j), "constructive join must be the lub"
        return idx

    def meet(self, i: int, j: int) -> int:
        """Greatest lower bound, realised as the join of all lower bounds."""
        lower = [k for k in range(self.n) if self.leq[k, i] and self.leq[k, j]]
        current = self.members[self.bottom]
        for k in lower:
            current = join_sub_d_locales(current, self.members[k])
        idx = self.index_of(current)
        assert idx == self.meet_index(i, j), "join of lower bounds must be the glb"
        return idx

    @cached_property
    def join_table(self) -> np.ndarray:
        table = np.zeros((self.n, self.n), dtype=np.int64)
        for i in range(self.n):
            for j in range(i, self.n):
                table[i, j] = table[j, i] = self.join_index(i, j)
        return table

    @cached_property
    def meet_table(self) -> np.ndarray:
        table = np.zeros((self.n, self.n), dtype=np.int64)
        for i in range(self.n):
            for j in range(i, self.n):
                table[i, j] = table[j, i] = self.meet_index(i, j)
        return table

    def distributivity_witness(self):
        """A triple of labels violating meet-over-join distribution, or None."""
        meet, join = self.meet_table, self.join_table
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                        return (self.labels[a], self.labels[b], self.labels[c])
        return None

    def modularity_witness(self):
        """A triple (a, b, x) of labels with a <= b violating modularity."""
        meet, join = self.meet_table, self.join_table
        for a in range(self.n):
            for b in range(self.n):
                if not self.leq[a, b]:
                    continue
                for x in range(self.n):
                    if join[a, meet[x, b]] != meet[join[a, x], b]:
                        return (self.labels[a], self.labels[b], self.labels[x])
        return None

    @cached_property
    def is_distributive(self) -> bool:
        return self.distributivity_witness() is None

    @cached_property
    def is_modular(self) -> bool:
        return self.modularity_witness() is None

    @cached_property
    def covers(self) -> np.ndarray:
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return lt & ~between

    def dot(self) -> str:
        return hasse_dot(self.labels, self.leq)

    def __repr__(self):
        return f"SubDLocaleLattice({self.parent.name}: {self.n} members)"


def enumerate_sub_d_locales(parent: DFrame, max_frame: int = 12,
                            max_pairs: int = 400) -> SubDLocaleLattice:
    """All sublocale pairs that induce valid quotients, in canonical order.

    Canonical order is by total member count, then componentwise member
    tuples, which makes reports and diagrams reproducible.
    """
    subs_minus = enumerate_sublocales(parent.minus, max_frame=max_frame)
    subs_plus = enumerate_sublocales(parent.plus, max_frame=max_frame)
    pairs = len(subs_minus) * len(subs_plus)
    if pairs > max_pairs:
        raise SizeGuardExceeded(f"{pairs} sublocale pairs exceed the guard of {max_pairs}")
    found = []
    for sm in subs_minus:
        for sp in subs_plus:
            candidate, report = build_sub_d_locale(parent, sm, sp)
            if report.ok:
                found.append(candidate)
    found.sort(key=lambda s: (
        len(s.minus.members) + len(s.plus.members),
        s.minus.members, s.plus.members,
    ))
    return SubDLocaleLattice(parent, found)


def hasse_dot(labels, leq: np.ndarray) -> str:
    """Deterministic DOT rendering of the cover relation of a finite order.

    One node per element with its display label; one edge per cover pair,
    drawn from the lower to the upper element.
    """
    n = len(labels)
    leq = np.asarray(leq, dtype=bool)
    lt = leq & ~np.eye(n, dtype=bool)
    covers = lt & ~((lt.astype(np.int64) @ lt.astype(np.int64)) > 0)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i in range(n):
        for j in range(n):
            if covers[i, j]:
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
