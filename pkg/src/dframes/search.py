"""Small-model enumeration: lattice pools, the standard d-frame corpus,
seeded random d-frames, and the counterexample miner.

Everything here is bounded-exhaustive and deterministic so corpus sweeps
and miner reports replay byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .dframe import (
    DFrame,
    check_dframe,
    close_con_generators,
    close_tot_generators,
    minimal_dframe,
    symmetric_dframe,
)
from .errors import NotALattice, TrivialMismatch
from .frames import Frame, enumerate_sublocales
from .order import Lattice, are_order_isomorphic
from .subdlocale import build_sub_d_locale


def all_lattices(max_size: int) -> list[Lattice]:
    """All bounded lattices with at most max_size elements, up to isomorphism.

    Posets are enumerated as transitive upper-triangular relations (every
    finite poset admits a topological labelling), filtered to lattices and
    deduplicated by isomorphism search.
    """
    found: list[Lattice] = []
    for n in range(1, max_size + 1):
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(2 ** len(slots)):
            leq = np.eye(n, dtype=bool)
            for bit, (i, j) in enumerate(slots):
                if mask >> bit & 1:
                    leq[i, j] = True
            closed = leq
            while True:
                step = closed | ((closed.astype(np.int64) @ closed.astype(np.int64)) > 0)
                if (step == closed).all():
                    break
                closed = step
            if (closed != leq).any():
                continue  # not transitive as written; the closure shows up later
            try:
                lat = Lattice([f"x{k}" for k in range(n)], leq)
            except NotALattice:
                continue
            if not any(lat.n == other.n and are_order_isomorphic(lat, other) for other in found):
                found.append(lat)
    found.sort(key=lambda lat: (lat.n, lat.leq.sum(), lat.leq.tobytes()))
    return found


def all_distributive_lattices(max_size: int) -> list[Lattice]:
    return [lat for lat in all_lattices(max_size) if lat.is_distributive]


def frame_pool(max_size: int) -> list[Frame]:
    """All finite frames up to max_size elements, up to isomorphism."""
    return [Frame(lat, name=f"D{k}") for k, lat in enumerate(all_distributive_lattices(max_size))]


def standard_corpus(max_size: int = 5) -> list[DFrame]:
    """The generated corpus: every minimal and symmetric d-frame over the
    distributive lattices with at most max_size elements."""
    pool = frame_pool(max_size)
    out = []
    for frame in pool:
        out.append(symmetric_dframe(frame, name=f"Sym({frame.name})"))
    for a, b in product(pool, pool):
        try:
            out.append(minimal_dframe(a, b, name=f"{a.name}.{b.name}"))
        except TrivialMismatch:
            continue
    return out


def random_dframe(rng, pool: list[Frame] | None = None, max_size: int = 4) -> DFrame:
    """A seeded random d-frame: random frame pair plus random generator
    pairs closed into valid relations.

    The closure handles every axiom except con-tot; candidates violating it
    are rejected and retried, so the draw always terminates (the minimal
    relations are always valid).
    """
    pool = pool or frame_pool(max_size)
    for attempt in range(64):
        minus = rng.choice(pool)
        plus = rng.choice(pool)
        if minus.is_trivial != plus.is_trivial:
            continue
        con = np.zeros((plus.n, minus.n), dtype=bool)
        tot = np.zeros((minus.n, plus.n), dtype=bool)
        for _ in range(rng.randrange(0, 3)):
            con[rng.randrange(plus.n), rng.randrange(minus.n)] = True
        for _ in range(rng.randrange(0, 3)):
            tot[rng.randrange(minus.n), rng.randrange(plus.n)] = True
        candidate = DFrame(
            minus, plus,
            close_con_generators(minus, plus, con),
            close_tot_generators(minus, plus, tot),
            name=f"rnd{attempt}",
        )
        if candidate.validate().ok:
            return candidate
    return minimal_dframe(pool[-1], pool[-1], name="rnd-fallback")


# -- bounded-exhaustive relation enumeration -----------------------------------


def enumerate_con_relations(minus: Frame, plus: Frame, cap: int = 1 << 18) -> list[np.ndarray]:
    """Every valid consistency relation between two frames.

    Free cells (those not forced by the nullary pairs) are enumerated by
    bitmask and filtered through the closure conditions.
    """
    forced = close_con_generators(minus, plus, np.zeros((plus.n, minus.n), dtype=bool))
    free = [(p, m) for p in range(plus.n) for m in range(minus.n) if not forced[p, m]]
    if 2 ** len(free) > cap:
        raise ValueError(f"2^{len(free)} candidate relations exceed the cap")
    out = []
    for mask in range(2 ** len(free)):
        con = forced.copy()
        for bit, (p, m) in enumerate(free):
            if mask >> bit & 1:
                con[p, m] = True
        if (close_con_generators(minus, plus, con) == con).all():
            out.append(con)
    return out


def enumerate_tot_relations(minus: Frame, plus: Frame, cap: int = 1 << 18) -> list[np.ndarray]:
    forced = close_tot_generators(minus, plus, np.zeros((minus.n, plus.n), dtype=bool))
    free = [(m, p) for m in range(minus.n) for p in range(plus.n) if not forced[m, p]]
    if 2 ** len(free) > cap:
        raise ValueError(f"2^{len(free)} candidate relations exceed the cap")
    out = []
    for mask in range(2 ** len(free)):
        tot = forced.copy()
        for bit, (m, p) in enumerate(free):
            if mask >> bit & 1:
                tot[m, p] = True
        if (close_tot_generators(minus, plus, tot) == tot).all():
            out.append(tot)
    return out


def enumerate_dframes(minus: Frame, plus: Frame, cap: int = 1 << 18):
    """All valid d-frames on a fixed frame pair."""
    for con in enumerate_con_relations(minus, plus, cap):
        for tot in enumerate_tot_relations(minus, plus, cap):
            candidate = DFrame(minus, plus, con, tot)
            if check_dframe(candidate).ok:
                yield candidate


# -- the miner -------------------------------------------------------------------


@dataclass
class MinerReport:
    """What bounded-exhaustive search over small d-frames turned up.

    Findings are observations about the searched window only; absence of a
    finding is never evidence of nonexistence.
    """

    searched: int = 0
    incorrigible: list = field(default_factory=list)
    double_negation_without_excluded_middle: list = field(default_factory=list)
    partnerless: list = field(default_factory=list)

    def summary_lines(self) -> list[str]:
        lines = [f"searched {self.searched} valid d-frames"]
        lines.append(f"incorrigible: {len(self.incorrigible)} found")
        for name in self.incorrigible[:5]:
            lines.append(f"  {name}")
        lines.append(
            "double negation without excluded middle: "
            f"{len(self.double_negation_without_excluded_middle)} found"
        )
        for name in self.double_negation_without_excluded_middle[:5]:
            lines.append(f"  {name}")
        lines.append(f"one-sided sublocales with no partner: {len(self.partnerless)} found")
        for name in self.partnerless[:5]:
            lines.append(f"  {name}")
        return lines


def _describe(df: DFrame) -> str:
    con = ",".join(f"({p},{m})" for p, m in df.con_pairs())
    tot = ",".join(f"({m},{p})" for m, p in df.tot_pairs())
    return f"{df.minus.name}x{df.plus.name} con=[{con}] tot=[{tot}]"


def partnerless_sublocales(df: DFrame, max_frame: int = 12) -> list:
    """Component sublocales admitting no partner on the other side."""
    subs_minus = enumerate_sublocales(df.minus, max_frame=max_frame)
    subs_plus = enumerate_sublocales(df.plus, max_frame=max_frame)
    out = []
    for sm in subs_minus:
        if not any(build_sub_d_locale(df, sm, sp)[1].ok for sp in subs_plus):
            out.append(("minus", sm))
    for sp in subs_plus:
        if not any(build_sub_d_locale(df, sm, sp)[1].ok for sm in subs_minus):
            out.append(("plus", sp))
    return out


def mine(max_frame: int = 3, max_candidates: int = 20000) -> MinerReport:
    """Sweep all valid d-frames over small frame pairs for the phenomena the
    infinite examples exhibit; record findings, never assert absences."""
    from .density import is_corrigible, is_double_negation, is_excluded_middle

    report = MinerReport()
    pool = frame_pool(max_frame)
    for minus, plus in product(pool, pool):
        if minus.is_trivial != plus.is_trivial:
            continue
        for df in enumerate_dframes(minus, plus):
            report.searched += 1
            if report.searched > max_candidates:
                return report
            if not is_corrigible(df):
                report.incorrigible.append(_describe(df))
            if is_double_negation(df) and not is_excluded_middle(df):
                report.double_negation_without_excluded_middle.append(_describe(df))
            for side, sub in partnerless_sublocales(df):
                members = ",".join(sub.frame.names(sub.members))
                report.partnerless.append(f"{_describe(df)} {side} {{{members}}}")
    return report
