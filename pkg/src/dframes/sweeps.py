"""Property sweeps: every structural law this package relies on, run over a
corpus of d-frames and morphisms with first-witness reporting.

Shared by the props command and the test suite so both exercise the same
checks.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .dframe import (
    DFrameHom,
    image_factorization,
    is_dense_hom,
    is_extremal_epi,
    is_monomorphism,
)
from .density import (
    ConPreorder,
    Pseudocomplements,
    classify,
    coreflection_report,
    dense_core,
    dense_core_map,
    double_pseudocomplement_sets,
    galois_check,
    is_dense_sub_d_locale,
    is_dually_subfit,
    is_skeletal,
    sublocale_generated_by,
)
from .errors import SizeGuardExceeded
from .frames import enumerate_sublocales
from .subdlocale import build_sub_d_locale, enumerate_sub_d_locales


class Sweep:
    """Accumulates named verdicts; first witness per failed check."""

    def __init__(self):
        self.verdicts = []

    def check(self, name: str, ok: bool, detail: str = ""):
        self.verdicts.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.verdicts)

    def failures(self):
        return [(n, d) for n, ok, d in self.verdicts if not ok]


def sweep_dframe(df, sweep: Sweep, max_frame: int = 12, max_pairs: int = 400,
                 cores: dict | None = None):
    """All per-d-frame law checks; enumeration-based ones are size-guarded."""
    name = df.name
    sweep.check(f"{name}: axioms", df.validate().ok)

    galois = galois_check(df)
    sweep.check(f"{name}: pseudocomplement laws", galois.ok,
                "" if galois.ok else str(galois.failures[0]))

    pre = ConPreorder(df)
    leq_in_pre = bool(
        (~df.minus.leq | pre.minus).all() and (~df.plus.leq | pre.plus).all()
    )
    sweep.check(f"{name}: order inside consistency preorder", leq_in_pre)
    trans_m = ~((pre.minus.astype(np.int64) @ pre.minus.astype(np.int64)) > 0) | pre.minus
    trans_p = ~((pre.plus.astype(np.int64) @ pre.plus.astype(np.int64)) > 0) | pre.plus
    sweep.check(f"{name}: preorder transitive", bool(trans_m.all() and trans_p.all()))

    core = dense_core(df)
    if cores is not None:
        cores[id(df)] = core
    sweep.check(f"{name}: dense core is dense", is_dense_sub_d_locale(core.core))

    # The three characterisations of core membership agree elementwise, on
    # both sides: being a member, having no strict preorder-predecessors
    # above the order, and being one's own saturation.
    ok_membership = True
    for lat, order, sat, members in (
        (df.minus, pre.minus, core.nu_minus.mapping, core.core.minus.members),
        (df.plus, pre.plus, core.nu_plus.mapping, core.core.plus.members),
    ):
        for x in range(lat.n):
            in_core = x in members
            receptive = bool((~order[:, x] | lat.leq[:, x]).all())
            own_join = sat[x] == x
            if not (in_core == receptive == own_join):
                ok_membership = False
                break
    sweep.check(f"{name}: core membership characterisations agree", ok_membership)

    props = classify(df)  # raises on implication-chain violations
    sweep.check(f"{name}: implication chain", True, str(props.as_dict()))

    realized = core.as_dframe
    sweep.check(f"{name}: core dually subfit", is_dually_subfit(realized))

    cref = coreflection_report([df])
    sweep.check(f"{name}: coreflection facts", cref.ok,
                "" if cref.ok else str(cref.failures[0]))

    try:
        ds = enumerate_sub_d_locales(df, max_frame=max_frame, max_pairs=max_pairs)
    except SizeGuardExceeded:
        sweep.check(f"{name}: sub-d-locale sweep skipped (size guard)", True)
        return

    dense_members = [m for m in ds.members if is_dense_sub_d_locale(m)]
    sweep.check(
        f"{name}: dense core below every dense sub-d-locale",
        all(core.core.leq(m) for m in dense_members),
    )
    sweep.check(f"{name}: dense core enumerated", any(m == core.core for m in ds.members))

    pc = Pseudocomplements(df)
    ok_fix = True
    for m in dense_members:
        q_m, q_p = m.minus.quotient, m.plus.quotient
        if not all(q_p[pc.to_plus[a]] == pc.to_plus[a] for a in range(df.minus.n)):
            ok_fix = False
        if not all(q_m[pc.to_minus[p]] == pc.to_minus[p] for p in range(df.plus.n)):
            ok_fix = False
    sweep.check(f"{name}: dense quotients fix pseudocomplements", ok_fix)

    # Lemma check: induced tot is the restriction, and the quotient pair is
    # extremal; join/meet give actual bounds.
    ok_tot = all((m.tot == m.restricted_tot()).all() for m in ds.members)
    sweep.check(f"{name}: induced tot equals restriction", ok_tot)
    ok_epi = all(is_extremal_epi(m.quotient_hom()) for m in ds.members)
    sweep.check(f"{name}: quotient pairs are extremal epis", ok_epi)

    # join() and meet() assert the lub/glb facts internally; run them on all
    # pairs for small lattices and a deterministic sample for larger ones.
    if ds.n <= 16:
        sample = [(i, j) for i in range(ds.n) for j in range(i, ds.n)]
    else:
        sample = [((k * 7919) % ds.n, (k * 104729) % ds.n) for k in range(12)]
    ok_bounds = True
    for i, j in sample:
        try:
            ds.join(i, j)
            ds.meet(i, j)
        except AssertionError:
            ok_bounds = False
            break
    sweep.check(f"{name}: constructive joins and meets realise the bounds", ok_bounds)

    ok_dense_meet = True
    dense_sample = dense_members if len(dense_members) <= 12 else dense_members[:12]
    for s, t in combinations(dense_sample, 2):
        inter_m = s.minus.meet_with(t.minus)
        inter_p = s.plus.meet_with(t.plus)
        cand, rep = build_sub_d_locale(df, inter_m, inter_p)
        if not rep.ok or not is_dense_sub_d_locale(cand):
            ok_dense_meet = False
            break
        if ds.members[ds.meet_index(ds.index_of(s), ds.index_of(t))] != cand:
            ok_dense_meet = False
            break
    sweep.check(f"{name}: meets of dense members are dense intersections", ok_dense_meet)

    # Sublocale pairs containing the double-pseudocomplement sets are dense
    # sub-d-locales with restricted relations.
    dbl_m, dbl_p = double_pseudocomplement_sets(df)[:2]
    gen_m = sublocale_generated_by(df.minus, dbl_m.members)
    gen_p = sublocale_generated_by(df.plus, dbl_p.members)
    ok_dense_pairs = True
    for sm in enumerate_sublocales(df.minus, max_frame=max_frame):
        if not sm.contains(gen_m):
            continue
        for sp in enumerate_sublocales(df.plus, max_frame=max_frame):
            if not sp.contains(gen_p):
                continue
            cand, rep = build_sub_d_locale(df, sm, sp)
            if not rep.ok or not is_dense_sub_d_locale(cand):
                ok_dense_pairs = False
            elif not (cand.con == cand.restricted_con()).all():
                ok_dense_pairs = False
    sweep.check(f"{name}: pairs containing the double sets are dense", ok_dense_pairs)


def sweep_morphism(hom: DFrameHom, sweep: Sweep, cores: dict):
    name = hom.name
    sweep.check(f"{name}: is a d-frame homomorphism", hom.is_hom)

    fac = image_factorization(hom)
    sweep.check(f"{name}: image factor is extremal epi", is_extremal_epi(fac.onto))
    sweep.check(f"{name}: image embedding is mono", is_monomorphism(fac.embedding))
    sweep.check(f"{name}: factorisation recomposes",
                fac.embedding.compose(fac.onto) == hom)
    sweep.check(
        f"{name}: mono agrees with componentwise injectivity",
        is_monomorphism(hom) == (hom.minus.is_injective and hom.plus.is_injective),
    )
    if is_dense_hom(hom):
        sweep.check(f"{name}: dense morphism has dense components",
                    hom.minus.is_dense and hom.plus.is_dense)


def _core_for(df, cores: dict):
    if id(df) not in cores:
        cores[id(df)] = dense_core(df)
    return cores[id(df)]


def sweep_functoriality(pairs, sweep: Sweep, cores: dict):
    """hat of a composite equals the composite of hats when the outer
    morphism is skeletal; hat of the identity is the identity."""
    for outer, inner in pairs:
        if not is_skeletal(outer):
            continue
        dom_c = _core_for(inner.dom, cores)
        mid_c = _core_for(inner.cod, cores)
        cod_c = _core_for(outer.cod, cores)
        lhs = dense_core_map(outer.compose(inner), dom_core=dom_c, cod_core=cod_c)
        rhs = dense_core_map(outer, dom_core=mid_c, cod_core=cod_c).compose(
            dense_core_map(inner, dom_core=dom_c, cod_core=mid_c)
        )
        sweep.check(
            f"core functor: {outer.name} after {inner.name}",
            lhs == rhs,
        )


def sweep_identity_functor(dframes, sweep: Sweep, cores: dict):
    for df in dframes:
        core = _core_for(df, cores)
        ident = DFrameHom.identity(df)
        mapped = dense_core_map(ident, dom_core=core, cod_core=core)
        n_m, n_p = len(core.core.minus.members), len(core.core.plus.members)
        ok = bool(
            (mapped.minus.mapping == np.arange(n_m)).all()
            and (mapped.plus.mapping == np.arange(n_p)).all()
        )
        sweep.check(f"{df.name}: core of identity is identity", ok)


def standard_morphisms(dframes, cores: dict) -> tuple[list, list]:
    """A deterministic morphism corpus over the given d-frames.

    Returns (morphisms, composable_pairs): identities, dense-core
    quotients, the sub-d-locale quotients of the smaller members, the
    componentwise-dense counterexample, and the composable combinations.
    """
    from .fixtures import componentwise_dense_counterexample

    morphisms = []
    pairs = []
    for df in dframes:
        ident = DFrameHom.identity(df)
        morphisms.append(ident)
        core = _core_for(df, cores)
        q_core = core.core.quotient_hom()
        morphisms.append(q_core)
        pairs.append((q_core, ident))
        # Quotient onto the core of the realized core: composable follow-up
        # whose outer map comes from a dually subfit d-frame, hence skeletal.
        realized = core.as_dframe
        again = _core_for(realized, cores)
        q_again = again.core.quotient_hom()
        morphisms.append(q_again)
        pairs.append((q_again, q_core))
        if df.minus.n * df.plus.n <= 16:
            try:
                ds = enumerate_sub_d_locales(df)
            except SizeGuardExceeded:
                ds = None
            if ds is not None:
                for member in ds.members:
                    q = member.quotient_hom()
                    morphisms.append(q)
                    pairs.append((q, ident))
    _, _, counterexample = componentwise_dense_counterexample()
    morphisms.append(counterexample)
    return morphisms, pairs


def full_sweep(dframes, max_frame: int = 12, max_pairs: int = 400) -> Sweep:
    sweep = Sweep()
    cores: dict = {}
    for df in dframes:
        sweep_dframe(df, sweep, max_frame=max_frame, max_pairs=max_pairs, cores=cores)
    morphisms, pairs = standard_morphisms(dframes, cores)
    for hom in morphisms:
        sweep_morphism(hom, sweep, cores)
    sweep_identity_functor(dframes, sweep, cores)
    sweep_functoriality(pairs, sweep, cores)
    cref = coreflection_report(dframes, [h for h in morphisms if is_skeletal(h)])
    sweep.check("coreflection sweep over corpus", cref.ok,
                "" if cref.ok else str(cref.failures[0]))
    return sweep
