from itertools import product

import numpy as np
import pytest

from dframes.dframe import (
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
from dframes.errors import InvalidDFrame, TrivialMismatch
from dframes.fixtures import (
    componentwise_dense_counterexample,
    invalid_all_pairs,
    three_three,
    two_two,
)
from dframes.frames import Frame, FrameHom
from dframes.order import scott_closure
from dframes.subdlocale import enumerate_sub_d_locales


C2, C3, B4 = Frame.chain(2), Frame.chain(3), Frame.boolean(2)


def test_symmetric_dframes_pass_all_axioms():
    for frame in (C2, C3, B4, Frame.chain(1)):
        report = check_dframe(symmetric_dframe(frame))
        assert report.ok, str(report.first_failure)


def test_minimal_dframe_values():
    tt = three_three()
    assert sorted(tt.con_pairs()) == [
        ("0", "0"), ("0", "1"), ("0", "c"), ("1", "0"), ("c", "0")]
    assert sorted(tt.tot_pairs()) == [
        ("0", "1"), ("1", "0"), ("1", "1"), ("1", "c"), ("c", "1")]


def test_minimal_trivial_cases():
    one = Frame.chain(1)
    assert minimal_dframe(one, one).validate().ok
    with pytest.raises(TrivialMismatch):
        minimal_dframe(one, C2)
    with pytest.raises(TrivialMismatch):
        minimal_dframe(C2, one)


def test_symmetric_small_values():
    s2 = symmetric_dframe(C2)
    assert sorted(s2.con_pairs()) == [("0", "0"), ("0", "1"), ("1", "0")]
    assert sorted(s2.tot_pairs()) == [("0", "1"), ("1", "0"), ("1", "1")]
    assert symmetric_dframe(Frame.chain(1)).is_trivial


def test_all_pairs_fails_con_tot_with_witness():
    report = check_dframe(invalid_all_pairs())
    assert not report.ok
    failure = report.first_failure
    assert failure.name in ("con-tot-plus", "con-tot-minus")
    assert failure.witness


def test_axiom_witnesses_for_broken_relations():
    # con missing the down-closure of (1, 0)
    con = np.zeros((2, 2), dtype=bool)
    con[1, 0] = True  # (top, bottom) only; (0, 0), (0, 1) missing
    tot = np.zeros((2, 2), dtype=bool)
    tot[1, :] = True
    tot[:, 1] = True
    report = check_dframe(DFrame(C2, C2, con, tot))
    names = {c.name for c in report.checks if not c.ok}
    assert "con-down" in names
    # tot missing its nullary pair
    con2 = np.zeros((2, 2), dtype=bool)
    con2[0, :] = True
    con2[:, 0] = True
    tot2 = np.zeros((2, 2), dtype=bool)
    tot2[:, 1] = True  # up-closed but (1, 0) missing
    report2 = check_dframe(DFrame(C2, C2, con2, tot2))
    assert any(c.name == "tot-join" and not c.ok for c in report2.checks)


def test_assert_valid_raises():
    with pytest.raises(InvalidDFrame):
        invalid_all_pairs().assert_valid()


def test_dframe_hom_checker():
    tt = three_three()
    ident = DFrameHom.identity(tt)
    ok, _ = check_dframe_hom(ident)
    assert ok
    _, _, hom = componentwise_dense_counterexample()
    ok, _ = check_dframe_hom(hom)
    assert ok
    # a component that is not a frame hom
    broken = DFrameHom(tt, tt, FrameHom(tt.minus, tt.minus, [2, 2, 2]),
                       FrameHom.identity(tt.plus))
    ok, violations = check_dframe_hom(broken)
    assert not ok and violations


def test_monomorphisms():
    tt = three_three()
    assert is_monomorphism(DFrameHom.identity(tt))
    _, _, hom = componentwise_dense_counterexample()
    assert not is_monomorphism(hom)
    fac = image_factorization(hom)
    assert is_monomorphism(fac.embedding)


def all_dframe_homs(dom, cod):
    """Brute-force enumeration of d-frame homomorphisms, for oracles."""
    minus_maps = [
        FrameHom(dom.minus, cod.minus, list(m))
        for m in product(range(cod.minus.n), repeat=dom.minus.n)
    ]
    plus_maps = [
        FrameHom(dom.plus, cod.plus, list(m))
        for m in product(range(cod.plus.n), repeat=dom.plus.n)
    ]
    out = []
    for fm in minus_maps:
        if not fm.is_hom:
            continue
        for fp in plus_maps:
            if not fp.is_hom:
                continue
            cand = DFrameHom(dom, cod, fm, fp)
            if cand.is_hom:
                out.append(cand)
    return out


def test_mono_matches_left_cancellation():
    """Categorical oracle: componentwise injectivity agrees with left
    cancellability over all homomorphisms from probe d-frames that carry a
    3-chain on each side in turn."""
    probes_domains = [minimal_dframe(C3, C2, name="3.2"), minimal_dframe(C2, C3, name="2.3")]
    for target, cod in [
        (three_three(), three_three()),
        (three_three(), symmetric_dframe(B4)),
        (two_two(), three_three()),
        (symmetric_dframe(C2), symmetric_dframe(B4)),
    ]:
        probes = [g for dom in probes_domains for g in all_dframe_homs(dom, target)]
        for hom in all_dframe_homs(target, cod):
            signatures = {
                (tuple(hom.minus.mapping[g.minus.mapping]),
                 tuple(hom.plus.mapping[g.plus.mapping]),
                 g.dom.minus.n, g.dom.plus.n)
                for g in probes
            }
            cancellable = len(signatures) == len(probes)
            assert is_monomorphism(hom) == cancellable


def test_image_factorization_identity():
    tt = three_three()
    fac = image_factorization(DFrameHom.identity(tt))
    assert fac.image.minus.elements == tt.minus.elements
    assert (fac.image.con == tt.con).all()
    assert fac.embedding.compose(fac.onto) == DFrameHom.identity(tt)


def test_image_factorization_of_quotient_is_the_sub_d_locale():
    tt = three_three()
    ds = enumerate_sub_d_locales(tt)
    member = ds.members[ds.labels.index("c(c).o(c)")]
    q = member.quotient_hom()
    fac = image_factorization(q)
    assert fac.image.minus.elements == ("c", "1")
    assert fac.image.plus.elements == ("0", "1")
    assert (fac.image.con == member.con).all()
    assert (fac.image.tot == member.tot).all()
    assert is_extremal_epi(fac.onto)
    assert is_monomorphism(fac.embedding)
    assert fac.embedding.compose(fac.onto) == q


def test_factorization_recomposes_everywhere():
    tt = three_three()
    for hom in all_dframe_homs(tt, symmetric_dframe(C2)):
        fac = image_factorization(hom)
        assert is_extremal_epi(fac.onto)
        assert is_monomorphism(fac.embedding)
        assert fac.embedding.compose(fac.onto) == hom
        assert fac.image.validate().ok


def test_extremal_epi_characterisation():
    tt = three_three()
    assert is_extremal_epi(DFrameHom.identity(tt))
    ds = enumerate_sub_d_locales(tt)
    for member in ds.members:
        assert is_extremal_epi(member.quotient_hom())
    # a non-surjective mono is not an extremal epi
    small = two_two()
    inclusion = DFrameHom(
        small, tt,
        FrameHom(small.minus, tt.minus, ["0", "1"]),
        FrameHom(small.plus, tt.plus, ["0", "1"]),
    )
    fac = image_factorization(inclusion)
    assert is_monomorphism(fac.embedding)
    assert not is_extremal_epi(fac.embedding)
    assert not is_extremal_epi(inclusion)


def test_dense_morphisms():
    tt = three_three()
    assert is_dense_hom(DFrameHom.identity(tt))
    _, _, hom = componentwise_dense_counterexample()
    assert hom.minus.is_dense and hom.plus.is_dense
    assert not is_dense_hom(hom)
    assert dense_hom_witness(hom) == ("bc", "ab")


def test_dense_morphisms_have_dense_components():
    tt = three_three()
    for cod in (three_three(), symmetric_dframe(C2)):
        for hom in all_dframe_homs(tt, cod):
            if is_dense_hom(hom):
                assert hom.minus.is_dense and hom.plus.is_dense


def test_regularity():
    assert is_regular(symmetric_dframe(B4))
    assert not is_regular(three_three())
    assert is_regular(minimal_dframe(Frame.chain(1), Frame.chain(1)))


def test_rather_below_sits_inside_the_order():
    for df in (three_three(), symmetric_dframe(B4), symmetric_dframe(C3)):
        rb_minus, rb_plus = rather_below(df)
        assert not (rb_minus & ~df.minus.leq).any()
        assert not (rb_plus & ~df.plus.leq).any()


def test_generator_closure_produces_valid_relations():
    con = np.zeros((B4.n, C3.n), dtype=bool)
    con[B4.idx("a"), C3.idx("c")] = True
    closed = close_con_generators(C3, B4, con)
    assert (close_con_generators(C3, B4, closed) == closed).all()
    assert closed[B4.bottom, C3.top] and closed[B4.top, C3.bottom]
    tot = np.zeros((C3.n, B4.n), dtype=bool)
    closed_tot = close_tot_generators(C3, B4, tot)
    candidate = DFrame(C3, B4, closed, closed_tot)
    report = check_dframe(candidate)
    assert report.ok, str(report.first_failure)


def test_scott_closure_is_identity_on_con():
    for df in (three_three(), symmetric_dframe(B4)):
        assert (scott_closure(df.plus.lattice, df.minus.lattice, df.con) == df.con).all()
