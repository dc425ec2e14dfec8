from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from intervalspace.config import filtration_index, normalize_config
from intervalspace.errors import CollapseConflict, ValidationFailed
from intervalspace.generators import GenSpec, gen_random
from intervalspace.homotopy import (SAMPLE_TIMES, MonotoneCollapse, Phi, Phi_label, audit,
                                    bigH, cleanup, contract_H, deform_base, deform_total,
                                    fourphase_collapse, g_inverse, g_label, hprime, in_U,
                                    k_collapse, k_homotopy, k_start, phi, phi_label, psi,
                                    pushforward, section_label, section_sigma, tau_label)
from intervalspace.intervals import (MINUS, PLUS, Interval, IntervalClass, MirrorClass,
                                     Window, mirror_expand)
from intervalspace.scanning import SIGMA, SuspensionPoint, scan_p
from intervalspace.textio import parse
from intervalspace.tilde import TildeElem

HALF = F(1, 2)


def P(c, x="a"):
    return SuspensionPoint(F(c), x)


def E(text):
    return parse(f"~E[eps=1/2 s=3 d=1] C{{ [0] : E(3){{ {text} }} }}")


def Z(*ys):
    return normalize_config([((F(i),), y) for i, y in enumerate(ys)], SIGMA)


# -- collapses and pushforward ---------------------------------------------------------

def test_collapse_validation():
    with pytest.raises(ValueError):
        MonotoneCollapse((F(1),), ((1, 0), (2, 0)))
    with pytest.raises(ValueError):
        MonotoneCollapse((F(1),), ((1, 0), (1, 1)))


def test_pushforward_identity_and_vanishing():
    xi = parse("I(0,5){ [1 2 + -] a ; [3 4 + +] b }")
    assert pushforward(MonotoneCollapse.identity(), xi) == xi
    h = MonotoneCollapse.from_spec([(F(1, 2), 1, 0), (F(5, 2), 0, F(1, 2)), (None, 1, -2)])
    assert pushforward(h, xi).items == ((Interval(1, 2, PLUS, PLUS), "b"),)


def test_plateau_pastes_k_and_l():
    # K = (.., -1, s) and L = (-s, .., +1) meet on the plateau and paste
    raw = [(F(0), F(1), MINUS, PLUS, "a"), (F(1), F(2), MINUS, PLUS, "a")]
    assert cleanup(raw) == ((Interval(0, 2, MINUS, PLUS), "a"),)


def test_collapse_conflict():
    with pytest.raises(CollapseConflict):
        cleanup([(F(1), F(1), PLUS, PLUS, "a")])


# -- contraction ------------------------------------------------------------------------

def test_contract_examples():
    mu = parse("E(1){ [1/2 4/5 - +] a }")
    assert contract_H(mu, 0) == mu
    assert contract_H(mu, 1).items == ()
    out = contract_H(mu, F(3, 5))
    assert out.items == ((Interval(0, F(1, 5), PLUS, PLUS), "a"),)
    assert mirror_expand(out).items == ((Interval(F(-1, 5), F(1, 5), MINUS, PLUS), "a"),)


def test_contract_requires_unit_width():
    with pytest.raises(ValueError):
        contract_H(parse("E(2){ }"), HALF)


# -- phi, sections, psi, Phi -------------------------------------------------------------

def test_phi_examples():
    assert phi(E("[1 2 + +] a")).config.items[0][1].items == ((Interval(2, 3, PLUS, PLUS), "a"),)
    assert phi(E("[1 2 + +] a")).span == 4
    out = phi_label(parse("E(3){ [1/10 1 + +] a }"), HALF)
    assert out.items == ((Interval(F(2, 5), F(9, 10), MINUS, MINUS), "a"),
                         (Interval(F(11, 10), 2, PLUS, PLUS), "a"))
    assert phi_label(MirrorClass(3, ()), HALF) == IntervalClass(Window.half(4), ())


def test_section_examples():
    eps = HALF
    assert mirror_expand(section_label(P(0), eps)).items == \
        ((Interval(-eps, eps, MINUS, PLUS), "a"),)
    assert section_label(P(1), eps).items == ()
    z = Z(P(F(1, 3)), P(F(-3, 4), "b"), P(0))
    sig = section_sigma(z, eps)
    assert scan_p(TildeElem("E", sig, eps, 2 * eps)) == z


def test_psi_examples():
    ei = parse("~I[eps=1/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } }")
    empty = normalize_config([], SIGMA)
    out = psi(empty, ei)
    assert out.span == 4 and out.config.items[0][1].items == ((Interval(2, 3, PLUS, PLUS), "a"),)
    z = Z(P(F(1, 4)), P(F(-1, 2), "b"))
    assert scan_p(psi(z, ei)) == z
    alone = psi(z, parse("~I[eps=1/2 s=3 d=1] C{ }"))
    assert alone.span == 4 and len(alone.config.items) == 2


def test_Phi_examples():
    assert Phi_label(parse("E(3){ [1 2 + +] a }"), HALF) == parse("E(5){ [3 4 + +] a }")
    assert Phi_label(parse("E(3){ [1/10 1 + +] a }"), HALF) == \
        parse("E(5){ [1/10 3/5 + +] a ; [7/5 19/10 - -] a ; [21/10 3 + +] a }")
    e = E("[1/10 1 + +] a")
    assert Phi(e) == psi(scan_p(e), phi(e))


# -- the four-phase homotopy -------------------------------------------------------------

def test_fourphase_examples():
    assert fourphase_collapse(1, F(1, 4))(F(7, 2)) == F(3, 2)
    assert fourphase_collapse(1, 1)(5) == 1
    h0 = fourphase_collapse(1, 0)
    assert all(h0(F(u, 4)) == F(u, 4) for u in range(0, 40))
    tops = {F(1, 8): 1, F(1, 2): 3, F(5, 8): 3, 1: 4}
    for t, top in tops.items():
        assert fourphase_collapse(1, t).top_shift == top


def test_bigH_endpoints():
    for text in ("[1 2 + +] a", "[1/10 1 + +] a", "[0 1 + -] a", ""):
        e = E(text)
        assert bigH(e, 0) == Phi(e)
        assert bigH(e, 1) == e


def test_bigH_phase_four_witness():
    # 0 < l(J_1) < eps/2: the merged L,K piece keeps its left end l while the
    # translated J_1 comes back from above with the same left parity
    e = E("[1/10 1 + +] a")
    h = bigH(e, F(4, 5), validate=False)
    assert h.config.items[0][1].items == ((Interval(F(1, 10), F(9, 20), PLUS, MINUS), "a"),
                                          (Interval(HALF, F(7, 5), PLUS, PLUS), "a"))
    assert h.problems()
    with pytest.raises(ValidationFailed):
        bigH(e, F(4, 5))
    bad = [t for t, _ in audit(lambda t: bigH(e, t, validate=False))]
    assert bad == [F(4, 5)]


def test_bigH_fine_away_from_the_short_branch():
    for text in ("[1 2 + +] a", "[0 1 + -] a", "[1/4 1 + +] a"):
        e = E(text)
        assert not audit(lambda t: bigH(e, t, validate=False))
        assert all(scan_p(bigH(e, t)) == scan_p(e) for t in SAMPLE_TIMES)


# -- the k homotopy ------------------------------------------------------------------------

def test_tau_label_pair():
    out = tau_label(P(HALF), HALF)
    assert out.items == ((Interval(F(3, 8), F(7, 8), MINUS, PLUS), "a"),
                         (Interval(F(9, 8), F(13, 8), MINUS, PLUS), "a"))


def test_k_collapse():
    k = k_collapse(1, HALF)
    assert k(F(1, 2)) == F(1, 2) and k(2) == 1 and k(3) == 1 and k(4) == 2


def test_k_endpoints():
    ei = parse("~I[eps=1/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } ; [1] : I(0,3){ [1 2 - +] b } }")
    z = Z(P(F(1, 4)), P(F(-1, 2), "b"), P(0, "c"))
    assert k_homotopy(z, ei, 0) == k_start(z, ei) == phi(psi(z, ei))
    assert k_homotopy(z, ei, 1) == ei
    for t in SAMPLE_TIMES:
        k_homotopy(z, ei, t)


def test_k_with_empty_base_translates():
    ei = parse("~I[eps=1/2 s=3 d=1] C{ [0] : I(0,3){ [1 2 + +] a } }")
    empty = normalize_config([], SIGMA)
    out = k_homotopy(empty, ei, HALF)
    assert out.span == 4 and out.config.items[0][1].items == ((Interval(2, 3, PLUS, PLUS), "a"),)


# -- deformation and the inverse ----------------------------------------------------------

def test_hprime_and_deform_base():
    assert hprime(1, F(1, 4)) == HALF
    z = Z(P(F(3, 4)), P(F(1, 4), "b"))
    assert deform_base(z, 0) == z
    assert deform_base(z, 1).items == (((F(1),), P(HALF, "b")),)
    assert in_U(z)
    in_base = lambda y: y.is_base
    assert filtration_index(deform_base(z, 1), in_base) < filtration_index(z, in_base)


def test_deform_total():
    e = E("[1/10 1 + +] a")
    assert deform_total(e, 1).eps == F(1, 4)
    assert deform_total(e, 0) == e
    for t in SAMPLE_TIMES:
        assert scan_p(deform_total(e, t)) == deform_base(scan_p(e), t)


def test_g_examples():
    assert g_label(P(HALF), HALF).items == ((Interval(F(1, 8), F(3, 4), MINUS, PLUS), "a"),)
    z = Z(P(F(3, 4)), P(F(1, 4), "b"), P(0, "c"))
    fiber = psi(deform_base(z, 1), parse("~I[eps=1/2 s=3 d=1] C{ [5] : I(0,3){ [1 2 + +] a } }"))
    assert scan_p(g_inverse(z, fiber)) == z
    with pytest.raises(ValueError):
        g_inverse(Z(P(0)), fiber)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_identities_on_random_inputs(i):
    spec = GenSpec(seed=9)
    e = gen_random(spec, "tildeE", i)
    assert Phi(e) == psi(scan_p(e), phi(e))
    assert bigH(e, 0) == Phi(e) and bigH(e, 1) == e
    for t in (0, F(1, 3), HALF, 1):
        assert scan_p(deform_total(e, t)) == deform_base(scan_p(e), t)
