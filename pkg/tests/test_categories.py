import itertools
import random

import pytest

from etadiag import categories as K
from etadiag import cj
from etadiag import diagrams as D
from etadiag import ext as X
from etadiag import groups as G
from etadiag import oracle
from etadiag.errors import NotInEmdPrime, RelationFailed

Z2, Z3, Z4 = G.cyclic(2), G.cyclic(3), G.cyclic(4)
P22 = K.SppObject(Z2, Z2)


# -- H and SPP ----------------------------------------------------------------------------


def test_H_of_Z2_Z2():
    N = K.H(Z2, Z2)
    assert str(N.B) == "Z/2+Z/2" and N.eta.is_zero()
    assert D.is_exact(N)


def test_H_mor_of_identity():
    assert K.H_mor(K.spp_identity(P22)) == D.identity(K.H(Z2, Z2))


@pytest.mark.parametrize("P0,P1", [(K.SppObject(a, c), K.SppObject(b, d))
                                   for a, c, b, d in itertools.product(G.groups_up_to_order(4), repeat=4)][::17],
                         ids=lambda P: f"({P.A},{P.C})")
def test_spp_count_matches_brute_force(P0, P1):
    N0, N1 = K.H(P0.A, P0.C), K.H(P1.A, P1.C)
    assert K.spp_hom_order(P0, P1) == oracle.brute_eed_morphism_count(N0, N1)


def test_H_is_full_and_faithful_on_a_sample():
    P0, P1 = K.SppObject(Z4, Z2), K.SppObject(G.parse_group("Z/2+Z/2"), Z4)
    images = {D.morphism_group(K.H(Z4, Z2), K.H(P1.A, P1.C)).encode(K.H_mor(m)) for m in K.spp_morphisms(P0, P1)}
    assert len(images) == K.spp_hom_order(P0, P1) == len(D.morphism_group(K.H(Z4, Z2), K.H(P1.A, P1.C)))
    for m in K.spp_morphisms(P0, P1):
        assert K.H_inverse(P0, P1, K.H_mor(m)) == m


def _random_spp(rng, P0, P1):
    return rng.choice(list(K.spp_morphisms(P0, P1)))


def test_spp_identity_and_associativity():
    rng = random.Random(0)
    objs = [K.SppObject(a, c) for a in G.groups_up_to_order(4) for c in G.groups_up_to_order(4)]
    for _ in range(60):
        P0, P1, P2, P3 = (rng.choice(objs) for _ in range(4))
        a, b, c = _random_spp(rng, P0, P1), _random_spp(rng, P1, P2), _random_spp(rng, P2, P3)
        assert K.spp_compose(K.spp_identity(P1), a) == a == K.spp_compose(a, K.spp_identity(P0))
        assert K.spp_compose(c, K.spp_compose(b, a)) == K.spp_compose(K.spp_compose(c, b), a)
        # H is a functor
        assert K.H_mor(K.spp_compose(b, a)) == K.H_mor(b) @ K.H_mor(a)


def test_spp_plus_to_spp_on_nonsplit_class():
    E1 = X.ExtClass(Z2, Z2, ((1,),))
    m = K.SppPlusMorphism(P22, P22, Z2.identity(), Z2.identity(), E1)
    image = K.spp_plus_to_spp(m)
    assert image.f == Z2.identity() and image.h == Z2.identity()
    assert image.u == G.two_torsion(Z2).group.identity()


def test_spp_plus_functoriality():
    rng = random.Random(4)
    objs = [K.SppObject(a, c) for a in G.groups_up_to_order(4) for c in G.groups_up_to_order(4)]

    def rand(P0, P1):
        f = rng.choice(list(G.hom_group(P0.A, P1.A)))
        h = rng.choice(list(G.hom_group(P0.C, P1.C)))
        u = rng.choice(list(X.all_classes(P0.A, P1.C)))
        return K.SppPlusMorphism(P0, P1, f, h, u)

    for _ in range(60):
        P0, P1, P2 = (rng.choice(objs) for _ in range(3))
        a, b = rand(P0, P1), rand(P1, P2)
        lhs = K.spp_plus_to_spp(K.spp_plus_compose(b, a))
        assert lhs == K.spp_compose(K.spp_plus_to_spp(b), K.spp_plus_to_spp(a))


# -- Moore diagrams and EMD' --------------------------------------------------------------


def test_standard_emd_examples():
    M = K.standard_emd(Z4)
    assert str(M.B) == "Z/2+Z/2" and D.is_exact(M)
    M = K.standard_emd(G.Z)
    assert str(M.B) == "Z/2" and M.psi.is_zero() and D.is_exact(M)
    M = K.standard_emd(G.TRIVIAL)
    assert M.B.is_trivial


@pytest.mark.parametrize("A", G.groups_up_to_order(16) + [G.Z, G.parse_group("Z/2+Z")], ids=str)
def test_standard_emd_is_exact(A):
    M = K.standard_emd(A)
    assert M.A == A and D.is_exact(M)


@pytest.mark.parametrize("A", [Z2, G.cyclic(6), G.parse_group("Z/2+Z/4")], ids=str)
def test_literal_recipe_fails_when_a_factor_is_twice_odd(A):
    # A/2 + A[2] with phi(a) = (a, 0) has phi psi = 0, not 2, on the Z/2 part
    with pytest.raises(RelationFailed):
        D.validate(K.standard_emd_literal(A))


@pytest.mark.parametrize("A", [Z4, G.cyclic(8), G.parse_group("Z/4+Z/4"), G.Z, Z3], ids=str)
def test_literal_recipe_works_otherwise(A):
    M = K.standard_emd_literal(A)
    assert D.is_valid(M) and D.is_exact(M)


def test_emd_round_trip_examples():
    M = K.standard_emd(Z4)
    N = K.emd_to_eeed(M)
    assert N.C == Z2 and K.eeed_to_emd(N) == M
    Z0 = D.MooreDiagram(G.TRIVIAL, G.TRIVIAL, G.TRIVIAL.zero_map(G.TRIVIAL), G.TRIVIAL.zero_map(G.TRIVIAL))
    assert K.emd_to_eeed(Z0) == D.zero_eed()
    Fb = cj.representable("b")
    Mb = K.eeed_to_emd(Fb)
    assert (Mb.A, Mb.B) == (Z2, Z4)


def test_eeed_to_emd_needs_emd_prime():
    with pytest.raises(NotInEmdPrime):
        K.eeed_to_emd(K.H(Z2, Z2))


def test_ed_to_hom_bijection_examples():
    N = K.emd_to_eeed(K.standard_emd(Z4))
    bij = K.ed_to_hom_bijection(N, N)
    ed = D.hom_set(D.pi(N), D.pi(N))
    assert len(ed) == len(G.hom_group(Z4, Z4)) == 4
    assert bij.backward(Z4.zero_map(Z4)).h.is_zero()
    assert bij.backward(Z4.identity()).h == N.C.identity()


def test_emd_morphism_functors_are_inverse():
    M = K.standard_emd(G.parse_group("Z/2+Z/4"))
    M2 = K.standard_emd(Z4)
    for m in D.hom_set(M, M2):
        e = K.emd_mor_to_eeed(m)
        assert e.is_valid() and K.eeed_mor_to_emd(e) == m


# -- degenerations ------------------------------------------------------------------------


def test_degenerate_eta_zero():
    d = K.classify_degenerate(K.H(Z2, Z3))
    assert "eta=0" in d.tags
    obj, iso = d.reduced["eta=0"]
    assert obj == K.SppObject(Z2, Z3) and iso.is_isomorphism()


def test_degenerate_chi_zero_when_C_has_odd_order():
    N = K.construct_eeed_over(D.EtaDiagram(Z4, Z3, Z4.zero_map(Z3)))
    d = K.classify_degenerate(N)
    assert "chi=0" in d.tags
    assert N.B.order == G.two_torsion(N.A).group.order


def test_Fb_has_no_degenerations():
    assert K.classify_degenerate(cj.representable("b")).tags == frozenset()
