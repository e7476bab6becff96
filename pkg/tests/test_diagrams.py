import random

import pytest

from etadiag import categories as K
from etadiag import cj
from etadiag import corpus
from etadiag import diagrams as D
from etadiag import groups as G
from etadiag import oracle
from etadiag.errors import NotExact, RelationFailed

Z2, Z3, Z4, Z5 = (G.cyclic(n) for n in (2, 3, 4, 5))
Fb = cj.representable("b")


def hom(U, V, m):
    return G.make_hom(U, V, m)


# -- validation and exactness -------------------------------------------------------------


def test_example_with_free_Z4_module():
    # B -> B/2 -1-> B/2 -2-> B with B = Z/4
    N = D.ExtEtaDiagram(Z2, Z4, Z2, hom(Z2, Z2, [[1]]), hom(Z2, Z4, [[2]]), hom(Z4, Z2, [[1]]))
    assert "chi.eta.psi=2" in D.validate(N)
    assert D.is_exact(N)


def test_zero_diagram_validates():
    assert D.validate(D.zero_eed())
    M = D.MooreDiagram(G.TRIVIAL, G.TRIVIAL, G.TRIVIAL.zero_map(G.TRIVIAL), G.TRIVIAL.zero_map(G.TRIVIAL))
    assert D.is_valid(M)


def test_standard_moore_diagram_for_Z4():
    M = K.standard_emd(Z4)
    assert str(M.B) == "Z/2+Z/2"
    D.validate(M)
    assert D.is_exact(M)


def test_moore_with_zero_B_is_not_exact():
    M = D.MooreDiagram(Z2, G.TRIVIAL, Z2.zero_map(G.TRIVIAL), G.TRIVIAL.zero_map(Z2))
    assert D.is_valid(M) and not D.is_exact(M)


def test_relation_failure_is_named():
    N = D.ExtEtaDiagram(Z2, Z4, Z2, hom(Z2, Z2, [[1]]), hom(Z2, Z4, [[2]]), hom(Z4, Z2, [[0]]))
    with pytest.raises(RelationFailed, match="chi.eta.psi=2"):
        D.validate(N)
    bad_eta = D.EtaDiagram(Z4, Z4, Z4.identity())
    with pytest.raises(RelationFailed, match="2eta=0"):
        D.validate(bad_eta)


def test_Fb_is_exact():
    assert D.is_exact(Fb)


@pytest.mark.parametrize("N", corpus.random_eeds(40, seed=7), ids=lambda N: f"{N.A},{N.B},{N.C}")
def test_derived_relations_hold(N):
    names = D.validate(N)
    for rel in ("2psi=0", "2chi=0", "4=0 on B", "psibar.chibar=0"):
        assert rel in names


# -- the Phi check on exact diagrams ------------------------------------------------------


def test_eeed_phi_check_on_Fb():
    r = D.eeed_phi_check(Fb)
    assert r
    E = D.associated_extension(Fb)
    from etadiag.ext import phi
    assert phi(E).matrix == ((1,),)


def test_eeed_phi_check_with_zero_eta():
    N = K.H(G.parse_group("Z/2+Z/4"), Z2)
    assert D.eeed_phi_check(N)
    from etadiag.ext import classify
    assert classify(D.associated_extension(N)).is_zero()


def test_eeed_phi_check_needs_exactness():
    N = D.ExtEtaDiagram(Z2, G.TRIVIAL, Z2, hom(Z2, Z2, [[0]]), Z2.zero_map(G.TRIVIAL), G.TRIVIAL.zero_map(Z2))
    with pytest.raises(NotExact):
        D.eeed_phi_check(N)


@pytest.mark.parametrize("N", corpus.exact_eeeds(8)[::7], ids=lambda N: f"{N.A},{N.B},{N.C}")
def test_eeed_phi_check_on_corpus(N):
    assert D.eeed_phi_check(N)


# -- morphisms, xi and pi -----------------------------------------------------------------


def test_xi_examples():
    T, Q = G.two_torsion(Fb.A).group, G.mod_two(Fb.C).group
    assert D.xi(Fb, Fb, T.zero_map(Q)).is_zero()
    m = D.xi(Fb, Fb, T.identity())
    assert m.g == 2 * Z4.identity() and m.f.is_zero() and m.h.is_zero()
    assert m.is_valid()


def test_xi_is_additive():
    rng = random.Random(2)
    exact = corpus.exact_eeeds(8)
    for _ in range(30):
        N, N2 = rng.choice(exact), rng.choice(exact)
        dom = list(D.xi_domain(N, N2))
        u1, u2 = rng.choice(dom), rng.choice(dom)
        assert D.xi(N, N2, u1 + u2) == D.xi(N, N2, u1) + D.xi(N, N2, u2)
        assert D.pi_mor(D.xi(N, N2, u1)).is_zero()


def test_pi_examples():
    P = D.pi(Fb)
    assert (P.A, P.C, P.eta.matrix) == (Z2, Z2, ((1,),))
    assert D.pi_mor(D.identity(Fb)) == D.identity(P)


def test_hom_set_examples():
    assert len(D.hom_set(Fb, Fb)) == 4
    ms = D.hom_set(D.zero_eed(), Fb)
    assert len(ms) == 1 and ms[0].is_zero()


@pytest.mark.parametrize("pair", corpus.sample_pairs(corpus.exact_eeeds(8), 100, seed=11),
                         ids=lambda p: f"{p[0].A},{p[0].B},{p[0].C}->{p[1].A},{p[1].B},{p[1].C}")
def test_hom_count_factorizes(pair):
    N, N2 = pair
    count = oracle.brute_eed_morphism_count(N, N2)
    xi_dom = len(D.xi_domain(N, N2))
    ed = oracle.brute_eta_morphism_count(D.pi(N), D.pi(N2))
    assert count == xi_dom * ed == len(D.morphism_group(N, N2))


def test_hom_count_for_moore_and_eta_diagrams():
    moores = corpus.exact_moores(8)
    for M in moores:
        for M2 in moores:
            assert len(D.morphism_group(M, M2)) == oracle.brute_moore_morphism_count(M, M2)
    etas = corpus.sample(corpus.eta_diagrams(8), 25, seed=3)
    for P in etas:
        for P2 in etas:
            assert len(D.morphism_group(P, P2)) == oracle.brute_eta_morphism_count(P, P2)


def test_lift_along_pi_examples():
    lift = D.lift_along_pi(Fb, Fb, D.identity(D.pi(Fb)))
    assert lift.is_valid() and D.pi_mor(lift) == D.identity(D.pi(Fb))
    rng = random.Random(5)
    exact = corpus.exact_eeeds(8)
    for _ in range(20):
        N, N2 = rng.choice(exact), rng.choice(exact)
        fiber = D.lift_fiber(N, N2, rng.choice(D.hom_set(D.pi(N), D.pi(N2))))
        assert len(fiber) == len(D.xi_domain(N, N2))
        assert all(m.is_valid() for m in fiber)


def test_morphism_composition_and_encoding():
    rng = random.Random(9)
    exact = corpus.exact_eeeds(4)
    for _ in range(20):
        N0, N1, N2 = (rng.choice(exact) for _ in range(3))
        a = rng.choice(D.hom_set(N0, N1))
        b = rng.choice(D.hom_set(N1, N2))
        assert (b @ a).is_valid()
        mg = D.morphism_group(N0, N1)
        assert mg.decode(mg.encode(a)) == a


# -- constructing an exact diagram over an eta-diagram ------------------------------------


def test_construct_over_identity_gives_Fb():
    N = K.construct_eeed_over(D.EtaDiagram(Z2, Z2, Z2.identity()))
    assert N.B == Z4 and D.is_exact(N)
    assert D.is_isomorphic(N, Fb)


def test_construct_over_zero_eta_gives_H():
    for A, C in [(Z4, Z2), (G.parse_group("Z/2+Z/2"), Z4), (Z3, Z2)]:
        N = K.construct_eeed_over(D.EtaDiagram(A, C, A.zero_map(C)))
        assert D.is_isomorphic(N, K.H(A, C))


def test_construct_over_projection():
    # eta_bar vanishes here (2 in A[2] maps to 0 in C/2), so any exact B is
    # the split extension of Z/2 by Z/2; no exact diagram over P has B = Z/4
    P = D.EtaDiagram(Z4, Z2, hom(Z4, Z2, [[1]]))
    assert D.eta_bar(P).is_zero()
    N = K.construct_eeed_over(P)
    assert str(N.B) == "Z/2+Z/2" and D.is_exact(N) and D.pi(N) == P
    exact_B = set()
    for B in G.groups_of_order(4):
        for chi in oracle.brute_homs(Z2, B):
            for psi in oracle.brute_homs(B, Z4):
                M = D.ExtEtaDiagram(Z4, B, Z2, P.eta, chi, psi)
                if D.is_valid(M) and D.is_exact(M):
                    exact_B.add(str(B))
    assert exact_B == {"Z/2+Z/2"}


def test_construct_over_every_small_eta_diagram():
    for P in corpus.eta_diagrams(4):
        N = K.construct_eeed_over(P)
        assert D.is_exact(N) and D.pi(N) == P and D.eeed_phi_check(N)
