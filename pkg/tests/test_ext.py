"""Extensions, Ext classes, Baer sums and Phi.

The brute-force oracles here enumerate every short exact sequence
``V -> M -> U`` with small ``M`` and sort them into equivalence classes by
trying every middle map, with no use of the class arithmetic under test.
"""

import itertools
from functools import lru_cache

import pytest

from etadiag import ext as X
from etadiag import groups as G
from etadiag import oracle
from etadiag.errors import GroupMismatch

Z2, Z4, Z8 = G.cyclic(2), G.cyclic(4), G.cyclic(8)


def cls(U, V, *cosets):
    return X.ExtClass(U, V, tuple(tuple(c) for c in cosets))


E1 = X.Extension(Z2, Z4, Z2, G.make_hom(Z2, Z4, [[2]]), G.make_hom(Z4, Z2, [[1]]))


# -- brute-force oracles ------------------------------------------------------------------


def _elements(U):
    return [x.coeffs for x in U.elements()]


def _is_ses(i, p):
    V, M, U = i.domain, i.codomain, p.codomain
    img_i = {i(v).coeffs for v in V.elements()}
    ker_p = {m for m in _elements(M) if p(m).is_zero()}
    return len(img_i) == V.order and img_i == ker_p and len({p(m).coeffs for m in M.elements()}) == U.order


@lru_cache(maxsize=None)
def brute_extensions(U, V):
    out = []
    for M in G.groups_of_order(U.order * V.order):
        for i in oracle.brute_homs(V, M):
            for p in oracle.brute_homs(M, U):
                if _is_ses(i, p):
                    out.append(X.Extension(V, M, U, i, p))
    return out


def brute_equivalent(E, F):
    if E.M != F.M:
        return False
    for g in oracle.brute_homs(E.M, F.M):
        if g @ E.i == F.i and F.p @ g == E.p:
            return True
    return False


def brute_classes(U, V):
    reps = []
    for E in brute_extensions(U, V):
        if not any(brute_equivalent(E, R) for R in reps):
            reps.append(E)
    return reps


def brute_phi(E):
    """Phi by element search: lift u, double, pull back along i, reduce mod 2V."""
    T = G.two_torsion(E.U)
    Q = G.mod_two(E.V)
    cols = []
    for g in T.group.generators():
        u = T.inclusion(g)
        m = next(m for m in E.M.elements() if E.p(m) == u)
        v = next(v for v in E.V.elements() if E.i(v) == 2 * m)
        cols.append(Q.projection(v).coeffs)
    return G.Homomorphism(T.group, Q.group, tuple(zip(*cols)) if cols else tuple(() for _ in range(Q.group.ngens)))


SMALL_PAIRS = [(U, V) for U in G.groups_up_to_order(4) for V in G.groups_up_to_order(4)
               if U.order * V.order <= 8 and not U.is_trivial and not V.is_trivial]


# -- Ext groups ---------------------------------------------------------------------------


def test_ext_group_examples():
    for V in (Z2, Z4, G.Z, G.parse_group("Z/2+Z/4")):
        assert X.ext_group(G.Z, V).is_trivial
    assert str(X.ext_group(Z2, G.Z)) == "Z/2"
    assert str(X.ext_group(Z2, Z2)) == "Z/2"
    assert str(X.ext_group(Z4, G.cyclic(6))) == "Z/2"
    assert str(X.ext_group(G.parse_group("Z/2+Z/4"), Z4)) == "Z/2+Z/4"


@pytest.mark.parametrize("U,V", SMALL_PAIRS, ids=lambda g: str(g))
def test_class_count_matches_brute_force(U, V):
    assert len(brute_classes(U, V)) == X.ext_order(U, V)


@pytest.mark.parametrize("U,V", SMALL_PAIRS, ids=lambda g: str(g))
def test_classify_separates_brute_force_classes(U, V):
    reps = brute_classes(U, V)
    labels = [X.classify(E) for E in reps]
    assert len(set(labels)) == len(reps)
    # every extension gets the label of its brute-force class
    for E in brute_extensions(U, V)[:60]:
        R = next(R for R in reps if brute_equivalent(E, R))
        assert X.classify(E) == X.classify(R)


def test_exactly_two_middle_groups_over_Z2():
    mids = {str(E.M) for E in brute_classes(Z2, Z2)}
    assert mids == {"Z/4", "Z/2+Z/2"}


# -- realize and classify -----------------------------------------------------------------


def test_realize_examples():
    assert str(X.realize(cls(Z2, Z2, [1])).M) == "Z/4"
    assert str(X.realize(cls(Z4, Z2, [1])).M) == "Z/8"
    for U, V in [(Z2, Z4), (G.parse_group("Z/2+Z/2"), Z2), (G.Z, Z4)]:
        E = X.realize(X.ExtClass.zero(U, V))
        assert E.M == G.direct_sum(V, U).group


@pytest.mark.parametrize("U,V", [(U, V) for U in G.groups_up_to_order(8) for V in G.groups_up_to_order(8)][::3],
                         ids=lambda g: str(g))
def test_realize_is_short_exact_by_enumeration(U, V):
    for c in X.all_classes(U, V):
        E = X.realize(c)
        assert _is_ses(E.i, E.p)
        assert X.classify(X.forget_construction(E)) == c


def test_classify_examples():
    assert X.classify(E1) == cls(Z2, Z2, [1])
    assert X.classify(X.split_extension(Z4, Z2)).is_zero()


def test_classify_with_free_summands():
    for U, V in [(G.parse_group("Z/2+Z"), Z4), (Z2, G.Z), (Z4, G.parse_group("Z/2+Z"))]:
        for c in X.all_classes(U, V):
            E = X.forget_construction(X.realize(c))
            assert E.is_exact() and X.classify(E) == c


def test_non_exact_sequence_is_rejected():
    bad = X.Extension(Z2, Z4, Z2, G.make_hom(Z2, Z4, [[0]]), G.make_hom(Z4, Z2, [[1]]))
    with pytest.raises(Exception):
        X.phi(bad)


# -- pushout, pullback, Baer sum ----------------------------------------------------------


def test_pushout_examples():
    c = cls(Z2, Z2, [1])
    assert X.classify(X.pushout(Z2.identity(), X.realize(c))) == c
    assert X.classify(X.pushout(Z2.identity(), E1)) == X.classify(E1)
    assert X.classify(X.pullback(Z2.zero_map(Z2), E1)).is_zero()


def test_pushout_pullback_match_class_formulas():
    groups = G.groups_up_to_order(8)
    checked = 0
    for U, V, W in itertools.product(groups[:6], groups[:6], groups[:6]):
        for c in list(X.all_classes(U, V))[:3]:
            E = X.realize(c)
            for f in list(G.hom_group(V, W))[:3]:
                assert X.classify(X.pushout(f, E)) == X.class_pushforward(f, c)
            for h in list(G.hom_group(W, U))[:3]:
                assert X.class_pullback_geometric(h, c) == X.class_pullback(h, c)
                checked += 1
    assert checked > 100


def test_pushout_rejects_wrong_domain():
    with pytest.raises(GroupMismatch):
        X.pushout(Z4.identity(), E1)


def test_baer_sum_examples():
    c = cls(Z2, Z2, [1])
    assert X.classify(X.baer_sum(E1, E1)).is_zero()
    split = X.split_extension(Z2, Z2)
    assert X.classify(X.baer_sum(E1, split)) == c


def test_baer_sum_on_Z4_is_Z4_addition():
    classes = list(X.all_classes(Z4, Z4))
    assert len(classes) == 4
    gen = cls(Z4, Z4, [1])
    E = X.realize(gen)
    multiples = [X.ExtClass.zero(Z4, Z4)]
    acc = X.split_extension(Z4, Z4)
    for _ in range(3):
        acc = X.baer_sum(acc, E)
        multiples.append(X.classify(acc))
    assert sorted(multiples, key=lambda c: c.cosets) == sorted(classes, key=lambda c: c.cosets)
    for a in range(4):
        for b in range(4):
            s = X.classify(X.baer_sum(X.realize(multiples[a]), X.realize(multiples[b])))
            assert s == multiples[(a + b) % 4]


@pytest.mark.parametrize("U,V", [(Z2, Z4), (Z4, Z2), (G.parse_group("Z/2+Z/2"), Z2), (Z2, G.Z), (G.cyclic(3), G.cyclic(6))],
                         ids=str)
def test_baer_sum_is_class_addition(U, V):
    classes = list(X.all_classes(U, V))
    for a in classes:
        for b in classes:
            assert X.classify(X.baer_sum(X.realize(a), X.realize(b))) == a + b


# -- Phi and the six-term sequence --------------------------------------------------------


def test_phi_examples():
    assert X.phi(E1) == G.two_torsion(Z2).group.identity()
    assert X.phi(X.split_extension(Z4, G.parse_group("Z/2+Z/4"))).is_zero()
    E = X.realize(X.ExtClass.zero(G.Z, Z4))
    assert X.phi(E).domain.is_trivial


@pytest.mark.parametrize("U,V", SMALL_PAIRS, ids=lambda g: str(g))
def test_phi_matches_element_search(U, V):
    for E in brute_extensions(U, V)[:40]:
        assert X.phi(E) == brute_phi(E)
    for c in X.all_classes(U, V):
        E = X.realize(c)
        assert X.phi(E) == brute_phi(E) == X.phi(X.forget_construction(E), alternative=True)


def test_phi_iso_report_small():
    for U in G.groups_up_to_order(8):
        for V in G.groups_up_to_order(8):
            assert all(X.phi_isomorphism_report(U, V).values())


def test_six_term_examples():
    st = X.six_term(E1)
    assert all(str(g) == "Z/2" for g in st.groups())
    assert st.is_exact()
    E = X.Extension(Z2, Z8, Z4, G.make_hom(Z2, Z8, [[4]]), G.make_hom(Z8, Z4, [[1]]))
    st = X.six_term(E)
    assert all(str(g) == "Z/2" for g in st.groups()) and st.is_exact()
    st = X.six_term(X.split_extension(Z4, Z2))
    assert st.phi.is_zero() and st.is_exact()


# -- the middle map -----------------------------------------------------------------------


def test_middle_fill_examples():
    one = Z2.identity()
    g = X.middle_fill(E1, E1, one, one)
    assert g is not None and g.is_isomorphism()
    assert X.middle_fill(E1, E1, one, Z2.zero_map(Z2)) is None


def test_middle_fill_agrees_with_brute_search():
    reps = [X.realize(c) for U in (Z2, Z4) for V in (Z2, Z4) for c in X.all_classes(U, V)]
    for E in reps:
        for F in reps:
            for f in oracle.brute_homs(E.V, F.V):
                for h in oracle.brute_homs(E.U, F.U):
                    brute = any(g @ E.i == F.i @ f and F.p @ g == h @ E.p for g in oracle.brute_homs(E.M, F.M))
                    assert (X.middle_fill(E, F, f, h) is not None) == brute


def test_middle_report_on_small_pairs():
    reps = [X.realize(c) for U in (Z2, Z4) for V in (Z2, Z4) for c in X.all_classes(U, V)]
    for E in reps:
        for F in reps:
            assert X.middle_report(E, F).ok


def test_orbit_representatives_cover_all_classes():
    for U, V in [(Z4, Z4), (G.parse_group("Z/2+Z/2"), Z4), (Z8, G.parse_group("Z/2+Z/4"))]:
        reps = X.ext_orbit_representatives(U, V)
        assert len(reps) <= X.ext_order(U, V)
        # every class is equivalent to a representative under automorphisms
        seen = set(reps)
        frontier = list(reps)
        while frontier:
            c = frontier.pop()
            for a in G.automorphism_generators(U):
                d = X.class_pullback(a, c)
                if d not in seen:
                    seen.add(d)
                    frontier.append(d)
            for b in G.automorphism_generators(V):
                d = X.class_pushforward(b, c)
                if d not in seen:
                    seen.add(d)
                    frontier.append(d)
        assert seen == set(X.all_classes(U, V))
