import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etadiag import groups as G
from etadiag import oracle
from etadiag.errors import GroupMismatch, IllDefined, InfiniteGroup, ParseError

Z2, Z4 = G.cyclic(2), G.cyclic(4)
SMALL = G.groups_up_to_order(8)


# -- literals and enumeration -------------------------------------------------------------


@pytest.mark.parametrize("lit,canon", [
    ("Z/4+Z/2", "Z/2+Z/4"), ("Z/6", "Z/6"), ("Z/2+Z/3", "Z/6"), ("Z+Z/2", "Z/2+Z"),
    ("0", "0"), ("Z/4+Z/6", "Z/2+Z/12"), ("0+Z/3", "Z/3"),
])
def test_normalize(lit, canon):
    assert str(G.parse_group(lit)) == canon


@pytest.mark.parametrize("lit", ["", "Z/", "Z/0", "Z/1", "Q", "Z/2+", "Z/-3", "Z/x"])
def test_bad_literals(lit):
    with pytest.raises(ParseError):
        G.parse_group(lit)


def test_groups_of_order_counts():
    # number of abelian groups of order n = product of partition numbers of the exponents
    expected = {1: 1, 2: 1, 4: 2, 8: 3, 12: 2, 16: 5, 36: 4, 32: 7}
    for n, k in expected.items():
        gs = G.groups_of_order(n)
        assert len(gs) == k
        assert len(set(gs)) == k and all(g.order == n for g in gs)


def test_elements():
    assert len(list(G.parse_group("Z/2+Z/2").elements())) == 4
    assert len(list(G.TRIVIAL.elements())) == 1
    with pytest.raises(InfiniteGroup):
        list(G.Z.elements())


# -- homomorphisms ------------------------------------------------------------------------


def test_make_hom_examples():
    with pytest.raises(IllDefined) as info:
        G.make_hom(Z2, Z4, [[1]])
    assert (info.value.i, info.value.j) == (0, 0)
    assert G.make_hom(Z2, Z4, [[2]])(Z2.element([1])).coeffs == (2,)
    proj = G.make_hom(G.Z, Z2, [[1]])
    assert proj.is_surjective()


def test_make_hom_shape_mismatch():
    with pytest.raises(GroupMismatch):
        G.make_hom(Z2, Z4, [[1, 2]])


@pytest.mark.parametrize("U", SMALL)
@pytest.mark.parametrize("V", SMALL)
def test_hom_group_order_against_brute_force(U, V):
    assert len(G.hom_group(U, V)) == len(oracle.brute_homs(U, V))


def test_hom_group_enumerates_every_matrix_once():
    for U, V in [(Z4, G.cyclic(6)), (G.parse_group("Z/2+Z/4"), Z4), (Z4, G.parse_group("Z/2+Z/2"))]:
        ours = sorted(f.matrix for f in G.hom_group(U, V))
        assert ours == sorted(f.matrix for f in oracle.brute_homs(U, V))


def test_hom_group_examples():
    assert str(G.hom_group(Z4, G.cyclic(6)).group) == "Z/2"
    for V in (Z2, G.parse_group("Z/2+Z/4"), G.Z):
        assert G.hom_group(G.Z, V).group == V
    assert G.hom_group(Z2, G.Z).group.is_trivial


def test_hom_group_coordinates_are_additive():
    hg = G.hom_group(G.parse_group("Z/2+Z/4"), G.parse_group("Z/4+Z/8"))
    rng = random.Random(1)
    homs = list(hg)
    for _ in range(50):
        f, g = rng.choice(homs), rng.choice(homs)
        assert hg.from_coords(hg.group.reduce(a + b for a, b in zip(hg.to_coords(f), hg.to_coords(g)))) == f + g


# -- kernels, images, cokernels against element enumeration --------------------------------


def _elements_set(U):
    return {x.coeffs for x in U.elements()}


def _check_kernel(f):
    K = G.kernel(f)
    brute = {x.coeffs for x in f.domain.elements() if f(x).is_zero()}
    assert K.group.order == len(brute)
    assert K.inclusion.is_injective()
    assert {K.inclusion(k).coeffs for k in K.group.elements()} == brute


def _check_cokernel(f):
    Q = G.cokernel(f)
    img = {f(x).coeffs for x in f.domain.elements()}
    assert Q.group.order * len(img) == f.codomain.order
    assert Q.projection.is_surjective()
    assert {y for y in _elements_set(f.codomain) if Q.projection(y).is_zero()} == img


def _random_maps(n, seed):
    rng = random.Random(seed)
    gs = G.groups_up_to_order(12)
    out = []
    for _ in range(n):
        U, V = rng.choice(gs), rng.choice(gs)
        out.append(rng.choice(list(oracle.brute_homs(U, V)) if U.order * V.order <= 64 else list(G.hom_group(U, V))))
    return out


@pytest.mark.parametrize("f", _random_maps(60, 3))
def test_kernel_and_cokernel_by_enumeration(f):
    _check_kernel(f)
    _check_cokernel(f)
    assert G.image(f).group.order == oracle.brute_subgroup_order(f)


def test_kernel_examples():
    K = G.kernel(G.make_hom(Z4, Z2, [[1]]))
    assert str(K.group) == "Z/2" and K.inclusion.matrix == ((2,),)
    assert G.kernel(G.cyclic(6).identity()).group.is_trivial
    assert G.kernel(G.Z.multiplication(2)).group.is_trivial


def test_cokernel_examples():
    assert str(G.cokernel(G.Z.multiplication(2)).group) == "Z/2"
    assert str(G.cokernel(G.make_hom(Z2, Z4, [[2]])).group) == "Z/2"
    assert str(G.cokernel(G.TRIVIAL.zero_map(G.cyclic(6))).group) == "Z/6"


def test_kernel_of_map_out_of_Z():
    # (a, n) -> 2a + 2n has kernel {a = n mod 2}, generated by (1, 1)
    f = G.make_hom(G.parse_group("Z/2+Z"), Z4, [[2, 2]])
    K = G.kernel(f)
    assert str(K.group) == "Z"
    assert K.inclusion.matrix in (((1,), (1,)), ((1,), (-1,)))


@pytest.mark.parametrize("U", SMALL + [G.parse_group("Z/4+Z/3"), G.Z, G.TRIVIAL])
def test_two_torsion_and_mod_two(U):
    T, Q = G.two_torsion(U), G.mod_two(U)
    if U.is_finite:
        brute = {x.coeffs for x in U.elements() if (2 * x).is_zero()}
        assert T.group.order == len(brute)
        assert Q.group.order * len({(2 * x).coeffs for x in U.elements()}) == U.order
    for g in T.group.invariant_factors:
        assert g == 2
    for g in Q.group.invariant_factors:
        assert g == 2


def test_two_torsion_examples():
    U = G.parse_group("Z/4+Z/3")
    assert str(G.two_torsion(U).group) == "Z/2" and str(G.mod_two(U).group) == "Z/2"
    assert G.two_torsion(G.Z).group.is_trivial and str(G.mod_two(G.Z).group) == "Z/2"
    assert G.two_torsion(G.TRIVIAL).group.is_trivial and G.mod_two(G.TRIVIAL).group.is_trivial


# -- algebraic laws -----------------------------------------------------------------------

groups_st = st.sampled_from(SMALL)


@settings(max_examples=80, deadline=None)
@given(groups_st, groups_st, groups_st, st.randoms(use_true_random=False))
def test_composition_is_bilinear(U, V, W, rnd):
    f1, f2 = rnd.choice(oracle.brute_homs(U, V)), rnd.choice(oracle.brute_homs(U, V))
    g = rnd.choice(oracle.brute_homs(V, W))
    assert g @ (f1 + f2) == g @ f1 + g @ f2
    for x in U.elements():
        assert (g @ f1)(x) == g(f1(x))


@settings(max_examples=60, deadline=None)
@given(groups_st)
def test_automorphism_generators_generate(U):
    gens = G.automorphism_generators(U)
    seen = {U.identity().matrix}
    frontier = [U.identity()]
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = g @ a
            if b.matrix not in seen:
                seen.add(b.matrix)
                frontier.append(b)
    brute = [f for f in oracle.brute_homs(U, U) if len({f(x).coeffs for x in U.elements()}) == U.order]
    assert len(seen) == len(brute)


def test_is_exact_at_and_short_exact():
    i, p = G.make_hom(Z2, Z4, [[2]]), G.make_hom(Z4, Z2, [[1]])
    assert G.is_exact_at(i, p) and G.is_short_exact(i, p)
    assert not G.is_short_exact(G.make_hom(Z2, Z4, [[0]]), p)


def test_inverse():
    a = G.make_hom(G.cyclic(5), G.cyclic(5), [[2]])
    assert (a.inverse() @ a) == G.cyclic(5).identity()


def test_direct_sum_pack_unpack():
    ds = G.direct_sum(Z2, Z4, G.Z)
    for parts in itertools.product([(0,), (1,)], [(0,), (3,)], [(5,), (-2,)]):
        x = ds.pack(parts)
        assert tuple(y.coeffs for y in ds.unpack(x)) == tuple(G.FgGroup.reduce(U, p) for U, p in zip((Z2, Z4, G.Z), parts))
