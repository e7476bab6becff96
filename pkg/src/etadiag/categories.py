"""Constructions relating EEDs to simpler categories.

* ``construct_eeed_over``: an exact EED over any eta-diagram.
* ``H`` and the split Postnikov pair categories SPP and SPP+, which model the
  stratum ``eta = 0``.
* The equivalence between exact Moore diagrams and the EEDs whose ``eta`` is
  surjective with kernel ``2A``.
* ``classify_degenerate``: which structure maps or groups vanish, and the
  simpler object each degenerate case reduces to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import ext as X
from . import groups as G
from .diagrams import (
    DiagramMorphism, EtaDiagram, ExtEtaDiagram, MooreDiagram, chi_bar, eta_bar, identity,
    is_exact, phi_bar, pi, psi_bar, validate,
)
from .errors import GroupMismatch, NotExact, NotInEmdPrime
from .ext import ExtClass
from .groups import FgGroup, Homomorphism
from .snf import transpose


def construct_eeed_over(P: EtaDiagram) -> ExtEtaDiagram:
    """Exact ``N`` with ``pi(N) == P``.

    ``A[2]`` and ``C/2`` have exponent two, so the class whose ``j``-th coset
    is ``eta_bar(u_j)`` has ``Phi = eta_bar``; its middle group is ``B``.
    """
    validate(P)
    T, t_inc = G.two_torsion(P.A)
    Q, q_proj = G.mod_two(P.C)
    eb = eta_bar(P)
    c = ExtClass(T, Q, tuple(eb(g).coeffs for g in T.generators()))
    E = X.realize(c)
    assert X.phi(E) == eb
    chi = E.i @ q_proj
    psi = t_inc @ E.p
    N = ExtEtaDiagram(P.A, E.M, P.C, P.eta, chi, psi)
    validate(N)
    return N


# -- split Postnikov pairs --------------------------------------------------------


@dataclass(frozen=True)
class SppObject:
    A: FgGroup
    C: FgGroup


@dataclass(frozen=True)
class SppMorphism:
    """``(f, h, u)`` with ``u: A0[2] -> C1/2``."""

    source: SppObject
    target: SppObject
    f: Homomorphism
    h: Homomorphism
    u: Homomorphism

    def __post_init__(self):
        s, t = self.source, self.target
        if (self.f.domain, self.f.codomain) != (s.A, t.A) or (self.h.domain, self.h.codomain) != (s.C, t.C):
            raise GroupMismatch("f, h do not match the endpoints")
        if (self.u.domain, self.u.codomain) != (G.two_torsion(s.A).group, G.mod_two(t.C).group):
            raise GroupMismatch("u must map A0[2] to C1/2")


@dataclass(frozen=True)
class SppPlusMorphism:
    """``(f, h, u)`` with ``u`` a class in ``Ext(A0, C1)``."""

    source: SppObject
    target: SppObject
    f: Homomorphism
    h: Homomorphism
    u: ExtClass

    def __post_init__(self):
        s, t = self.source, self.target
        if (self.f.domain, self.f.codomain) != (s.A, t.A) or (self.h.domain, self.h.codomain) != (s.C, t.C):
            raise GroupMismatch("f, h do not match the endpoints")
        if (self.u.U, self.u.V) != (s.A, t.C):
            raise GroupMismatch("u must lie in Ext(A0, C1)")


def spp_identity(P: SppObject) -> SppMorphism:
    return SppMorphism(P, P, P.A.identity(), P.C.identity(),
                       G.two_torsion(P.A).group.zero_map(G.mod_two(P.C).group))


def spp_plus_identity(P: SppObject) -> SppPlusMorphism:
    return SppPlusMorphism(P, P, P.A.identity(), P.C.identity(), ExtClass.zero(P.A, P.C))


def spp_compose(m1: SppMorphism, m0: SppMorphism) -> SppMorphism:
    """``(f1 f0, h1 h0, (h1)_* u0 + (f0)^* u1)``."""
    if m0.target != m1.source:
        raise GroupMismatch("SPP morphisms are not composable")
    u = G.mod_two_map(m1.h) @ m0.u + m1.u @ G.two_torsion_map(m0.f)
    return SppMorphism(m0.source, m1.target, m1.f @ m0.f, m1.h @ m0.h, u)


def spp_plus_compose(m1: SppPlusMorphism, m0: SppPlusMorphism) -> SppPlusMorphism:
    if m0.target != m1.source:
        raise GroupMismatch("SPP+ morphisms are not composable")
    u = X.class_pushforward(m1.h, m0.u) + X.class_pullback(m0.f, m1.u)
    return SppPlusMorphism(m0.source, m1.target, m1.f @ m0.f, m1.h @ m0.h, u)


def spp_plus_to_spp(m: SppPlusMorphism) -> SppMorphism:
    """Replace the Ext component by its image under Phi."""
    return SppMorphism(m.source, m.target, m.f, m.h, X.phi(X.realize(m.u)))


def spp_hom_order(P0: SppObject, P1: SppObject) -> int | float:
    """``|Hom(A0, A1)| * |Hom(C0, C1)| * |Hom(A0[2], C1/2)|``."""
    return (G.hom_group(P0.A, P1.A).group.order * G.hom_group(P0.C, P1.C).group.order
            * G.hom_group(G.two_torsion(P0.A).group, G.mod_two(P1.C).group).group.order)


def spp_morphisms(P0: SppObject, P1: SppObject):
    for f in G.hom_group(P0.A, P1.A):
        for h in G.hom_group(P0.C, P1.C):
            for u in G.hom_group(G.two_torsion(P0.A).group, G.mod_two(P1.C).group):
                yield SppMorphism(P0, P1, f, h, u)


def H(A: FgGroup, C: FgGroup) -> ExtEtaDiagram:
    """``C/2 + A[2] -psi-> A -0-> C -chi-> C/2 + A[2]``."""
    Q, q = G.mod_two(C)
    T, t = G.two_torsion(A)
    s = G.direct_sum(Q, T)
    psi = t @ s.projections[1]
    chi = s.injections[0] @ q
    return ExtEtaDiagram(A, s.group, C, A.zero_map(C), chi, psi)


def H_mor(m: SppMorphism) -> DiagramMorphism:
    """``g(c + 2C0, a) = (h(c) + u(a) + 2C1, f(a))``."""
    P0, P1 = m.source, m.target
    N0, N1 = H(P0.A, P0.C), H(P1.A, P1.C)
    s0 = G.direct_sum(G.mod_two(P0.C).group, G.two_torsion(P0.A).group)
    s1 = G.direct_sum(G.mod_two(P1.C).group, G.two_torsion(P1.A).group)
    g = G.block_map(s0, s1, [[G.mod_two_map(m.h), m.u], [None, G.two_torsion_map(m.f)]])
    return DiagramMorphism(N0, N1, f=m.f, g=g, h=m.h)


def H_inverse(P0: SppObject, P1: SppObject, m: DiagramMorphism) -> SppMorphism:
    """Recover ``(f, h, u)`` from a morphism ``H(P0) -> H(P1)``."""
    s0 = G.direct_sum(G.mod_two(P0.C).group, G.two_torsion(P0.A).group)
    s1 = G.direct_sum(G.mod_two(P1.C).group, G.two_torsion(P1.A).group)
    u = s1.projections[0] @ m.g @ s0.injections[1]
    return SppMorphism(P0, P1, m.f, m.h, u)


# -- Moore diagrams ----------------------------------------------------------------


def standard_emd_literal(A: FgGroup) -> MooreDiagram:
    """``B = A/2 + A[2]``, ``phi(a) = (a + 2A, 0)``, ``psi(a + 2A, a') = a'``.

    This satisfies ``phi psi = 2`` only when ``A[2]`` lies in ``2A``, that is
    when no invariant factor of A is twice an odd number.  Kept for
    comparison; :func:`standard_emd` is the construction that always works.
    """
    Q, q = G.mod_two(A)
    T, t = G.two_torsion(A)
    s = G.direct_sum(Q, T)
    return MooreDiagram(A, s.group, s.injections[0] @ q, t @ s.projections[1])


def _moore_block(d: int) -> tuple[FgGroup, int, int]:
    """``(B, phi, psi)`` for one cyclic summand ``Z/d`` of A (``d = 0`` for Z).

    The maps are given as multiplication factors on generators; when B has
    two generators ``phi`` hits the first and ``psi`` reads the second.
    """
    if d == 0:
        return G.cyclic(2), 1, 0
    if d % 2:
        return G.TRIVIAL, 0, 0
    if d % 4 == 0:
        return G.FgGroup((2, 2)), 1, d // 2
    return G.cyclic(4), 2, d // 2


def standard_emd(A: FgGroup) -> MooreDiagram:
    """An exact Moore diagram with ``alpha = A``, built one cyclic summand at a time.

    For ``Z``, ``Z/d`` with ``d`` odd and ``Z/d`` with ``4 | d`` the block is
    the split one, ``B = Z/d/2 + Z/d[2]``.  For ``d = 2 (mod 4)`` the split
    block violates ``phi psi = 2`` and the block is ``Z/d -2-> Z/4 -d/2-> Z/d``.
    """
    sA = G.direct_sum(*(G.cyclic(d) for d in A.invariant_factors))
    blocks = [_moore_block(d) for d in A.invariant_factors]
    sB = G.direct_sum(*(b for b, _, _ in blocks))
    phis, psis = [], []
    for d, (Bk, ph, ps) in zip(A.invariant_factors, blocks):
        Ak = G.cyclic(d)
        if Bk.ngens == 2:
            phis.append(Homomorphism(Ak, Bk, ((ph,), (0,))))
            psis.append(Homomorphism(Bk, Ak, ((0, ps),)))
        else:
            phis.append(Homomorphism(Ak, Bk, tuple((ph,) * Ak.ngens for _ in range(Bk.ngens))))
            psis.append(Homomorphism(Bk, Ak, tuple((ps,) * Bk.ngens for _ in range(Ak.ngens))))
    n = len(blocks)
    phi = G.block_map(sA, sB, [[phis[i] if i == j else None for j in range(n)] for i in range(n)])
    psi = G.block_map(sB, sA, [[psis[i] if i == j else None for j in range(n)] for i in range(n)])
    assert sA.group == A
    return MooreDiagram(A, sB.group, phi, psi)


def emd_to_eeed(M: MooreDiagram) -> ExtEtaDiagram:
    """``(B -psi-> A -proj-> A/2 -phi_bar-> B)``."""
    validate(M)
    Q, q = G.mod_two(M.A)
    return ExtEtaDiagram(M.A, M.B, Q, q, phi_bar(M), M.psi)


def in_emd_prime(N: ExtEtaDiagram) -> bool:
    """Whether ``eta`` is surjective with kernel exactly ``2A``."""
    if not N.eta.is_surjective():
        return False
    return G.same_subgroup(G.kernel(N.eta).inclusion, N.A.multiplication(2))


def _require_emd_prime(N: ExtEtaDiagram) -> None:
    if not in_emd_prime(N):
        raise NotInEmdPrime("eta must be surjective with kernel 2A")


def eeed_to_emd(N: ExtEtaDiagram) -> MooreDiagram:
    """``(B -psi-> A -chi eta-> B)``."""
    _require_emd_prime(N)
    return MooreDiagram(N.A, N.B, N.chi @ N.eta, N.psi)


def emd_prime_iso(N: ExtEtaDiagram) -> DiagramMorphism:
    """``(1, 1, theta): N -> emd_to_eeed(eeed_to_emd(N))`` with ``theta: C = A/2``."""
    _require_emd_prime(N)
    target = emd_to_eeed(eeed_to_emd(N))
    theta = G.factor_through(N.eta, G.mod_two(N.A).projection)
    return DiagramMorphism(N, target, f=N.A.identity(), g=N.B.identity(), h=theta)


def emd_mor_to_eeed(m: DiagramMorphism) -> DiagramMorphism:
    """``E`` on morphisms: ``(f, g)`` goes to ``(f, g, f mod 2)``."""
    return DiagramMorphism(emd_to_eeed(m.source), emd_to_eeed(m.target),
                           f=m.f, g=m.g, h=G.mod_two_map(m.f))


def eeed_mor_to_emd(m: DiagramMorphism) -> DiagramMorphism:
    return DiagramMorphism(eeed_to_emd(m.source), eeed_to_emd(m.target), f=m.f, g=m.g)


@dataclass(frozen=True)
class EdHomBijection:
    """``ED(pi N, pi N') <-> Hom(A, A')`` for ``N`` in EMD'."""

    N: ExtEtaDiagram
    N2: ExtEtaDiagram

    def __post_init__(self):
        _require_emd_prime(self.N)

    def forward(self, m: DiagramMorphism) -> Homomorphism:
        return m.f

    def backward(self, f: Homomorphism) -> DiagramMorphism:
        h = G.factor_through(self.N.eta, self.N2.eta @ f)
        return DiagramMorphism(pi(self.N), pi(self.N2), f=f, h=h)


def ed_to_hom_bijection(N: ExtEtaDiagram, N2: ExtEtaDiagram) -> EdHomBijection:
    return EdHomBijection(N, N2)


# -- degenerate cases ------------------------------------------------------------------


DEGENERATION_TAGS = ("chi=0", "psi=0", "B=0", "C=0", "A=0", "eta=0")


@dataclass(frozen=True)
class Degenerations:
    tags: frozenset[str]
    reduced: dict[str, Any] = field(hash=False)


def eta_zero_splitting(N: ExtEtaDiagram) -> DiagramMorphism:
    """An isomorphism ``H(A, C) -> N`` when ``eta = 0`` (B is then elementary)."""
    if not N.eta.is_zero():
        raise GroupMismatch("eta is not zero")
    T = G.two_torsion(N.A).group
    cols = []
    for g in T.generators():
        b = G.preimage(psi_bar(N), g)
        if b is None:
            raise NotExact("psi does not map onto A[2]")
        cols.append(b.coeffs)
    sigma = Homomorphism(T, N.B, transpose(tuple(cols), ncols=N.B.ngens))
    HN = H(N.A, N.C)
    s = G.direct_sum(G.mod_two(N.C).group, T)
    g = s.from_components([chi_bar(N), sigma])
    return DiagramMorphism(HN, N, f=N.A.identity(), g=g, h=N.C.identity())


def classify_degenerate(N: ExtEtaDiagram) -> Degenerations:
    """Tag every vanishing among chi, psi, B, C, A, eta with its reduced object.

    Reduced objects: ``pi(N)`` for chi=0, psi=0 and B=0; ``A`` for C=0; ``C``
    for A=0; ``(SppObject(A, C), H(A, C) -> N)`` for eta=0.
    """
    if not is_exact(N):
        raise NotExact("classify_degenerate needs an exact diagram")
    tags, reduced = set(), {}
    if N.chi.is_zero():
        tags.add("chi=0")
        assert G.mod_two(N.C).group.is_trivial and psi_bar(N).is_isomorphism()
        reduced["chi=0"] = pi(N)
    if N.psi.is_zero():
        tags.add("psi=0")
        assert G.two_torsion(N.A).group.is_trivial and chi_bar(N).is_isomorphism()
        reduced["psi=0"] = pi(N)
    if N.B.is_trivial:
        tags.add("B=0")
        reduced["B=0"] = pi(N)
    if N.C.is_trivial:
        tags.add("C=0")
        reduced["C=0"] = N.A
    if N.A.is_trivial:
        tags.add("A=0")
        reduced["A=0"] = N.C
    if N.eta.is_zero():
        tags.add("eta=0")
        split = eta_zero_splitting(N)
        assert split.is_valid() and split.is_isomorphism()
        reduced["eta=0"] = (SppObject(N.A, N.C), split)
    return Degenerations(frozenset(tags), reduced)
