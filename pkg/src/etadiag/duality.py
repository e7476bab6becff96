"""Character duality ``J`` and the self-adjoint duality ``Delta`` on EEDs.

Character duals
    For finite ``U = Z/d_1 + ... + Z/d_k`` we identify ``U* = Hom(U, Q/Z)``
    with ``U`` through the pairing ``<x, y> = sum x_i y_i / d_i (mod 1)``.
    The dual of ``f: U -> V`` with matrix ``M`` then has matrix
    ``M*[j][i] = M[i][j] d_j / e_i``.

Delta, abstractly
    ``Delta(N)(x)`` is the group of diagram morphisms ``N -> F_{Delta x}``
    and ``Delta(N)(u)`` is postcomposition with ``F_{Delta u}``.

Delta, explicitly
    ``B' = Hom(B, Z/4)``,
    ``A' = {(g: B -> Z/2, h: C -> Z) : h mod 2 = g chi}``,
    ``C' = {(f: A -> Z, g: B -> Z/2) : f mod 2 = g chi eta}``, with
    ``psi'(g) = (s g, 0)``, ``eta'(g, h) = (0, g)``, ``chi'(f, g) = t g``.

The two descriptions are related by :func:`delta_comparison`, which sends
``(g, h)`` in ``A'`` to the morphism ``(0, g, h): N -> F_c``, ``(f, g)`` in
``C'`` to ``(f, g, g chi): N -> F_a`` and ``g`` in ``B'`` to
``(h eta, g, h): N -> F_b`` where ``t h = g chi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import groups as G
from .cj import OBJECTS, delta_obj, representable, representable_mor, CjMorphism
from .diagrams import (
    DiagramMorphism, ExtEtaDiagram, MorphismGroup, morphism_group, validate,
)
from .errors import GroupMismatch, InfiniteGroup, InfiniteHomSet
from .groups import FgGroup, GroupElement, Homomorphism

Z2 = G.cyclic(2)
Z4 = G.cyclic(4)
#: the unique nonzero map Z/4 -> Z/2
S_MAP = G.make_hom(Z4, Z2, [[1]])
#: the unique nonzero map Z/2 -> Z/4
T_MAP = G.make_hom(Z2, Z4, [[2]])
_PROJ = G.make_hom(G.Z, Z2, [[1]])


# -- character duality ----------------------------------------------------------------


def _require_finite(*groups: FgGroup) -> None:
    for U in groups:
        if not U.is_finite:
            raise InfiniteGroup(f"{U} is infinite; its character dual is not finitely generated")


def character_dual(U: FgGroup) -> FgGroup:
    _require_finite(U)
    return U


def pairing(U: FgGroup, x, y) -> Fraction:
    """``<x, y>`` in ``Q/Z``, returned as a fraction in ``[0, 1)``."""
    _require_finite(U)
    xs, ys = U.reduce(getattr(x, "coeffs", x)), U.reduce(getattr(y, "coeffs", y))
    return sum((Fraction(a * b, d) for a, b, d in zip(xs, ys, U.invariant_factors)), Fraction(0)) % 1


def dual_map(f: Homomorphism) -> Homomorphism:
    """``f*: V* -> U*``, characterized by ``<f x, y> = <x, f* y>``."""
    U, V = f.domain, f.codomain
    _require_finite(U, V)
    d, e = U.invariant_factors, V.invariant_factors
    m = [[f.matrix[i][j] * d[j] // e[i] for i in range(V.ngens)] for j in range(U.ngens)]
    return Homomorphism(V, U, tuple(map(tuple, m)))


def evaluation_unit(U: FgGroup) -> Homomorphism:
    """``U -> U**``, ``x -> <-, x>``, recovered coordinatewise from the pairing."""
    _require_finite(U)
    cols = []
    for x in U.generators():
        # the functional y -> <y, x> on U* has coordinates d_i <e_i, x>
        cols.append(tuple(int(pairing(U, e.coeffs, x) * d) for e, d in zip(U.generators(), U.invariant_factors)))
    return Homomorphism(U, U, tuple(zip(*cols)) if cols else ())


def j_dual(N: ExtEtaDiagram) -> ExtEtaDiagram:
    """``(B* -chi*-> C* -eta*-> A* -psi*-> B*)``, read as an EED with A = C*, C = A*."""
    _require_finite(N.A, N.B, N.C)
    return ExtEtaDiagram(A=N.C, B=N.B, C=N.A, eta=dual_map(N.eta), chi=dual_map(N.psi), psi=dual_map(N.chi))


def j_dual_mor(m: DiagramMorphism) -> DiagramMorphism:
    """``J(f, g, h) = (h*, g*, f*): J(N') -> J(N)``."""
    return DiagramMorphism(j_dual(m.target), j_dual(m.source),
                           f=dual_map(m.h), g=dual_map(m.g), h=dual_map(m.f))


def j_double_dual_unit(N: ExtEtaDiagram) -> DiagramMorphism:
    JJ = j_dual(j_dual(N))
    unit = DiagramMorphism(N, JJ, f=evaluation_unit(N.A), g=evaluation_unit(N.B), h=evaluation_unit(N.C))
    assert unit.is_valid() and unit.is_isomorphism()
    return unit


# -- Delta, abstract ---------------------------------------------------------------------


@dataclass(frozen=True)
class AbstractDelta:
    """``Delta(N)`` with the morphism groups that realize its values."""

    N: ExtEtaDiagram
    diagram: ExtEtaDiagram
    values: dict[str, MorphismGroup] = field(hash=False, compare=False)


def _cj(x: str, y: str, k: int = 1) -> CjMorphism:
    return CjMorphism(x, y, k)


@lru_cache(maxsize=4096)
def delta_abstract_data(N: ExtEtaDiagram) -> AbstractDelta:
    validate(N)
    vals = {x: morphism_group(N, representable(delta_obj(x))) for x in OBJECTS}
    # Delta(N)(u) for u: x -> y is postcomposition with F_{Delta u}: F_{Delta y} -> F_{Delta x}
    psi = vals["b"].postcompose(vals["a"], representable_mor(_cj("b", "c")))   # Delta(rho) = beta
    eta = vals["a"].postcompose(vals["c"], representable_mor(_cj("c", "a")))   # Delta(eta) = eta
    chi = vals["c"].postcompose(vals["b"], representable_mor(_cj("a", "b")))   # Delta(beta) = rho
    D = ExtEtaDiagram(vals["a"].group, vals["b"].group, vals["c"].group, eta, chi, psi)
    return AbstractDelta(N, D, vals)


def delta_dual_abstract(N: ExtEtaDiagram) -> ExtEtaDiagram:
    """``Delta(N)(x) = EED(N, F_{Delta x})``.

    Morphism groups are solved as integer congruence systems, so this also
    runs when some group of ``N`` has a Z summand.
    """
    return delta_abstract_data(N).diagram


def delta_abstract_mor(m: DiagramMorphism) -> DiagramMorphism:
    """``Delta(m): Delta(N') -> Delta(N)`` by precomposition with ``m``."""
    src, dst = delta_abstract_data(m.target), delta_abstract_data(m.source)
    comps = {k: src.values[x].precompose(dst.values[x], m) for x, k in zip("abc", "fgh")}
    return DiagramMorphism(src.diagram, dst.diagram, **comps)


# -- Delta, explicit --------------------------------------------------------------------


@dataclass(frozen=True)
class PairSpace:
    """A subgroup of ``Hom(X1, Y1) + Hom(X2, Y2)`` cut out by a congruence."""

    group: FgGroup
    homs: tuple[G.HomGroup, G.HomGroup]
    total: G.DirectSum
    inclusion: Homomorphism

    def decode(self, v) -> tuple[Homomorphism, Homomorphism]:
        p, q = self.total.unpack(self.inclusion(v))
        return self.homs[0].from_coords(p), self.homs[1].from_coords(q)

    def encode(self, pair: tuple[Homomorphism, Homomorphism]) -> tuple[int, ...]:
        y = self.total.pack([hg.to_coords(m) for hg, m in zip(self.homs, pair)])
        x = G.preimage(self.inclusion, y)
        if x is None:
            raise GroupMismatch("pair violates the defining congruence")
        return x.coeffs


def _pair_space(h1: G.HomGroup, h2: G.HomGroup, target: G.HomGroup, defect) -> PairSpace:
    total = G.direct_sum(h1.group, h2.group)
    D = G.induced_map(
        total.group, target.group,
        lambda v: tuple(hg.from_coords(p) for hg, p in zip((h1, h2), total.unpack(v))),
        lambda pair: defect(*pair),
        target.to_coords,
    )
    K, inc = G.kernel(D)
    return PairSpace(K, (h1, h2), total, inc)


@dataclass(frozen=True)
class ExplicitDelta:
    N: ExtEtaDiagram
    diagram: ExtEtaDiagram
    A_space: PairSpace = field(compare=False)
    B_space: G.HomGroup = field(compare=False)
    C_space: PairSpace = field(compare=False)


@lru_cache(maxsize=4096)
def delta_explicit_data(N: ExtEtaDiagram) -> ExplicitDelta:
    validate(N)
    A, B, C = N.A, N.B, N.C
    Bp = G.hom_group(B, Z4)
    Ap = _pair_space(G.hom_group(B, Z2), G.hom_group(C, G.Z), G.hom_group(C, Z2),
                     lambda g, h: _PROJ @ h - g @ N.chi)
    chi_eta = N.chi @ N.eta
    Cp = _pair_space(G.hom_group(A, G.Z), G.hom_group(B, Z2), G.hom_group(A, Z2),
                     lambda f, g: _PROJ @ f - g @ chi_eta)
    zero_CZ, zero_AZ = C.zero_map(G.Z), A.zero_map(G.Z)
    psi = G.induced_map(Bp.group, Ap.group, Bp.from_coords, lambda g: (S_MAP @ g, zero_CZ), Ap.encode)
    eta = G.induced_map(Ap.group, Cp.group, Ap.decode, lambda gh: (zero_AZ, gh[0]), Cp.encode)
    chi = G.induced_map(Cp.group, Bp.group, Cp.decode, lambda fg: T_MAP @ fg[1], Bp.to_coords)
    D = ExtEtaDiagram(Ap.group, Bp.group, Cp.group, eta, chi, psi)
    return ExplicitDelta(N, D, Ap, Bp, Cp)


def delta_dual_explicit(N: ExtEtaDiagram) -> ExtEtaDiagram:
    return delta_explicit_data(N).diagram


def delta_explicit_mor(m: DiagramMorphism) -> DiagramMorphism:
    """``Delta(f, g, h)``: precompose every pair component with the matching map."""
    src, dst = delta_explicit_data(m.target), delta_explicit_data(m.source)
    fa = G.induced_map(src.diagram.A, dst.diagram.A, src.A_space.decode,
                       lambda gh: (gh[0] @ m.g, gh[1] @ m.h), dst.A_space.encode)
    fb = G.induced_map(src.diagram.B, dst.diagram.B, src.B_space.from_coords,
                       lambda g: g @ m.g, dst.B_space.to_coords)
    fc = G.induced_map(src.diagram.C, dst.diagram.C, src.C_space.decode,
                       lambda fg: (fg[0] @ m.f, fg[1] @ m.g), dst.C_space.encode)
    return DiagramMorphism(src.diagram, dst.diagram, f=fa, g=fb, h=fc)


def delta_comparison(N: ExtEtaDiagram) -> DiagramMorphism:
    """The natural isomorphism from the explicit to the abstract ``Delta(N)``."""
    ex, ab = delta_explicit_data(N), delta_abstract_data(N)
    Fa, Fb, Fc = representable("a"), representable("b"), representable("c")

    def from_A(gh):
        g, h = gh
        return DiagramMorphism(N, Fc, f=N.A.zero_map(Fc.A), g=g, h=h)

    def from_C(fg):
        f, g = fg
        return DiagramMorphism(N, Fa, f=f, g=g, h=g @ N.chi)

    def from_B(g):
        h = G.lift_through(T_MAP, g @ N.chi)
        return DiagramMorphism(N, Fb, f=h @ N.eta, g=g, h=h)

    comps = {
        "f": G.induced_map(ex.diagram.A, ab.diagram.A, ex.A_space.decode, from_A, ab.values["a"].encode),
        "g": G.induced_map(ex.diagram.B, ab.diagram.B, ex.B_space.from_coords, from_B, ab.values["b"].encode),
        "h": G.induced_map(ex.diagram.C, ab.diagram.C, ex.C_space.decode, from_C, ab.values["c"].encode),
    }
    return DiagramMorphism(ex.diagram, ab.diagram, **comps)


def delta_representable_iso(x: str) -> DiagramMorphism:
    """``F_{Delta x} -> Delta(F_x)``: ``v`` in ``J(y, Delta x)`` goes to ``F_{Delta v}``."""
    ab = delta_abstract_data(representable(x))
    target = representable(delta_obj(x))
    comps = {}
    for y, k in zip("abc", "fgh"):
        dom = target.at(y)
        comps[k] = G.induced_map(
            dom, ab.diagram.at(y),
            lambda v, y=y: CjMorphism(y, delta_obj(x), v[0] if v else 0),
            lambda v: representable_mor(CjMorphism(x, delta_obj(v.source), v.coeff)),
            ab.values[y].encode,
        )
    return DiagramMorphism(target, ab.diagram, **comps)


# -- unit and adjunction -------------------------------------------------------------------


def _cj_value(elem: GroupElement, x: str, y: str) -> int:  # noqa: ARG001
    """The coefficient of an element of ``J(x, y)`` (as a group with <= 1 generator)."""
    return elem.coeffs[0] if elem.coeffs else 0


def transpose(M: ExtEtaDiagram, N: ExtEtaDiagram, theta: DiagramMorphism, sign: int = 1) -> DiagramMorphism:
    """``theta: M -> Delta(N)`` to ``theta': N -> Delta(M)``.

    ``theta'_y(n)_x(m) = Delta(theta_x(m)_y(n))``: evaluate ``theta`` at ``m``
    to get a morphism ``N -> F_{Delta x}``, evaluate that at ``n`` to get an
    element of ``J(y, Delta x)``, and apply the involution to land in
    ``J(x, Delta y) = F_{Delta y}(x)``.  ``sign = -1`` composes the
    involution with negation, which is equally natural.
    """
    dM, dN = delta_abstract_data(M), delta_abstract_data(N)
    if (theta.source, theta.target) != (M, dN.diagram):
        raise GroupMismatch("theta must map M to Delta(N)")
    comps = {}
    for y, ky in zip("abc", "fgh"):
        Fy = representable(delta_obj(y))

        def build(n, y=y, Fy=Fy):
            inner = {}
            for x, kx in zip("abc", "fgh"):
                cols = []
                for mgen in M.at(x).generators():
                    phi = dN.values[x].decode(theta.component(x)(mgen))
                    k = sign * _cj_value(phi.component(y)(n), y, delta_obj(x))
                    cols.append((k,) * Fy.at(x).ngens)
                inner[kx] = Homomorphism(M.at(x), Fy.at(x), tuple(zip(*cols)) if cols else
                                         tuple(() for _ in range(Fy.at(x).ngens)))
            return DiagramMorphism(M, Fy, **inner)

        comps[ky] = G.induced_map(N.at(y), dM.diagram.at(y), lambda v: v, build, dM.values[y].encode)
    return DiagramMorphism(N, dM.diagram, **comps)


def delta_unit(N: ExtEtaDiagram, sign: int = 1) -> DiagramMorphism:
    """``kappa: N -> Delta(Delta(N))``, the transpose of the identity of ``Delta(N)``.

    Explicitly ``kappa_x(n)_y(phi) = Delta(phi_x(n))`` for ``phi`` in
    ``Delta(N)(y)``.  The involution on ``J`` is applied with coefficient
    ``sign``; both signs give natural maps and nothing singles one out.
    """
    D = delta_dual_abstract(N)
    return transpose(D, N, DiagramMorphism(D, D, f=D.A.identity(), g=D.B.identity(), h=D.C.identity()), sign)


@dataclass(frozen=True)
class AdjunctionReport:
    left: int
    right: int
    bijective: bool
    round_trip: bool

    def __bool__(self) -> bool:
        return self.bijective and self.round_trip and self.left == self.right


def delta_adjunction_check(M: ExtEtaDiagram, N: ExtEtaDiagram) -> AdjunctionReport:
    """Check that transposition ``EED(M, Delta N) -> EED(N, Delta M)`` is a bijection."""
    left = morphism_group(M, delta_dual_abstract(N))
    right = morphism_group(N, delta_dual_abstract(M))
    if not (left.group.is_finite and right.group.is_finite):
        raise InfiniteHomSet("adjunction check enumerates both hom-sets")
    images, round_trip = set(), True
    for theta in left:
        t = transpose(M, N, theta)
        if not t.is_valid():
            round_trip = False
            continue
        images.add(right.encode(t))
        round_trip &= transpose(N, M, t) == theta
    return AdjunctionReport(len(left), len(right), len(images) == len(left) == len(right), round_trip)
