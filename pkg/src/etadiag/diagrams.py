"""Eta-diagrams, Moore diagrams and extended eta-diagrams, with their morphisms.

An extended eta-diagram (EED) is ``B -psi-> A -eta-> C -chi-> B`` with
``2 eta = 0``, ``psi chi = 0`` and ``chi eta psi = 2``.  It is exact when
``C/2 -chi-> B -psi-> A[2]`` is short exact.  A Moore diagram is
``(A, B, phi: A -> B, psi: B -> A)`` with ``psi phi = 0`` and ``phi psi = 2``.

Morphism sets are computed as kernels of linear maps between Hom groups, so
they come with a group structure; :class:`MorphismGroup` converts between
its coordinates and :class:`DiagramMorphism` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Union

from . import groups as G
from .errors import GroupMismatch, InfiniteHomSet, NotExact, RelationFailed
from .ext import Extension, phi as ext_phi, six_term
from .groups import FgGroup, Homomorphism


@dataclass(frozen=True)
class EtaDiagram:
    A: FgGroup
    C: FgGroup
    eta: Homomorphism

    kind = "eta"
    objects = ("a", "c")

    def __post_init__(self):
        if (self.eta.domain, self.eta.codomain) != (self.A, self.C):
            raise GroupMismatch("eta must map A to C")

    def at(self, x: str) -> FgGroup:
        return {"a": self.A, "c": self.C}[x]


@dataclass(frozen=True)
class MooreDiagram:
    A: FgGroup
    B: FgGroup
    phi: Homomorphism
    psi: Homomorphism

    kind = "moore"
    objects = ("a", "b")

    def __post_init__(self):
        if (self.phi.domain, self.phi.codomain) != (self.A, self.B):
            raise GroupMismatch("phi must map A to B")
        if (self.psi.domain, self.psi.codomain) != (self.B, self.A):
            raise GroupMismatch("psi must map B to A")

    def at(self, x: str) -> FgGroup:
        return {"a": self.A, "b": self.B}[x]


@dataclass(frozen=True)
class ExtEtaDiagram:
    A: FgGroup
    B: FgGroup
    C: FgGroup
    eta: Homomorphism
    chi: Homomorphism
    psi: Homomorphism

    kind = "eed"
    objects = ("a", "b", "c")

    def __post_init__(self):
        for name, m, src, dst in (("eta", self.eta, self.A, self.C),
                                  ("chi", self.chi, self.C, self.B),
                                  ("psi", self.psi, self.B, self.A)):
            if (m.domain, m.codomain) != (src, dst):
                raise GroupMismatch(f"{name} has the wrong domain or codomain")

    def at(self, x: str) -> FgGroup:
        return {"a": self.A, "b": self.B, "c": self.C}[x]

    @property
    def is_finite(self) -> bool:
        return self.A.is_finite and self.B.is_finite and self.C.is_finite


Diagram = Union[EtaDiagram, MooreDiagram, ExtEtaDiagram]


def zero_eed(A: FgGroup = G.TRIVIAL, B: FgGroup = G.TRIVIAL, C: FgGroup = G.TRIVIAL) -> ExtEtaDiagram:
    return ExtEtaDiagram(A, B, C, A.zero_map(C), C.zero_map(B), B.zero_map(A))


# -- relations and exactness -----------------------------------------------------


class InternalConsistencyError(AssertionError):
    """A consequence of valid relations failed: this is a bug, not bad input."""


def validate(d: Diagram) -> tuple[str, ...]:
    """Check the defining relations; return the names of everything checked.

    For EEDs the derived relations ``2 psi = 0``, ``2 chi = 0``, ``4 = 0`` on
    B and ``psi chi = 0`` on ``C/2 -> B -> A[2]`` are checked as well.
    """
    checked = []

    def need(name: str, ok: bool) -> None:
        if not ok:
            raise RelationFailed(name)
        checked.append(name)

    def derived(name: str, ok: bool) -> None:
        if not ok:
            raise InternalConsistencyError(f"derived relation {name} failed")
        checked.append(name)

    if isinstance(d, EtaDiagram):
        need("2eta=0", (2 * d.eta).is_zero())
    elif isinstance(d, MooreDiagram):
        need("psi.phi=0", (d.psi @ d.phi).is_zero())
        need("phi.psi=2", d.phi @ d.psi == d.B.multiplication(2))
    elif isinstance(d, ExtEtaDiagram):
        need("2eta=0", (2 * d.eta).is_zero())
        need("psi.chi=0", (d.psi @ d.chi).is_zero())
        need("chi.eta.psi=2", d.chi @ d.eta @ d.psi == d.B.multiplication(2))
        derived("2psi=0", (2 * d.psi).is_zero())
        derived("2chi=0", (2 * d.chi).is_zero())
        derived("4=0 on B", (4 * d.B.identity()).is_zero())
        derived("psibar.chibar=0", (psi_bar(d) @ chi_bar(d)).is_zero())
    else:
        raise TypeError(f"not a diagram: {d!r}")
    return tuple(checked)


def is_valid(d: Diagram) -> bool:
    try:
        validate(d)
    except RelationFailed:
        return False
    return True


def psi_bar(d: MooreDiagram | ExtEtaDiagram) -> Homomorphism:
    """``psi`` corestricted to ``B -> A[2]``."""
    return G.lift_through(G.two_torsion(d.A).inclusion, d.psi)


def chi_bar(d: ExtEtaDiagram) -> Homomorphism:
    """``chi`` factored through ``C/2 -> B``."""
    return G.factor_through(G.mod_two(d.C).projection, d.chi)


def phi_bar(d: MooreDiagram) -> Homomorphism:
    return G.factor_through(G.mod_two(d.A).projection, d.phi)


def eta_bar(d: EtaDiagram | ExtEtaDiagram) -> Homomorphism:
    """``A[2] -> A -> C -> C/2``."""
    return G.mod_two(d.C).projection @ d.eta @ G.two_torsion(d.A).inclusion


def is_exact(d: MooreDiagram | ExtEtaDiagram) -> bool:
    """Short exactness of ``A/2 -> B -> A[2]`` (Moore) or ``C/2 -> B -> A[2]``."""
    validate(d)
    left = phi_bar(d) if isinstance(d, MooreDiagram) else chi_bar(d)
    return G.is_short_exact(left, psi_bar(d))


def associated_extension(N: ExtEtaDiagram) -> Extension:
    """``C/2 -chi-> B -psi-> A[2]`` as an :class:`Extension`."""
    return Extension(G.mod_two(N.C).group, N.B, G.two_torsion(N.A).group, chi_bar(N), psi_bar(N))


@dataclass(frozen=True)
class PhiCheck:
    ok: bool
    counterexample: G.GroupElement | None = None
    six_term_exact: bool = True

    def __bool__(self) -> bool:
        return self.ok and self.six_term_exact


def eeed_phi_check(N: ExtEtaDiagram) -> PhiCheck:
    """Compare Phi of ``C/2 -> B -> A[2]`` with ``eta_bar``, elementwise."""
    if not is_exact(N):
        raise NotExact("eeed_phi_check needs an exact diagram")
    E = associated_extension(N)
    lhs, rhs = ext_phi(E), eta_bar(N)
    for g in lhs.domain.generators():
        if lhs(g) != rhs(g):
            return PhiCheck(False, g)
    return PhiCheck(True, None, six_term(E).is_exact())


# -- morphisms ---------------------------------------------------------------------


_SQUARES = {
    # (name, source map of d, component before, target map of d', component after)
    # encodes  comp_after . d_map == d'_map . comp_before
    "eta": (("eta", "a", "c"),),
    "moore": (("phi", "a", "b"), ("psi", "b", "a")),
    "eed": (("eta", "a", "c"), ("chi", "c", "b"), ("psi", "b", "a")),
}


@dataclass(frozen=True)
class DiagramMorphism:
    """Components keyed by object: ``f`` on A, ``g`` on B, ``h`` on C."""

    source: Diagram
    target: Diagram
    f: Homomorphism | None = None
    g: Homomorphism | None = None
    h: Homomorphism | None = None

    def __post_init__(self):
        if self.source.kind != self.target.kind:
            raise GroupMismatch("morphism between diagrams of different kinds")
        for x in ("a", "b", "c"):
            comp = self.component(x)
            if x in self.source.objects:
                if comp is None:
                    raise GroupMismatch(f"missing component at {x}")
                if (comp.domain, comp.codomain) != (self.source.at(x), self.target.at(x)):
                    raise GroupMismatch(f"component at {x} has the wrong ends")
            elif comp is not None:
                raise GroupMismatch(f"{self.source.kind} morphisms have no component at {x}")

    def component(self, x: str) -> Homomorphism | None:
        return {"a": self.f, "b": self.g, "c": self.h}[x]

    def components(self) -> dict[str, Homomorphism]:
        return {x: self.component(x) for x in self.source.objects}

    def failing_squares(self) -> list[str]:
        bad = []
        for name, x, y in _SQUARES[self.source.kind]:
            lhs = self.component(y) @ getattr(self.source, name)
            rhs = getattr(self.target, name) @ self.component(x)
            if lhs != rhs:
                bad.append(name)
        return bad

    def is_valid(self) -> bool:
        return not self.failing_squares()

    def __matmul__(self, other: "DiagramMorphism") -> "DiagramMorphism":
        if other.target != self.source:
            raise GroupMismatch("morphisms are not composable")
        comps = {k: self.component(x) @ other.component(x)
                 for x, k in zip("abc", "fgh") if x in self.source.objects}
        return DiagramMorphism(other.source, self.target, **comps)

    def __add__(self, other: "DiagramMorphism") -> "DiagramMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise GroupMismatch("morphisms are not parallel")
        comps = {k: self.component(x) + other.component(x)
                 for x, k in zip("abc", "fgh") if x in self.source.objects}
        return DiagramMorphism(self.source, self.target, **comps)

    def __neg__(self) -> "DiagramMorphism":
        comps = {k: -self.component(x) for x, k in zip("abc", "fgh") if x in self.source.objects}
        return DiagramMorphism(self.source, self.target, **comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components().values())

    def is_isomorphism(self) -> bool:
        return all(c.is_isomorphism() for c in self.components().values())


def identity(d: Diagram) -> DiagramMorphism:
    comps = {k: d.at(x).identity() for x, k in zip("abc", "fgh") if x in d.objects}
    return DiagramMorphism(d, d, **comps)


def zero_morphism(d: Diagram, e: Diagram) -> DiagramMorphism:
    comps = {k: d.at(x).zero_map(e.at(x)) for x, k in zip("abc", "fgh") if x in d.objects}
    return DiagramMorphism(d, e, **comps)


@dataclass(frozen=True)
class MorphismGroup:
    """All morphisms ``source -> target`` as a canonical abelian group."""

    source: Diagram
    target: Diagram
    group: FgGroup
    _homs: tuple[tuple[str, G.HomGroup], ...] = field(repr=False)
    _sum: G.DirectSum = field(repr=False)
    _inclusion: Homomorphism = field(repr=False)

    def decode(self, v: G.GroupElement | tuple[int, ...]) -> DiagramMorphism:
        parts = self._sum.unpack(self._inclusion(v))
        comps = {k: hg.from_coords(x) for (k, hg), x in zip(self._homs, parts)}
        return DiagramMorphism(self.source, self.target, **comps)

    def encode(self, m: DiagramMorphism) -> tuple[int, ...]:
        y = self._sum.pack([hg.to_coords(getattr(m, k)) for k, hg in self._homs])
        x = G.preimage(self._inclusion, y)
        if x is None:
            raise ValueError("not a morphism of diagrams")
        return x.coeffs

    def __iter__(self) -> Iterator[DiagramMorphism]:
        if not self.group.is_finite:
            raise InfiniteHomSet(f"morphism group is {self.group}")
        for v in self.group.vectors():
            yield self.decode(v)

    def __len__(self) -> int:
        if not self.group.is_finite:
            raise InfiniteHomSet(f"morphism group is {self.group}")
        return self.group.order

    def postcompose(self, other: "MorphismGroup", m: DiagramMorphism) -> Homomorphism:
        """``x -> m @ x`` as a homomorphism from this group to ``other``."""
        return G.induced_map(self.group, other.group, self.decode, lambda x: m @ x, other.encode)

    def precompose(self, other: "MorphismGroup", m: DiagramMorphism) -> Homomorphism:
        return G.induced_map(self.group, other.group, self.decode, lambda x: x @ m, other.encode)


@lru_cache(maxsize=16384)
def morphism_group(source: Diagram, target: Diagram) -> MorphismGroup:
    """Solve the commuting-square congruences for all morphisms at once."""
    if source.kind != target.kind:
        raise GroupMismatch("diagrams of different kinds")
    keys = [(x, k) for x, k in zip("abc", "fgh") if x in source.objects]
    homs = tuple((k, G.hom_group(source.at(x), target.at(x))) for x, k in keys)
    comp_sum = G.direct_sum(*(hg.group for _, hg in homs))
    comp_index = {x: n for n, (x, _) in enumerate(keys)}
    squares = _SQUARES[source.kind]
    sq_homs = [G.hom_group(getattr(source, name).domain, getattr(target, name).codomain)
               for name, _, _ in squares]
    sq_sum = G.direct_sum(*(hg.group for hg in sq_homs))

    def defect(parts):
        comps = {x: homs[comp_index[x]][1].from_coords(parts[comp_index[x]]) for x, _ in keys}
        out = []
        for (name, x, y), hg in zip(squares, sq_homs):
            d = comps[y] @ getattr(source, name) - getattr(target, name) @ comps[x]
            out.append(hg.to_coords(d))
        return sq_sum.pack(out).coeffs

    D = G.induced_map(comp_sum.group, sq_sum.group, comp_sum.unpack, defect, lambda v: v)
    K, inc = G.kernel(D)
    return MorphismGroup(source, target, K, homs, comp_sum, inc)


def hom_set(source: Diagram, target: Diagram) -> list[DiagramMorphism]:
    return list(morphism_group(source, target))


def find_isomorphism(source: Diagram, target: Diagram) -> DiagramMorphism | None:
    """A morphism whose components are all bijective, searched over the hom-set."""
    if source.kind != target.kind or any(source.at(x) != target.at(x) for x in source.objects):
        return None
    for m in morphism_group(source, target):
        if m.is_isomorphism():
            return m
    return None


def is_isomorphic(source: Diagram, target: Diagram) -> bool:
    return find_isomorphism(source, target) is not None


# -- the forgetful functor pi and the map xi ---------------------------------------------


def pi(N: ExtEtaDiagram) -> EtaDiagram:
    return EtaDiagram(N.A, N.C, N.eta)


def pi_mor(m: DiagramMorphism) -> DiagramMorphism:
    return DiagramMorphism(pi(m.source), pi(m.target), f=m.f, h=m.h)


def xi(N: ExtEtaDiagram, N2: ExtEtaDiagram, u: Homomorphism) -> DiagramMorphism:
    """The morphism ``(0, chi' u psi, 0)`` for ``u: A[2] -> C'/2``."""
    if (u.domain, u.codomain) != (G.two_torsion(N.A).group, G.mod_two(N2.C).group):
        raise GroupMismatch("u must map A[2] to C'/2")
    g = chi_bar(N2) @ u @ psi_bar(N)
    return DiagramMorphism(N, N2, f=N.A.zero_map(N2.A), g=g, h=N.C.zero_map(N2.C))


def xi_domain(N: ExtEtaDiagram, N2: ExtEtaDiagram) -> G.HomGroup:
    return G.hom_group(G.two_torsion(N.A).group, G.mod_two(N2.C).group)


def lift_along_pi(N: ExtEtaDiagram, N2: ExtEtaDiagram, m: DiagramMorphism) -> DiagramMorphism:
    """Extend an eta-diagram morphism ``(f, h)`` to ``(f, g, h)`` between exact EEDs."""
    if not (is_exact(N) and is_exact(N2)):
        raise NotExact("lift_along_pi needs exact diagrams")
    if (m.source, m.target) != (pi(N), pi(N2)) or not m.is_valid():
        raise GroupMismatch("expected a valid morphism pi(N) -> pi(N')")
    g = G.solve_hom(G.hom_group(N.B, N2.B), [
        (G.hom_group(N.C, N2.B), lambda g: g @ N.chi, N2.chi @ m.h),
        (G.hom_group(N.B, N2.A), lambda g: N2.psi @ g, m.f @ N.psi),
    ])
    if g is None:
        raise NotExact("no lift exists; the diagrams cannot both be exact")
    return DiagramMorphism(N, N2, f=m.f, g=g, h=m.h)


def lift_fiber(N: ExtEtaDiagram, N2: ExtEtaDiagram, m: DiagramMorphism) -> list[DiagramMorphism]:
    """All lifts of ``m``: one lift plus ``xi(u)`` for every ``u``."""
    base = lift_along_pi(N, N2, m)
    return [base + xi(N, N2, u) for u in xi_domain(N, N2)]
