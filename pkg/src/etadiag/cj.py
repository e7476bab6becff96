"""The three-object additive category J and its representable functors.

Objects are ``"a"``, ``"b"``, ``"c"``.  Every hom group is cyclic, so a
morphism is stored as one integer multiple of a fixed generator:

===========  =========  ==========
pair         group      generator
===========  =========  ==========
(x, x)       Z or Z/4   identity
(a, b)       Z/2        rho
(c, a)       Z/2        eta
(b, c)       Z/2        beta
(b, a)       Z/2        eta.beta
(c, b)       Z/2        rho.eta
(a, c)       0          --
===========  =========  ==========

An EED ``N`` is the contravariant functor with ``N(a), N(b), N(c) = A, B, C``
and ``N(rho) = psi``, ``N(eta) = eta``, ``N(beta) = chi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import groups as G
from .diagrams import DiagramMorphism, ExtEtaDiagram
from .errors import GroupMismatch
from .groups import FgGroup, GroupElement, Homomorphism

CjObject = Literal["a", "b", "c"]
OBJECTS: tuple[CjObject, ...] = ("a", "b", "c")

# invariant factor of J(x, y); 1 stands for the zero group
_ORDER = {
    ("a", "a"): 0, ("b", "b"): 4, ("c", "c"): 0, ("a", "c"): 1,
    ("a", "b"): 2, ("b", "a"): 2, ("b", "c"): 2, ("c", "a"): 2, ("c", "b"): 2,
}

GENERATOR_NAMES = {
    ("a", "a"): "1_a", ("b", "b"): "1_b", ("c", "c"): "1_c",
    ("a", "b"): "rho", ("c", "a"): "eta", ("b", "c"): "beta",
    ("b", "a"): "eta.beta", ("c", "b"): "rho.eta",
}

# gen(y, z) o gen(x, y) = _M[x, y, z] * gen(x, z) for pairwise distinct-or-not x, y, z
# whenever neither factor is an identity.  Derived from beta.rho = 0 and
# rho.eta.beta = 2.
_M = {
    ("a", "b", "a"): 0, ("a", "b", "c"): 0,
    ("b", "a", "b"): 2, ("b", "a", "c"): 0,
    ("b", "c", "a"): 1, ("b", "c", "b"): 2,
    ("c", "a", "b"): 1, ("c", "a", "c"): 0,
    ("c", "b", "a"): 0, ("c", "b", "c"): 0,
}


def _check_object(x: str) -> None:
    if x not in OBJECTS:
        raise GroupMismatch(f"unknown object {x!r} of J")


def cj_hom(x: CjObject, y: CjObject) -> FgGroup:
    _check_object(x)
    _check_object(y)
    n = _ORDER[x, y]
    return G.TRIVIAL if n == 1 else FgGroup((n,))


def _multiplier(x: str, y: str, z: str) -> int:
    if x == y or y == z:
        return 1
    if _ORDER[x, y] == 1 or _ORDER[y, z] == 1:
        return 0
    return _M[x, y, z]


def _reduce(x: str, y: str, k: int) -> int:
    n = _ORDER[x, y]
    return k if n == 0 else k % n


@dataclass(frozen=True)
class CjMorphism:
    source: CjObject
    target: CjObject
    coeff: int

    def __post_init__(self):
        _check_object(self.source)
        _check_object(self.target)
        object.__setattr__(self, "coeff", _reduce(self.source, self.target, int(self.coeff)))

    def __matmul__(self, other: "CjMorphism") -> "CjMorphism":
        return cj_compose(self, other)

    def __add__(self, other: "CjMorphism") -> "CjMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise GroupMismatch("morphisms of J are not parallel")
        return CjMorphism(self.source, self.target, self.coeff + other.coeff)

    def __rmul__(self, n: int) -> "CjMorphism":
        return CjMorphism(self.source, self.target, n * self.coeff)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __str__(self) -> str:
        name = GENERATOR_NAMES.get((self.source, self.target))
        if name is None or self.coeff == 0:
            return "0"
        return name if self.coeff == 1 else f"{self.coeff}*{name}"


def generator(x: CjObject, y: CjObject) -> CjMorphism:
    """The fixed generator of ``J(x, y)`` (the zero morphism for ``(a, c)``)."""
    return CjMorphism(x, y, 1)


def cj_identity(x: CjObject) -> CjMorphism:
    return CjMorphism(x, x, 1)


rho = generator("a", "b")
eta = generator("c", "a")
beta = generator("b", "c")


def cj_compose(g: CjMorphism, f: CjMorphism) -> CjMorphism:
    """``g o f``; requires ``f.target == g.source``."""
    if f.target != g.source:
        raise GroupMismatch(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
    x, y, z = f.source, f.target, g.target
    return CjMorphism(x, z, _multiplier(x, y, z) * f.coeff * g.coeff)


def all_morphisms(x: CjObject, y: CjObject, z_range: int = 4) -> list[CjMorphism]:
    """Every element of a finite hom group; ``-k..k`` with ``k = z_range`` for Z."""
    n = _ORDER[x, y]
    ks = range(-z_range, z_range + 1) if n == 0 else range(n)
    return [CjMorphism(x, y, k) for k in ks]


# -- the involution ------------------------------------------------------------------

_DELTA = {"a": "c", "b": "b", "c": "a"}


def delta_obj(x: CjObject) -> CjObject:
    _check_object(x)
    return _DELTA[x]


def delta_mor(u: CjMorphism) -> CjMorphism:
    """Contravariant: ``k * gen(x, y)`` goes to ``k * gen(Dy, Dx)``."""
    return CjMorphism(_DELTA[u.target], _DELTA[u.source], u.coeff)


# -- EEDs as functors --------------------------------------------------------------------


def _cyclic_map(dom: FgGroup, cod: FgGroup, k: int) -> Homomorphism:
    """Multiplication by ``k`` between groups with at most one generator."""
    return Homomorphism(dom, cod, tuple((k,) * dom.ngens for _ in range(cod.ngens)))


def evaluate(N: ExtEtaDiagram, u: CjMorphism) -> Homomorphism:
    """``N(u): N(y) -> N(x)`` for ``u: x -> y``."""
    x, y = u.source, u.target
    if x == y:
        base = N.at(x).identity()
    else:
        base = {
            ("a", "b"): N.psi,
            ("c", "a"): N.eta,
            ("b", "c"): N.chi,
            ("b", "a"): N.chi @ N.eta,
            ("c", "b"): N.eta @ N.psi,
            ("a", "c"): N.C.zero_map(N.A),
        }[x, y]
    return u.coeff * base


def representable(x: CjObject) -> ExtEtaDiagram:
    """``F_x = J(-, x)``, with structure maps given by precomposition."""
    _check_object(x)
    A, B, C = cj_hom("a", x), cj_hom("b", x), cj_hom("c", x)
    psi = _cyclic_map(B, A, _multiplier("a", "b", x))
    eta_ = _cyclic_map(A, C, _multiplier("c", "a", x))
    chi = _cyclic_map(C, B, _multiplier("b", "c", x))
    return ExtEtaDiagram(A, B, C, eta_, chi, psi)


def representable_mor(u: CjMorphism) -> DiagramMorphism:
    """``F_u: F_x -> F_y``, postcomposition ``v -> u o v``."""
    x, y = u.source, u.target
    comps = {}
    for w, key in zip("abc", "fgh"):
        comps[key] = _cyclic_map(cj_hom(w, x), cj_hom(w, y), u.coeff * _multiplier(w, x, y))
    return DiagramMorphism(representable(x), representable(y), **comps)


@dataclass(frozen=True)
class YonedaBijection:
    """``EED(F_x, N) <-> N(x)``: evaluate at ``1_x`` / act on an element."""

    x: CjObject
    N: ExtEtaDiagram

    def forward(self, m: DiagramMorphism) -> GroupElement:
        Fx = representable(self.x)
        if (m.source, m.target) != (Fx, self.N):
            raise GroupMismatch("morphism does not start at the representable")
        return m.component(self.x)(Fx.at(self.x).generators()[0])

    def backward(self, n: GroupElement | tuple[int, ...]) -> DiagramMorphism:
        """The morphism whose component at ``w`` sends ``v`` to ``N(v)(n)``."""
        n = self.N.at(self.x).element(n.coeffs if isinstance(n, GroupElement) else n)
        Fx = representable(self.x)
        comps = {}
        for w, key in zip("abc", "fgh"):
            img = evaluate(self.N, generator(w, self.x))(n).coeffs
            cod = self.N.at(w)
            comps[key] = Homomorphism(Fx.at(w), cod,
                                      tuple((img[i],) * Fx.at(w).ngens for i in range(cod.ngens)))
        return DiagramMorphism(Fx, self.N, **comps)

    def verify(self) -> bool:
        """Both round trips are identities and every image is a valid morphism (finite N)."""
        from .diagrams import morphism_group

        mg = morphism_group(representable(self.x), self.N)
        if len(mg) != self.N.at(self.x).order:
            return False
        for m in mg:
            if self.backward(self.forward(m)) != m:
                return False
        for n in self.N.at(self.x).elements():
            m = self.backward(n)
            if not m.is_valid() or self.forward(m) != n:
                return False
        return True


def yoneda_check(x: CjObject, N: ExtEtaDiagram) -> YonedaBijection:
    _check_object(x)
    return YonedaBijection(x, N)


def composition_table() -> list[tuple[str, str, str, int]]:
    """``(x, y, z, m)`` with ``gen(y, z) o gen(x, y) = m * gen(x, z)``, all 27 triples."""
    return [(x, y, z, cj_compose(generator(y, z), generator(x, y)).coeff)
            for x in OBJECTS for y in OBJECTS for z in OBJECTS]


def morphism_square() -> dict[str, DiagramMorphism]:
    """``F_beta: F_b -> F_c``, ``F_eta: F_c -> F_a`` and ``F_rho: F_a -> F_b``."""
    return {"beta": representable_mor(beta), "eta": representable_mor(eta),
            "rho": representable_mor(rho)}
