"""Finitely generated abelian groups in invariant-factor form.

A group is stored as its invariant factors ``(d_1, ..., d_k)``: nonzero
entries are at least 2 and form a divisibility chain, and zeros (infinite
cyclic summands) trail.  Canonicity makes isomorphism of groups a plain
equality test.

Elements are coefficient vectors against the standard generators, and a
homomorphism ``U -> V`` is an integer matrix whose entry ``(i, j)`` sends
generator ``j`` of ``U`` into factor ``i`` of ``V``.

>>> G = parse_group("Z/4+Z/2")
>>> str(G)
'Z/2+Z/4'
>>> str(hom_group(parse_group("Z/4"), parse_group("Z/6")).group)
'Z/2'
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from . import snf as _snf
from .errors import GroupMismatch, IllDefined, InfiniteGroup, ParseError

Vector = tuple[int, ...]


def _reduce(factors: Sequence[int], coeffs: Iterable[int]) -> Vector:
    return tuple(c % d if d else c for c, d in zip(coeffs, factors))


@dataclass(frozen=True)
class FgGroup:
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        seen_zero = False
        prev = None
        for d in fs:
            if d < 0 or d == 1:
                raise ValueError(f"bad invariant factor {d} in {fs}")
            if d == 0:
                seen_zero = True
                continue
            if seen_zero:
                raise ValueError(f"zero factors must trail: {fs}")
            if prev is not None and d % prev:
                raise ValueError(f"factors must form a divisibility chain: {fs}")
            prev = d

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FgGroup":
        """Canonical form of the direct sum of cyclic groups of the given orders.

        ``0`` stands for an infinite cyclic summand and ``1`` is ignored.
        """
        orders = tuple(int(d) for d in orders)
        return present(len(orders), tuple(_unit(len(orders), i, d) for i, d in enumerate(orders))).group

    def __len__(self) -> int:
        return len(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return "+".join("Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors)

    def __repr__(self) -> str:
        return f"FgGroup({str(self)!r})"

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self) -> int | float:
        """Cardinality, ``math.inf`` for infinite groups."""
        return math.prod(self.invariant_factors) if self.is_finite else math.inf

    @property
    def exponent(self) -> int:
        """Least positive n with nU = 0; 0 when U is infinite."""
        if not self.is_finite:
            return 0
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def reduce(self, coeffs: Iterable[int]) -> Vector:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.ngens:
            raise GroupMismatch(f"{len(coeffs)} coefficients for {self}")
        return _reduce(self.invariant_factors, coeffs)

    def element(self, coeffs: Iterable[int]) -> "GroupElement":
        return GroupElement(self, self.reduce(coeffs))

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def generators(self) -> list["GroupElement"]:
        return [GroupElement(self, _unit(self.ngens, i)) for i in range(self.ngens)]

    def elements(self) -> Iterator["GroupElement"]:
        for v in self.vectors():
            yield GroupElement(self, v)

    def vectors(self) -> Iterator[Vector]:
        """Coefficient vectors of all elements, in lexicographic order."""
        if not self.is_finite:
            raise InfiniteGroup(f"cannot enumerate {self}")
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def identity(self) -> "Homomorphism":
        return Homomorphism(self, self, _snf.identity(self.ngens))

    def zero_map(self, codomain: "FgGroup") -> "Homomorphism":
        return Homomorphism(self, codomain, _snf.zeros(codomain.ngens, self.ngens))

    def multiplication(self, n: int) -> "Homomorphism":
        return Homomorphism(self, self, tuple(tuple(n if i == j else 0 for j in range(self.ngens)) for i in range(self.ngens)))


def _unit(n: int, i: int, scale: int = 1) -> Vector:
    return tuple(scale if k == i else 0 for k in range(n))


TRIVIAL = FgGroup(())
Z = FgGroup((0,))


def cyclic(n: int) -> FgGroup:
    """``Z/n`` (``n = 0`` gives Z, ``n = 1`` the trivial group)."""
    if n == 1:
        return TRIVIAL
    return FgGroup((n,))


_TERM = re.compile(r"^(?:0|Z|Z/(\d+))$")


def parse_group(literal: str) -> FgGroup:
    """Parse ``0``, ``Z`` and ``Z/n`` terms joined by ``+`` into canonical form."""
    orders = []
    text = literal.replace(" ", "")
    if not text:
        raise ParseError("empty group literal")
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"bad group term {term!r} in {literal!r}")
        if term == "0":
            continue
        if term == "Z":
            orders.append(0)
            continue
        n = int(m.group(1))
        if n < 2:
            raise ParseError(f"Z/{n}: cyclic order must be at least 2")
        orders.append(n)
    return FgGroup.from_orders(orders)


@dataclass(frozen=True)
class GroupElement:
    parent: FgGroup
    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, "coeffs", self.parent.reduce(self.coeffs))

    def _check(self, other: "GroupElement") -> None:
        if other.parent != self.parent:
            raise GroupMismatch(f"elements of {self.parent} and {other.parent}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.parent, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.parent, tuple(-x for x in self.coeffs))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "GroupElement":
        return GroupElement(self.parent, tuple(n * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def order(self) -> int:
        """Additive order, 0 for elements of infinite order."""
        o = 1
        for c, d in zip(self.coeffs, self.parent.invariant_factors):
            if c == 0:
                continue
            if d == 0:
                return 0
            o = math.lcm(o, d // math.gcd(c, d))
        return o

    def __repr__(self) -> str:
        return f"{self.parent}{list(self.coeffs)}"


def _coords(x: GroupElement | Sequence[int]) -> Vector:
    return x.coeffs if isinstance(x, GroupElement) else tuple(x)


@dataclass(frozen=True)
class Homomorphism:
    """A well-defined group homomorphism given by an integer matrix.

    Construction reduces entries modulo the codomain factors and raises
    :class:`IllDefined` when a congruence fails.  ``g @ f`` is ``g o f``.
    """

    domain: FgGroup
    codomain: FgGroup
    matrix: _snf.Matrix = field(default=())

    def __post_init__(self):
        d, e = self.domain.invariant_factors, self.codomain.invariant_factors
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if not rows and e == ():
            rows = ()
        elif not rows and d == ():
            rows = tuple(() for _ in e)
        if len(rows) != len(e) or any(len(r) != len(d) for r in rows):
            raise GroupMismatch(
                f"matrix shape does not match {self.domain} -> {self.codomain}"
            )
        red = []
        for i, (ei, row) in enumerate(zip(e, rows)):
            for j, (dj, x) in enumerate(zip(d, row)):
                if dj == 0:
                    continue
                if (ei and (dj * x) % ei) or (not ei and x):
                    raise IllDefined(i, j, f"{dj}*{x} is not 0 mod {ei}")
            red.append(tuple(x % ei if ei else x for x in row))
        object.__setattr__(self, "matrix", tuple(red))

    @classmethod
    def unchecked(cls, domain: FgGroup, codomain: FgGroup, matrix: _snf.Matrix) -> "Homomorphism":
        """Skip the well-definedness test; for maps that are well defined by construction.

        Entries are still reduced, so the result compares equal to the checked one.
        """
        e = codomain.invariant_factors
        obj = object.__new__(cls)
        object.__setattr__(obj, "domain", domain)
        object.__setattr__(obj, "codomain", codomain)
        object.__setattr__(obj, "matrix", tuple(
            tuple(x % ei if ei else x for x in row) for ei, row in zip(e, matrix)))
        return obj

    def __call__(self, x: GroupElement | Sequence[int]) -> GroupElement:
        v = _coords(x)
        if isinstance(x, GroupElement) and x.parent != self.domain:
            raise GroupMismatch(f"{x} is not in {self.domain}")
        if len(v) != self.domain.ngens:
            raise GroupMismatch("wrong number of coordinates")
        return GroupElement(self.codomain, _snf.matvec(self.matrix, v))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.domain.ngens)]

    def __matmul__(self, other: "Homomorphism") -> "Homomorphism":
        if other.codomain != self.domain:
            raise GroupMismatch(f"cannot compose {self} after {other}")
        prod = _snf.matmul(self.matrix, other.matrix, inner=self.domain.ngens, ncols=other.domain.ngens)
        return Homomorphism(other.domain, self.codomain, prod)

    def _same_ends(self, other: "Homomorphism") -> None:
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise GroupMismatch("homomorphisms are not parallel")

    def __add__(self, other: "Homomorphism") -> "Homomorphism":
        self._same_ends(other)
        m = tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.matrix, other.matrix))
        return Homomorphism(self.domain, self.codomain, m)

    def __neg__(self) -> "Homomorphism":
        return Homomorphism(self.domain, self.codomain, tuple(tuple(-x for x in r) for r in self.matrix))

    def __sub__(self, other: "Homomorphism") -> "Homomorphism":
        return self + (-other)

    def __rmul__(self, n: int) -> "Homomorphism":
        return Homomorphism(self.domain, self.codomain, tuple(tuple(n * x for x in r) for r in self.matrix))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def kernel(self) -> "Subgroup":
        return kernel(self)

    def image(self) -> "Subgroup":
        return image(self)

    def is_injective(self) -> bool:
        return kernel(self).group.is_trivial

    def is_surjective(self) -> bool:
        return cokernel(self).group.is_trivial

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "Homomorphism":
        if not self.is_isomorphism():
            raise ValueError(f"{self} is not invertible")
        return lift_through(self, self.codomain.identity())

    def __repr__(self) -> str:
        return f"Homomorphism({self.domain} -> {self.codomain}, {[list(r) for r in self.matrix]})"


def make_hom(domain: FgGroup, codomain: FgGroup, matrix: Sequence[Sequence[int]]) -> Homomorphism:
    """Validated, canonically reduced homomorphism (raises :class:`IllDefined`)."""
    return Homomorphism(domain, codomain, _snf.as_matrix(matrix))


# -- presentations -----------------------------------------------------------


@dataclass(frozen=True)
class Quotient:
    """``Z^n / <relations>`` in canonical form.

    ``proj`` (k x n) sends generator coordinates to coordinates in ``group``;
    ``section`` (n x k) sends canonical generators back to chosen lifts.
    """

    group: FgGroup
    proj: _snf.Matrix
    section: _snf.Matrix

    def to_group(self, v: Sequence[int]) -> Vector:
        return self.group.reduce(_snf.matvec(self.proj, v))

    def lift(self, v: Sequence[int]) -> Vector:
        return _snf.matvec(self.section, v)


@lru_cache(maxsize=65536)
def present(n: int, relations: tuple[Vector, ...]) -> Quotient:
    """Canonical form of the abelian group with ``n`` generators and the given relations."""
    rel = _snf.transpose(tuple(relations), ncols=n) if relations else tuple(() for _ in range(n))
    s = _snf.snf(rel, ncols=len(relations))
    diag = [s.D[i][i] if i < s.rank else 0 for i in range(n)]
    keep = [i for i in range(n) if diag[i] != 1]
    group = FgGroup(tuple(diag[i] for i in keep))
    proj = tuple(s.L[i] for i in keep)
    section = tuple(tuple(s.L_inv[r][i] for i in keep) for r in range(n))
    return Quotient(group, proj, section)


# -- subgroups, kernels, cokernels ---------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """A subgroup in canonical form together with its inclusion map."""

    group: FgGroup
    inclusion: Homomorphism

    def __iter__(self):
        # allows ``K, inc = kernel(f)``
        return iter((self.group, self.inclusion))

    def contains(self, y: GroupElement | Sequence[int]) -> bool:
        return preimage(self.inclusion, y) is not None


@dataclass(frozen=True)
class QuotientGroup:
    group: FgGroup
    projection: Homomorphism

    def __iter__(self):
        return iter((self.group, self.projection))


def _relation_vectors(G: FgGroup) -> list[Vector]:
    n = G.ngens
    return [_unit(n, i, d) for i, d in enumerate(G.invariant_factors) if d]


def subgroup(G: FgGroup, gens: Sequence[Sequence[int]]) -> Subgroup:
    """The subgroup of ``G`` generated by the given coordinate vectors."""
    gens = [tuple(_coords(g)) for g in gens]
    k, n = len(gens), G.ngens
    torsion = [i for i, d in enumerate(G.invariant_factors) if d]
    # relations among the generators: z with sum z_j g_j in the relation lattice of G
    block = tuple(
        tuple(g[i] for g in gens) + tuple(-G.invariant_factors[i] if i == t else 0 for t in torsion)
        for i in range(n)
    )
    rels = tuple(v[:k] for v in _snf.nullspace(block, ncols=k + len(torsion))) if n else tuple(_unit(k, j) for j in range(k))
    rels = tuple(r for r in rels if any(r))
    q = present(k, rels)
    X = tuple(tuple(g[i] for g in gens) for i in range(n))
    inc = _snf.matmul(X, q.section, inner=k, ncols=q.group.ngens) if n else ()
    return Subgroup(q.group, Homomorphism(q.group, G, inc))


@lru_cache(maxsize=65536)
def _aug(f: Homomorphism) -> tuple[_snf.Matrix, int]:
    """``[M | -diag(e)]`` over the torsion factors of the codomain."""
    e = f.codomain.invariant_factors
    torsion = [i for i, d in enumerate(e) if d]
    m = tuple(
        row + tuple(-e[i] if i == t else 0 for t in torsion) for i, row in enumerate(f.matrix)
    )
    return m, f.domain.ngens + len(torsion)


@lru_cache(maxsize=65536)
def kernel(f: Homomorphism) -> Subgroup:
    n = f.domain.ngens
    if f.codomain.ngens == 0:
        return Subgroup(f.domain, f.domain.identity())
    aug, width = _aug(f)
    gens = [v[:n] for v in _snf.nullspace(aug, ncols=width)]
    return subgroup(f.domain, [g for g in gens if any(g)])


@lru_cache(maxsize=65536)
def image(f: Homomorphism) -> Subgroup:
    return subgroup(f.codomain, f.columns())


@lru_cache(maxsize=65536)
def cokernel(f: Homomorphism) -> QuotientGroup:
    V = f.codomain
    rels = tuple(c for c in f.columns() if any(c)) + tuple(_relation_vectors(V))
    q = present(V.ngens, rels)
    return QuotientGroup(q.group, Homomorphism(V, q.group, q.proj))


def preimage(f: Homomorphism, y: GroupElement | Sequence[int]) -> GroupElement | None:
    """Some ``x`` with ``f(x) == y``, or None when ``y`` is not in the image."""
    y = _coords(y)
    n = f.domain.ngens
    if f.codomain.ngens == 0:
        return f.domain.zero
    aug, width = _aug(f)
    x = _snf.solve(aug, y, ncols=width)
    if x is None:
        return None
    return f.domain.element(x[:n])


def lift_through(inj: Homomorphism, phi: Homomorphism) -> Homomorphism:
    """The map ``psi`` with ``inj @ psi == phi`` for injective ``inj``."""
    if inj.codomain != phi.codomain:
        raise GroupMismatch("lift_through: codomains differ")
    cols = []
    for c in phi.columns():
        x = preimage(inj, c)
        if x is None:
            raise ValueError("image of phi is not contained in the image of inj")
        cols.append(x.coeffs)
    return Homomorphism(phi.domain, inj.domain, _snf.transpose(tuple(cols), ncols=inj.domain.ngens))


def factor_through(q: Homomorphism, phi: Homomorphism) -> Homomorphism:
    """The map ``psi`` with ``psi @ q == phi`` for surjective ``q``.

    Raises ValueError unless ``phi`` kills ``ker q``.
    """
    if q.domain != phi.domain:
        raise GroupMismatch("factor_through: domains differ")
    for k in kernel(q).inclusion.columns():
        if not phi(k).is_zero():
            raise ValueError("phi does not vanish on the kernel of q")
    cols = []
    for g in q.codomain.generators():
        x = preimage(q, g)
        if x is None:
            raise ValueError("q is not surjective")
        cols.append(phi(x).coeffs)
    return Homomorphism(q.codomain, phi.codomain, _snf.transpose(tuple(cols), ncols=phi.codomain.ngens))


def same_subgroup(a: Homomorphism, b: Homomorphism) -> bool:
    """Whether two maps into the same group have the same image."""
    return all(preimage(b, c) is not None for c in a.columns()) and all(
        preimage(a, c) is not None for c in b.columns()
    )


def is_exact_at(f: Homomorphism, g: Homomorphism) -> bool:
    """``image(f) == kernel(g)`` for composable ``X -f-> Y -g-> W``."""
    if f.codomain != g.domain:
        raise GroupMismatch("is_exact_at: maps are not composable")
    if not (g @ f).is_zero():
        return False
    return all(preimage(f, c) is not None for c in kernel(g).inclusion.columns())


def is_short_exact(i: Homomorphism, p: Homomorphism) -> bool:
    return i.is_injective() and p.is_surjective() and is_exact_at(i, p)


# -- the 2-torsion and mod-2 functors -----------------------------------------


@lru_cache(maxsize=4096)
def two_torsion(U: FgGroup) -> Subgroup:
    """``U[2] = {u : 2u = 0}`` with its inclusion."""
    return kernel(U.multiplication(2))


@lru_cache(maxsize=4096)
def mod_two(U: FgGroup) -> QuotientGroup:
    """``U/2U`` with its projection."""
    return cokernel(U.multiplication(2))


@lru_cache(maxsize=65536)
def two_torsion_map(f: Homomorphism) -> Homomorphism:
    """The restriction ``U[2] -> V[2]`` of ``f``."""
    return lift_through(two_torsion(f.codomain).inclusion, f @ two_torsion(f.domain).inclusion)


@lru_cache(maxsize=65536)
def mod_two_map(f: Homomorphism) -> Homomorphism:
    """The map ``U/2 -> V/2`` induced by ``f``."""
    return factor_through(mod_two(f.domain).projection, mod_two(f.codomain).projection @ f)


# -- direct sums ----------------------------------------------------------------


@dataclass(frozen=True)
class DirectSum:
    group: FgGroup
    summands: tuple[FgGroup, ...]
    injections: tuple[Homomorphism, ...]
    projections: tuple[Homomorphism, ...]

    def pack(self, parts: Sequence[GroupElement | Sequence[int]]) -> GroupElement:
        total = self.group.zero
        for inj, x in zip(self.injections, parts):
            total = total + inj(x)
        return total

    def unpack(self, x: GroupElement | Sequence[int]) -> tuple[GroupElement, ...]:
        return tuple(p(x) for p in self.projections)

    def from_components(self, maps: Sequence[Homomorphism]) -> Homomorphism:
        """The map out of the sum restricting to ``maps[k]`` on summand ``k``."""
        total = None
        for m, p in zip(maps, self.projections):
            term = m @ p
            total = term if total is None else total + term
        return total

    def into(self, maps: Sequence[Homomorphism]) -> Homomorphism:
        """The map into the sum with components ``maps[k]``."""
        total = None
        for m, inj in zip(maps, self.injections):
            term = inj @ m
            total = term if total is None else total + term
        return total


@lru_cache(maxsize=65536)
def _direct_sum(groups: tuple[FgGroup, ...]) -> DirectSum:
    sizes = [g.ngens for g in groups]
    n = sum(sizes)
    factors = [d for g in groups for d in g.invariant_factors]
    q = present(n, tuple(_unit(n, i, d) for i, d in enumerate(factors) if d))
    S = q.group
    injections, projections = [], []
    offset = 0
    for g, k in zip(groups, sizes):
        emb = tuple(tuple(int(r == offset + c) for c in range(k)) for r in range(n))
        injections.append(Homomorphism(g, S, _snf.matmul(q.proj, emb, inner=n, ncols=k)))
        sel = tuple(tuple(int(c == offset + r) for c in range(n)) for r in range(k))
        projections.append(Homomorphism(S, g, _snf.matmul(sel, q.section, inner=n, ncols=S.ngens)))
        offset += k
    return DirectSum(S, groups, tuple(injections), tuple(projections))


def direct_sum(*groups: FgGroup) -> DirectSum:
    return _direct_sum(tuple(groups))


def block_map(src: DirectSum, dst: DirectSum, blocks: Sequence[Sequence[Homomorphism | None]]) -> Homomorphism:
    """Map between direct sums from a block matrix (``None`` meaning zero)."""
    total = src.group.zero_map(dst.group)
    for i, row in enumerate(blocks):
        for j, b in enumerate(row):
            if b is not None:
                total = total + dst.injections[i] @ b @ src.projections[j]
    return total


# -- Hom groups -------------------------------------------------------------------


@dataclass(frozen=True)
class HomGroup:
    """``Hom(U, V)`` as a canonical group with a two-way indexer.

    Entry ``(i, j)`` ranges over a cyclic group of order ``gcd(d_j, e_i)``
    (with ``Hom(Z/d, Z) = 0`` and ``Hom(Z, Z) = Z``), generated by the
    multiple ``e_i / gcd(d_j, e_i)``.
    """

    domain: FgGroup
    codomain: FgGroup
    group: FgGroup
    _cells: tuple[tuple[int, int, int, int], ...]  # (i, j, order, step)
    _quotient: Quotient

    def to_coords(self, f: Homomorphism) -> Vector:
        if (f.domain, f.codomain) != (self.domain, self.codomain):
            raise GroupMismatch("homomorphism is not in this Hom group")
        raw = tuple(f.matrix[i][j] // step for i, j, _, step in self._cells)
        return self._quotient.to_group(raw)

    def element(self, f: Homomorphism) -> GroupElement:
        return GroupElement(self.group, self.to_coords(f))

    def from_coords(self, v: GroupElement | Sequence[int]) -> Homomorphism:
        raw = self._quotient.lift(_coords(v))
        m = [[0] * self.domain.ngens for _ in range(self.codomain.ngens)]
        for (i, j, _, step), x in zip(self._cells, raw):
            m[i][j] = x * step
        return Homomorphism(self.domain, self.codomain, _snf.as_matrix(m))

    def __iter__(self) -> Iterator[Homomorphism]:
        for v in self.group.vectors():
            yield self.from_coords(v)

    def __len__(self) -> int:
        if not self.group.is_finite:
            raise InfiniteGroup(f"Hom({self.domain}, {self.codomain}) = {self.group}")
        return self.group.order


@lru_cache(maxsize=65536)
def hom_group(U: FgGroup, V: FgGroup) -> HomGroup:
    cells = []
    for i, e in enumerate(V.invariant_factors):
        for j, d in enumerate(U.invariant_factors):
            if e == 0:
                if d == 0:
                    cells.append((i, j, 0, 1))
                continue
            c = math.gcd(d, e)
            if c > 1:
                cells.append((i, j, c, e // c))
    k = len(cells)
    q = present(k, tuple(_unit(k, t, c[2]) for t, c in enumerate(cells) if c[2]))
    return HomGroup(U, V, q.group, tuple(cells), q)


def induced_map(
    src: FgGroup,
    dst: FgGroup,
    decode: Callable[[Vector], object],
    fn: Callable[[object], object],
    encode: Callable[[object], Vector],
) -> Homomorphism:
    """The homomorphism ``src -> dst`` obtained by transporting ``fn`` along codecs."""
    cols = [encode(fn(decode(g.coeffs))) for g in src.generators()]
    return Homomorphism(src, dst, _snf.transpose(tuple(cols), ncols=dst.ngens))


# -- enumeration of isomorphism classes --------------------------------------------


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def groups_of_order(n: int) -> list[FgGroup]:
    """Every abelian group of order ``n`` exactly once, in a fixed order."""
    choices = []
    for p, k in sorted(_factorize(n).items()):
        choices.append([[p**part for part in lam] for lam in _partitions(k)])
    out = []
    for combo in itertools.product(*choices):
        out.append(FgGroup.from_orders([q for pp in combo for q in pp]))
    return out


@lru_cache(maxsize=256)
def automorphism_generators(U: FgGroup) -> tuple[Homomorphism, ...]:
    """A generating set of ``Aut(U)`` for finite ``U``, chosen greedily in hom-group order."""
    if not U.is_finite:
        raise InfiniteGroup(f"Aut({U}) is not enumerated for infinite groups")
    autos = [f for f in hom_group(U, U) if f.is_isomorphism()]
    gens: list[Homomorphism] = []
    closure = {U.identity()}
    for f in autos:
        if f in closure:
            continue
        gens.append(f)
        frontier = list(closure)
        while frontier:
            new = []
            for x in frontier:
                for s in gens:
                    y = s @ x
                    if y not in closure:
                        closure.add(y)
                        new.append(y)
            frontier = new
        if len(closure) == len(autos):
            break
    return tuple(gens)


def groups_up_to_order(n: int) -> list[FgGroup]:
    return [G for k in range(1, n + 1) for G in groups_of_order(k)]


def solve_hom(
    unknown: HomGroup,
    constraints: Sequence[tuple[HomGroup, Callable[[Homomorphism], Homomorphism], Homomorphism]],
) -> Homomorphism | None:
    """Find ``x`` in ``unknown`` with ``fn(x) == target`` for every constraint.

    Each ``fn`` must be additive (a composite with fixed maps); the system
    is solved as one integer congruence system.
    """
    spaces = [hg for hg, _, _ in constraints]
    s = direct_sum(*(hg.group for hg in spaces))

    def encode(x: Homomorphism) -> Vector:
        return s.pack([hg.to_coords(fn(x)) for hg, fn, _ in constraints]).coeffs

    T = induced_map(unknown.group, s.group, unknown.from_coords, lambda x: x, encode)
    target = s.pack([hg.to_coords(t) for hg, _, t in constraints])
    sol = preimage(T, target)
    return None if sol is None else unknown.from_coords(sol)
