"""Brute-force counterparts of the structured solvers, used as test oracles.

Nothing here touches the Smith normal form, ``hom_group`` or the congruence
solvers: homomorphisms are found by trying every matrix with entries below
the codomain orders, and diagram morphisms by filtering products of those
lists square by square.  Only finite groups are supported.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import InfiniteGroup
from .groups import FgGroup, Homomorphism


def _entries_ok(d: tuple[int, ...], e: tuple[int, ...], flat: tuple[int, ...]) -> bool:
    n = len(d)
    return all((d[j] * flat[i * n + j]) % e[i] == 0 for i in range(len(e)) for j in range(n))


@lru_cache(maxsize=4096)
def brute_homs(U: FgGroup, V: FgGroup) -> tuple[Homomorphism, ...]:
    """Every homomorphism ``U -> V``, by exhaustive matrix search."""
    if not (U.is_finite and V.is_finite):
        raise InfiniteGroup("brute force needs finite groups")
    d, e = U.invariant_factors, V.invariant_factors
    ranges = [range(ei) for ei in e for _ in d]
    out = []
    for flat in itertools.product(*ranges):
        if _entries_ok(d, e, flat):
            rows = tuple(tuple(flat[i * len(d):(i + 1) * len(d)]) for i in range(len(e)))
            out.append(Homomorphism.unchecked(U, V, rows))
    return tuple(out)


def _mul(a: Homomorphism, b: Homomorphism) -> tuple:
    """Matrix of ``a o b`` reduced in the codomain of ``a``, without validation."""
    e = a.codomain.invariant_factors
    k = len(b.matrix)
    return tuple(
        tuple(sum(a.matrix[i][t] * b.matrix[t][j] for t in range(k)) % e[i]
              for j in range(b.domain.ngens))
        for i in range(len(e))
    )


def brute_eed_morphism_count(N, N2) -> int:
    """``|EED(N, N')|`` by enumerating ``f``, then compatible ``g``, then ``h``."""
    count = 0
    for f in brute_homs(N.A, N2.A):
        f_psi = _mul(f, N.psi)
        gs = [g for g in brute_homs(N.B, N2.B) if _mul(N2.psi, g) == f_psi]
        if not gs:
            continue
        eta_f = _mul(N2.eta, f)
        hs = [h for h in brute_homs(N.C, N2.C) if _mul(h, N.eta) == eta_f]
        for h in hs:
            chi_h = _mul(N2.chi, h)
            count += sum(1 for g in gs if _mul(g, N.chi) == chi_h)
    return count


def brute_moore_morphism_count(M, M2) -> int:
    count = 0
    for f in brute_homs(M.A, M2.A):
        f_psi, phi_f = None, _mul(M2.phi, f)
        for g in brute_homs(M.B, M2.B):
            if f_psi is None:
                f_psi = _mul(f, M.psi)
            if _mul(g, M.phi) == phi_f and _mul(M2.psi, g) == f_psi:
                count += 1
    return count


def brute_eta_morphism_count(P, P2) -> int:
    # bucket every h by the matrix of h eta, then look each f up
    buckets: dict[tuple, int] = {}
    for h in brute_homs(P.C, P2.C):
        key = _mul(h, P.eta)
        buckets[key] = buckets.get(key, 0) + 1
    return sum(buckets.get(_mul(P2.eta, f), 0) for f in brute_homs(P.A, P2.A))


def brute_subgroup_order(f: Homomorphism) -> int:
    """``|im f|`` by evaluating ``f`` on every element of the domain."""
    return len({f(x).coeffs for x in f.domain.elements()})
