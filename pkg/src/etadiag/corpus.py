"""Deterministic instance generators shared by the verify suites and the tests."""

from __future__ import annotations

import random
from functools import lru_cache

from . import groups as G
from .categories import construct_eeed_over
from .diagrams import EtaDiagram, ExtEtaDiagram, MooreDiagram, is_valid
from .groups import FgGroup, Homomorphism

#: groups with a Z summand that suites add to the finite lists
Z_CASES = (G.Z, G.parse_group("Z/2+Z"))


@lru_cache(maxsize=64)
def eta_diagrams(max_order: int) -> tuple[EtaDiagram, ...]:
    """All ``A -eta-> C`` with ``2 eta = 0`` and ``|A|, |C| <= max_order``."""
    out = []
    for A in G.groups_up_to_order(max_order):
        for C in G.groups_up_to_order(max_order):
            for eta in G.hom_group(A, C):
                if (2 * eta).is_zero():
                    out.append(EtaDiagram(A, C, eta))
    return tuple(out)


@lru_cache(maxsize=64)
def exact_eeeds(max_order: int) -> tuple[ExtEtaDiagram, ...]:
    """Exact EEDs with ``|A|, |B|, |C| <= max_order``, one over each eta-diagram."""
    out = []
    for P in eta_diagrams(max_order):
        if G.two_torsion(P.A).group.order * G.mod_two(P.C).group.order > max_order:
            continue
        out.append(construct_eeed_over(P))
    return tuple(out)


def exact_moores(max_order: int) -> tuple[MooreDiagram, ...]:
    """Exact Moore diagrams obtained from the exact EEDs in EMD' of the corpus."""
    from .categories import eeed_to_emd, in_emd_prime

    return tuple(eeed_to_emd(N) for N in exact_eeeds(max_order) if in_emd_prime(N))


def sample(items, n: int, seed: int) -> list:
    """``n`` items drawn without replacement (all of them if fewer), order preserved."""
    items = list(items)
    if len(items) <= n:
        return items
    idx = sorted(random.Random(seed).sample(range(len(items)), n))
    return [items[i] for i in idx]


def sample_pairs(items, n: int, seed: int) -> list[tuple]:
    items = list(items)
    rng = random.Random(seed)
    return [(rng.choice(items), rng.choice(items)) for _ in range(n)]


def _random_hom(rng: random.Random, U: FgGroup, V: FgGroup) -> Homomorphism:
    hg = G.hom_group(U, V)
    coords = [rng.randrange(d) if d else rng.randrange(-3, 4) for d in hg.group.invariant_factors]
    return hg.from_coords(coords)


def random_eeds(n: int, seed: int, max_order: int = 8) -> list[ExtEtaDiagram]:
    """``n`` valid EEDs (not necessarily exact) with every group of order ``<= max_order``.

    Random ``eta`` and ``psi`` are drawn first and ``chi`` is solved from
    ``psi chi = 0`` and ``chi eta psi = 2``; draws without a solution are
    skipped.  The result is a deterministic function of ``(n, seed, max_order)``.
    """
    rng = random.Random(seed)
    gs = G.groups_up_to_order(max_order)
    out: list[ExtEtaDiagram] = []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 200 * n:
            raise RuntimeError("random_eeds: too few valid draws")
        A, B, C = rng.choice(gs), rng.choice(gs), rng.choice(gs)
        eta = _random_hom(rng, A, C)
        if not (2 * eta).is_zero():
            eta = 2 * eta if (4 * eta).is_zero() else A.zero_map(C)
        psi = _random_hom(rng, B, A)
        chi = G.solve_hom(G.hom_group(C, B), [
            (G.hom_group(C, A), lambda x: psi @ x, C.zero_map(A)),
            (G.hom_group(B, B), lambda x: x @ eta @ psi, B.multiplication(2)),
        ])
        if chi is None:
            continue
        N = ExtEtaDiagram(A, B, C, eta, chi, psi)
        if is_valid(N):
            out.append(N)
    return out
