"""Named verification suites.

Each suite enumerates instances (all groups up to ``max_order``, plus a few
groups with a free summand where that makes sense) or draws them with a
seeded generator, checks a list of named properties on every instance and
returns a :class:`VerifyReport`.  A property keeps its first failing
instance as a serialized counterexample together with the CLI command that
replays it.

Reports are deterministic functions of ``(suite, max_order, seed)``.  The
wall-clock duration is recorded but kept out of the JSON form unless asked
for, so that repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable

from . import categories as K
from . import cj
from . import corpus
from . import diagrams as D
from . import duality as Du
from . import ext as X
from . import groups as G
from . import oracle
from . import serialize as S
from .groups import FgGroup

SCHEMA = 1


# -- reports ----------------------------------------------------------------------------


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed,
                               "checked": self.checked, "failed": self.failed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerifyReport:
    suite: str
    max_order: int
    seed: int
    instances: int = 0
    properties: list[PropertyResult] = field(default_factory=list)
    duration: float = 0.0
    children: list["VerifyReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties) and all(c.passed for c in self.children)

    def to_json(self, timing: bool = False) -> dict:
        out: dict[str, Any] = {
            "schema": SCHEMA, "suite": self.suite, "max_order": self.max_order,
            "seed": self.seed, "passed": self.passed, "instances": self.instances,
            "properties": [p.to_json() for p in self.properties],
        }
        if self.children:
            out["suites"] = [c.to_json(timing) for c in self.children]
        if timing:
            out["duration_s"] = round(self.duration, 3)
        return out

    def to_text(self) -> str:
        if self.children:
            lines = [c.to_text() for c in self.children]
            status = "PASS" if self.passed else "FAIL"
            lines.append(f"{status} all: {len(self.children)} suites, "
                         f"{self.instances} instances, {self.duration:.1f}s")
            return "\n".join(lines)
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite}: {self.instances} instances "
                 f"(max order {self.max_order}, seed {self.seed}), {self.duration:.1f}s"]
        for p in self.properties:
            mark = "ok  " if p.passed else "FAIL"
            lines.append(f"  {mark} {p.name}: {p.checked - p.failed}/{p.checked}")
            if p.counterexample is not None:
                lines.append("       counterexample: " + S.dumps(p.counterexample))
        return "\n".join(lines)


class _Run:
    """Collects property results in first-seen order."""

    def __init__(self, report: VerifyReport):
        self.report = report
        self._index: dict[str, PropertyResult] = {}

    def prop(self, name: str) -> PropertyResult:
        if name not in self._index:
            self._index[name] = PropertyResult(name)
            self.report.properties.append(self._index[name])
        return self._index[name]

    def check(self, name: str, ok: bool, payload: Callable[[], dict]) -> bool:
        p = self.prop(name)
        p.checked += 1
        if not ok:
            p.failed += 1
            if p.counterexample is None:
                p.counterexample = payload()
        return ok

    def guarded(self, name: str, fn: Callable[[], bool], payload: Callable[[], dict]) -> bool:
        """``check`` that also records an exception as a failure."""
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failed property, with the reason kept
            p = self.prop(name)
            p.checked += 1
            p.failed += 1
            if p.counterexample is None:
                p.counterexample = {**payload(), "error": f"{type(exc).__name__}: {exc}"}
            return False
        return self.check(name, ok, payload)


# -- payload helpers --------------------------------------------------------------------


def _pair(U: FgGroup, V: FgGroup) -> dict:
    return {"U": str(U), "V": str(V), "replay": f"ext {U} {V}"}


def _ext_payload(E: X.Extension) -> dict:
    return {"extension": S.extension_to_json(E), "replay": "phi extension.json"}


def _diagrams(*ds, command: str = "diagram validate") -> dict:
    names = [f"d{k}.json" for k in range(len(ds))]
    return {"diagrams": [S.diagram_to_json(d) for d in ds],
            "replay": f"{command} {' '.join(names)}"}


def _random_morphism(rng: random.Random, mg: D.MorphismGroup) -> D.DiagramMorphism:
    return mg.decode(tuple(rng.randrange(d) for d in mg.group.invariant_factors))


def _finite_corpus(max_order: int, seed: int, n_exact: int, n_random: int) -> list[D.ExtEtaDiagram]:
    """A seeded mix of exact EEDs and random (mostly non-exact) EEDs, duplicates removed."""
    items = corpus.sample(corpus.exact_eeeds(max_order), n_exact, seed)
    items += corpus.random_eeds(n_random, seed, max_order)
    out, seen = [], set()
    for N in items:
        if N not in seen:
            seen.add(N)
            out.append(N)
    return out


# -- suites -------------------------------------------------------------------------------


def _phi_iso(run: _Run, max_order: int, seed: int) -> int:
    cases = G.groups_up_to_order(max_order) + list(corpus.Z_CASES)
    n = 0
    for U in cases:
        for V in cases:
            n += 1
            report = X.phi_isomorphism_report(U, V)
            for key, ok in report.items():
                run.check(key, ok, lambda: _pair(U, V))
            if U.exponent in (1, 2) or V.exponent in (1, 2):
                target = G.hom_group(G.two_torsion(U).group, G.mod_two(V).group)
                table = X.phi_table(U, V)
                run.check("exponent_two_count", X.ext_order(U, V) == len(target), lambda: _pair(U, V))
                run.check("exponent_two_bijective_on_classes",
                          len({f.matrix for f in table.values()}) == len(table), lambda: _pair(U, V))
    return n


_JOINTS = ("exact_at_M[2]", "exact_at_U[2]", "exact_at_V/2", "exact_at_M/2")


def _six_term(run: _Run, max_order: int, seed: int) -> int:
    cases = G.groups_up_to_order(max_order) + list(corpus.Z_CASES)
    n = 0
    for U in cases:
        for V in cases:
            for c in X.all_classes(U, V):
                n += 1
                E = X.realize(c)
                plain = X.forget_construction(E)
                run.check("realize_exact", plain.is_exact(), lambda: _ext_payload(E))
                run.check("classify_realize", X.classify(plain) == c, lambda: _ext_payload(E))
                joints = X.six_term(E).exact_joints()
                for name, ok in zip(_JOINTS, joints):
                    run.check(name, ok, lambda: _ext_payload(E))
                run.check("phi_choice_independent",
                          X.phi(plain, alternative=True) == X.phi(E), lambda: _ext_payload(E))
    return n


def _middle(run: _Run, max_order: int, seed: int) -> int:
    gs = G.groups_up_to_order(max_order)
    reps = [X.realize(c) for U in gs for V in gs for c in X.ext_orbit_representatives(U, V)]
    n = 0
    for E in reps:
        for F in reps:
            n += 1
            r = X.middle_report(E, F)

            def payload():
                return {"E": S.extension_to_json(E), "F": S.extension_to_json(F)}

            run.check("a_iff_b", r.a_iff_b, payload)
            run.check("b_implies_c", r.b_implies_c, payload)
            if r.exponent_two:
                run.check("c_implies_a_when_2Ext_is_0", r.c_implies_b, payload)
    # pointwise cross-check of the subgroup computation through middle_fill
    rng = random.Random(seed)
    for _ in range(300):
        E, F = rng.choice(reps), rng.choice(reps)
        f = corpus._random_hom(rng, E.V, F.V)
        h = corpus._random_hom(rng, E.U, F.U)
        fill = X.middle_fill(E, F, f, h)
        same = X.class_pushforward(f, X.classify(E)) == X.class_pullback(h, X.classify(F))

        def payload():
            return {"E": S.extension_to_json(E), "F": S.extension_to_json(F),
                    "f": S.matrix_to_json(f), "h": S.matrix_to_json(h)}

        run.check("middle_fill_matches_b", (fill is not None) == same, payload)
        if fill is not None:
            lhs = G.mod_two_map(f) @ X.phi(E)
            rhs = X.phi(F) @ G.two_torsion_map(h)
            run.check("middle_fill_implies_c", lhs == rhs, payload)
    return n


def _pi_ses(run: _Run, max_order: int, seed: int) -> int:
    exact = corpus.exact_eeeds(max_order)
    pairs = [(N, N2) for N in exact for N2 in exact]
    pairs = corpus.sample(pairs, 120, seed)
    for N, N2 in pairs:
        def payload():
            return _diagrams(N, N2, command="diagram homset")

        mg = D.morphism_group(N, N2)
        dom = D.xi_domain(N, N2)
        xis = {mg.encode(D.xi(N, N2, u)) for u in dom}
        zero = mg.encode(D.zero_morphism(N, N2))
        run.check("xi_injective", len(xis) == len(dom), payload)
        kernel = {mg.encode(m) for m in mg if D.pi_mor(m).is_zero()}
        run.check("ker_pi_equals_im_xi", kernel == xis and zero in xis, payload)
        ed = D.hom_set(D.pi(N), D.pi(N2))
        ok = True
        for e in ed:
            lift = D.lift_along_pi(N, N2, e)
            ok &= lift.is_valid() and D.pi_mor(lift) == e
        run.check("pi_surjective", ok, payload)
        count = oracle.brute_eed_morphism_count(N, N2)
        run.check("count_formula", count == len(dom) * len(ed) == len(mg), payload)
        run.check("ed_count_oracle", len(ed) == oracle.brute_eta_morphism_count(D.pi(N), D.pi(N2)), payload)
    return len(pairs)


def _eed_rels(run: _Run, max_order: int, seed: int) -> int:
    items = _finite_corpus(max_order, seed, 60, 60)
    for N in items:
        def payload():
            return _diagrams(N)

        run.guarded("validates", lambda: D.validate(N) is not None, payload)
        run.check("2psi=0", (2 * N.psi).is_zero(), payload)
        run.check("2chi=0", (2 * N.chi).is_zero(), payload)
        run.check("4*1_B=0", N.B.multiplication(4).is_zero(), payload)
        run.check("psi_bar.chi_bar=0", (D.psi_bar(N) @ D.chi_bar(N)).is_zero(), payload)
        if D.is_exact(N):
            run.check("eeed_phi_check", bool(D.eeed_phi_check(N)), payload)
    # pi reflects isomorphisms: (f, h) bijective forces g bijective
    rng = random.Random(seed)
    for N in corpus.sample(corpus.exact_eeeds(max_order), 30, seed):
        mg = D.morphism_group(N, N)
        for m in [_random_morphism(rng, mg) for _ in range(20)] + [D.identity(N)]:
            if m.f.is_isomorphism() and m.h.is_isomorphism():
                run.check("pi_reflects_isomorphisms", m.g.is_isomorphism(), lambda: _diagrams(N))
    return len(items)


def _emd_equiv(run: _Run, max_order: int, seed: int) -> int:
    gs = G.groups_up_to_order(max_order)
    moores = list(dict.fromkeys(list(corpus.exact_moores(max_order)) + [K.standard_emd(A) for A in gs]))
    for M in moores:
        run.check("round_trip_moore", K.eeed_to_emd(K.emd_to_eeed(M)) == M, lambda: _diagrams(M))
    emd_prime = [N for N in corpus.exact_eeeds(max_order) if K.in_emd_prime(N)]
    for N in emd_prime:
        iso = K.emd_prime_iso(N)
        run.check("round_trip_eeed_up_to_canonical_iso", iso.is_valid() and iso.is_isomorphism(),
                  lambda: _diagrams(N))
    for M in moores:
        for M2 in moores:
            def payload():
                return _diagrams(M, M2, command="diagram homset")

            n_emd = len(D.morphism_group(M, M2))
            expect = (len(G.hom_group(G.two_torsion(M.A).group, G.mod_two(M2.A).group))
                      * len(G.hom_group(M.A, M2.A)))
            run.check("emd_count_formula", n_emd == expect, payload)
            N, N2 = K.emd_to_eeed(M), K.emd_to_eeed(M2)
            run.check("counts_agree_across_E", n_emd == len(D.morphism_group(N, N2)), payload)
            bij = K.ed_to_hom_bijection(N, N2)
            ed = D.hom_set(D.pi(N), D.pi(N2))
            homs = list(G.hom_group(M.A, M2.A))
            ok = len(ed) == len(homs)
            ok &= all(bij.backward(bij.forward(e)) == e for e in ed)
            ok &= all(bij.forward(bij.backward(f)) == f and bij.backward(f).is_valid() for f in homs)
            run.check("ed_to_hom_bijection", ok, payload)
    for A in G.groups_up_to_order(max(16, max_order)) + [G.Z, G.parse_group("Z/2+Z")]:
        M = K.standard_emd(A)
        run.guarded("standard_emd_exact", lambda: M.A == A and D.is_valid(M) and D.is_exact(M),
                    lambda: {"A": str(A), **_diagrams(M, command="diagram exact")})
    return len(moores) + len(emd_prime)


def _spp_objects(max_order: int) -> list[K.SppObject]:
    gs = G.groups_up_to_order(max_order)
    return [K.SppObject(A, C) for A in gs for C in gs]


def _random_spp(rng: random.Random, P0: K.SppObject, P1: K.SppObject) -> K.SppMorphism:
    f = corpus._random_hom(rng, P0.A, P1.A)
    h = corpus._random_hom(rng, P0.C, P1.C)
    u = corpus._random_hom(rng, G.two_torsion(P0.A).group, G.mod_two(P1.C).group)
    return K.SppMorphism(P0, P1, f, h, u)


def _random_spp_plus(rng: random.Random, P0: K.SppObject, P1: K.SppObject) -> K.SppPlusMorphism:
    f = corpus._random_hom(rng, P0.A, P1.A)
    h = corpus._random_hom(rng, P0.C, P1.C)
    classes = list(X.all_classes(P0.A, P1.C))
    return K.SppPlusMorphism(P0, P1, f, h, rng.choice(classes))


def _spp_payload(*objs: K.SppObject) -> dict:
    return {"objects": [[str(P.A), str(P.C)] for P in objs]}


def _h_equiv(run: _Run, max_order: int, seed: int) -> int:
    objs = _spp_objects(max_order)
    Hs = {P: K.H(P.A, P.C) for P in objs}
    for P0 in objs:
        for P1 in objs:
            run.check("spp_count_equals_eeed_count",
                      K.spp_hom_order(P0, P1) == len(D.morphism_group(Hs[P0], Hs[P1])),
                      lambda: {**_spp_payload(P0, P1), **_diagrams(Hs[P0], Hs[P1], command="diagram homset")})
    rng = random.Random(seed)
    for _ in range(300):
        P0, P1, P2 = rng.choice(objs), rng.choice(objs), rng.choice(objs)
        m0, m1 = _random_spp(rng, P0, P1), _random_spp(rng, P1, P2)
        payload = lambda: _spp_payload(P0, P1, P2)  # noqa: E731
        H0 = K.H_mor(m0)
        run.check("H_mor_valid", H0.is_valid(), payload)
        run.check("H_faithful_round_trip", K.H_inverse(P0, P1, H0) == m0, payload)
        run.check("H_functorial", K.H_mor(K.spp_compose(m1, m0)) == K.H_mor(m1) @ H0, payload)
        d = _random_morphism(rng, D.morphism_group(Hs[P0], Hs[P1]))
        run.check("H_full_round_trip", K.H_mor(K.H_inverse(P0, P1, d)) == d, payload)
    for P in objs:
        run.check("H_identity", K.H_mor(K.spp_identity(P)) == D.identity(Hs[P]), lambda: _spp_payload(P))
    return len(objs) ** 2


def _spp_plus(run: _Run, max_order: int, seed: int) -> int:
    objs = _spp_objects(max_order)
    rng = random.Random(seed)
    n = 1000
    for _ in range(n):
        P = [rng.choice(objs) for _ in range(4)]
        payload = lambda: _spp_payload(*P)  # noqa: E731
        a = [_random_spp(rng, P[k], P[k + 1]) for k in range(3)]
        run.check("spp_associative",
                  K.spp_compose(a[2], K.spp_compose(a[1], a[0])) == K.spp_compose(K.spp_compose(a[2], a[1]), a[0]),
                  payload)
        run.check("spp_identities",
                  K.spp_compose(a[0], K.spp_identity(P[0])) == a[0] == K.spp_compose(K.spp_identity(P[1]), a[0]),
                  payload)
        b = [_random_spp_plus(rng, P[k], P[k + 1]) for k in range(3)]
        c = K.spp_plus_compose
        run.check("spp_plus_associative", c(b[2], c(b[1], b[0])) == c(c(b[2], b[1]), b[0]), payload)
        run.check("spp_plus_identities",
                  c(b[0], K.spp_plus_identity(P[0])) == b[0] == c(K.spp_plus_identity(P[1]), b[0]), payload)
        run.check("phi_functor_composition",
                  K.spp_plus_to_spp(c(b[1], b[0])) == K.spp_compose(K.spp_plus_to_spp(b[1]), K.spp_plus_to_spp(b[0])),
                  payload)
        run.check("phi_functor_identity",
                  K.spp_plus_to_spp(K.spp_plus_identity(P[0])) == K.spp_identity(P[0]), payload)
    # (id, id, [E1]) over (Z/2, Z/2) goes to (id, id, identity)
    Z2 = G.cyclic(2)
    P = K.SppObject(Z2, Z2)
    E1 = X.ExtClass(Z2, Z2, ((1,),))
    m = K.spp_plus_to_spp(K.SppPlusMorphism(P, P, Z2.identity(), Z2.identity(), E1))
    run.check("nonsplit_class_gives_identity", m.u == Z2.identity(), lambda: _spp_payload(P))
    return n


def golden_tables() -> dict:
    """The hand-transcribed tables of J shipped with the package."""
    text = resources.files("etadiag").joinpath("data/cj_golden.json").read_text(encoding="utf-8")
    return json.loads(text)


def _golden_diagram(spec: dict) -> dict:
    return {"kind": "eed", "A": spec["A"], "B": spec["B"], "C": spec["C"],
            "eta": spec["eta"], "chi": spec["chi"], "psi": spec["psi"]}


_GEN = {"rho": cj.rho, "eta": cj.eta, "beta": cj.beta}


def _cj_tables(run: _Run, max_order: int, seed: int) -> int:
    gold = golden_tables()
    for key, literal in gold["hom_groups"].items():
        x, y = key.split(",")
        run.check("hom_groups", str(cj.cj_hom(x, y)) == literal,
                  lambda: {"pair": key, "expected": literal, "got": str(cj.cj_hom(x, y)), "replay": "cj table"})
    for key, name in gold["generators"].items():
        x, y = key.split(",")
        run.check("generator_names", cj.GENERATOR_NAMES[x, y] == name, lambda: {"pair": key, "replay": "cj table"})
    for rel in gold["relations"]:
        prod = _GEN[rel["lhs"][0]]
        for name in rel["lhs"][1:]:
            prod = prod @ _GEN[name]
        ok = (prod.source, prod.target, prod.coeff) == (rel["source"], rel["target"], rel["coeff"])
        run.check("relations", ok, lambda: {"relation": rel, "got": str(prod), "replay": "cj table"})
    for x, spec in gold["representables"].items():
        got = S.diagram_to_json(cj.representable(x))
        run.check("representables", got == _golden_diagram(spec),
                  lambda: {"object": x, "expected": spec, "got": got, "replay": f"cj representable {x}"})
    square = cj.morphism_square()
    for spec in gold["square"]["morphisms"]:
        m = square[spec["name"]]
        ok = (m.source, m.target) == (cj.representable(spec["source"]), cj.representable(spec["target"]))
        ok &= all(S.matrix_to_json(m.component(x)) == spec[k] for x, k in zip("abc", "fgh"))
        ok &= m.is_valid()
        run.check("morphism_square", ok, lambda: {"expected": spec, "replay": "cj table"})
    rows = gold["square"]["rows"]
    chain = [s["source"] for s in gold["square"]["morphisms"]] + [gold["square"]["morphisms"][-1]["target"]]
    run.check("square_rows", rows == chain, lambda: {"rows": rows})
    # everything else follows from the relations: associativity and the involution
    objs = cj.OBJECTS
    mors = {(x, y): cj.all_morphisms(x, y, z_range=2) for x in objs for y in objs}
    for x in objs:
        for y in objs:
            for z in objs:
                for w in objs:
                    for u in mors[x, y]:
                        for v in mors[y, z]:
                            for t in mors[z, w]:
                                run.check("associative", (t @ v) @ u == t @ (v @ u),
                                          lambda: {"triple": [str(u), str(v), str(t)]})
    for x in objs:
        for y in objs:
            for u in mors[x, y]:
                run.check("delta_involution", cj.delta_mor(cj.delta_mor(u)) == u, lambda: {"u": str(u)})
                for z in objs:
                    for v in mors[y, z]:
                        run.check("delta_contravariant",
                                  cj.delta_mor(v @ u) == cj.delta_mor(u) @ cj.delta_mor(v),
                                  lambda: {"u": str(u), "v": str(v)})
    return len(gold["hom_groups"])


def _yoneda(run: _Run, max_order: int, seed: int) -> int:
    items = _finite_corpus(max_order, seed, 30, 20)
    items += [cj.representable("b"), D.zero_eed(), K.H(G.cyclic(2), G.cyclic(2))]
    for N in items:
        for x in cj.OBJECTS:
            run.guarded("yoneda_bijection", cj.yoneda_check(x, N).verify, lambda: _diagrams(N))
    for w in cj.OBJECTS:
        F = cj.representable(w)
        for x in cj.OBJECTS:
            run.check("representable_values", F.at(x) == cj.cj_hom(x, w),
                      lambda: {"w": w, "x": x, "replay": f"cj representable {w}"})
        run.check("representable_exact", D.is_exact(F), lambda: {"replay": f"cj representable {w}"})
    gens = [cj.generator(x, y) for x in cj.OBJECTS for y in cj.OBJECTS]
    for u in gens:
        for v in gens:
            if u.target != v.source:
                continue
            run.check("representable_functorial",
                      cj.representable_mor(v @ u) == cj.representable_mor(v) @ cj.representable_mor(u),
                      lambda: {"u": str(u), "v": str(v)})
            for N in items:
                run.check("evaluate_functorial",
                          cj.evaluate(N, v @ u) == cj.evaluate(N, u) @ cj.evaluate(N, v),
                          lambda: {"u": str(u), "v": str(v), **_diagrams(N)})
    return len(items)


def _sampled_morphisms(rng, items, n_pairs: int, per_pair: int):
    for _ in range(n_pairs):
        N, N2 = rng.choice(items), rng.choice(items)
        mg = D.morphism_group(N, N2)
        for _ in range(per_pair):
            yield N, N2, _random_morphism(rng, mg)


def _j_dual(run: _Run, max_order: int, seed: int) -> int:
    items = _finite_corpus(max_order, seed, 60, 40)
    for N in items:
        def payload():
            return _diagrams(N, command="dual j")

        J = Du.j_dual(N)
        run.check("j_preserves_relations", D.is_valid(J), payload)
        run.check("j_preserves_exactness", D.is_exact(J) == D.is_exact(N), payload)
        run.guarded("double_dual_unit_iso", lambda: Du.j_double_dual_unit(N).is_isomorphism(), payload)
        run.check("double_dual_groups", Du.j_dual(J).at("a") == N.A and Du.j_dual(J).at("b") == N.B, payload)
    rng = random.Random(seed)
    for N, N2, m in _sampled_morphisms(rng, items, 30, 3):
        def payload():
            return {**_diagrams(N, N2), "morphism": S.morphism_to_json(m)}

        Jm = Du.j_dual_mor(m)
        run.check("j_mor_valid", Jm.is_valid(), payload)
        JJm = Du.j_dual_mor(Jm)
        run.check("unit_natural", JJm @ Du.j_double_dual_unit(N) == Du.j_double_dual_unit(N2) @ m, payload)
        m2 = _random_morphism(rng, D.morphism_group(N2, N))
        run.check("j_contravariant", Du.j_dual_mor(m2 @ m) == Jm @ Du.j_dual_mor(m2), payload)
    return len(items)


def _odd_cases() -> list[D.ExtEtaDiagram]:
    Z3, Z5 = G.cyclic(3), G.cyclic(5)
    out = [D.zero_eed(Z3, G.TRIVIAL, Z5), K.H(Z3, Z5), K.H(G.cyclic(9), Z3)]
    out.append(K.construct_eeed_over(D.EtaDiagram(G.cyclic(7), Z3, G.cyclic(7).zero_map(Z3))))
    return out


def _delta_dual(run: _Run, max_order: int, seed: int) -> int:
    for x in cj.OBJECTS:
        run.guarded("delta_of_representable",
                    lambda: (lambda m: m.is_valid() and m.is_isomorphism())(Du.delta_representable_iso(x)),
                    lambda: {"object": x, "replay": f"dual delta F_{x}.json"})
        run.guarded("explicit_vs_abstract_representable",
                    lambda: (lambda m: m.is_valid() and m.is_isomorphism())(Du.delta_comparison(cj.representable(x))),
                    lambda: {"object": x})
    for N in _odd_cases():
        run.check("odd_order_gives_zero",
                  all(Du.delta_dual_explicit(N).at(x).is_trivial for x in "abc"),
                  lambda: _diagrams(N, command="dual delta"))
    Z2 = G.cyclic(2)
    N = K.H(Z2, Z2)
    d = Du.delta_dual_explicit(N)
    V4 = G.parse_group("Z/2+Z/2")
    run.check("H(Z/2,Z/2)_counterexample",
              (d.A, d.B, d.C) == (Z2, V4, V4) and D.is_valid(d) and not D.is_exact(d),
              lambda: _diagrams(N, command="dual delta"))
    items = _finite_corpus(max_order, seed, 40, 30)
    for N in items:
        def payload():
            return _diagrams(N, command="dual delta")

        run.check("explicit_satisfies_relations", D.is_valid(Du.delta_dual_explicit(N)), payload)
        run.guarded("explicit_iso_abstract",
                    lambda: (lambda m: m.is_valid() and m.is_isomorphism())(Du.delta_comparison(N)), payload)
    rng = random.Random(seed)
    for N, N2, m in _sampled_morphisms(rng, items, 25, 2):
        def payload():
            return {**_diagrams(N, N2), "morphism": S.morphism_to_json(m)}

        ex, ab = Du.delta_explicit_mor(m), Du.delta_abstract_mor(m)
        run.check("delta_mor_valid", ex.is_valid() and ab.is_valid(), payload)
        run.check("comparison_natural",
                  Du.delta_comparison(N) @ ex == ab @ Du.delta_comparison(N2), payload)
        m2 = _random_morphism(rng, D.morphism_group(N2, N))
        run.check("delta_contravariant",
                  Du.delta_explicit_mor(m2 @ m) == ex @ Du.delta_explicit_mor(m2), payload)
    return len(items) + 3 + len(_odd_cases()) + 1


def _delta_adjoint(run: _Run, max_order: int, seed: int) -> int:
    small = [N for N in _finite_corpus(max_order, seed, 40, 30)
             if max(N.A.order, N.B.order, N.C.order) <= 4]
    rng = random.Random(seed)
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(30)]
    pairs += [(cj.representable("b"), cj.representable("b")), (D.zero_eed(), cj.representable("b"))]
    for M, N in pairs:
        run.guarded("adjunction_bijective", lambda: bool(Du.delta_adjunction_check(M, N)),
                    lambda: _diagrams(M, N))
    Fb = cj.representable("b")
    k = Du.delta_unit(Fb)
    run.check("kappa_F_b_iso", k.is_valid() and k.is_isomorphism(), lambda: _diagrams(Fb))
    for N in _odd_cases():
        k = Du.delta_unit(N)
        run.check("kappa_odd_zero", k.is_valid() and k.is_zero(), lambda: _diagrams(N))
    N4 = K.H(G.cyclic(4), G.TRIVIAL)
    k = Du.delta_unit(N4)
    run.check("kappa_not_iso_with_Z/4", k.is_valid() and not k.is_isomorphism(), lambda: _diagrams(N4))
    for N, N2, m in _sampled_morphisms(rng, small, 20, 2):
        def payload():
            return {**_diagrams(N, N2), "morphism": S.morphism_to_json(m)}

        for sign in (1, -1):
            k1, k2 = Du.delta_unit(N, sign), Du.delta_unit(N2, sign)
            dd = Du.delta_abstract_mor(Du.delta_abstract_mor(m))
            run.check(f"kappa_natural_sign{sign:+d}", k1.is_valid() and dd @ k1 == k2 @ m, payload)
    return len(pairs)


SUITES: dict[str, Callable[[_Run, int, int], int]] = {
    "phi-iso": _phi_iso,
    "six-term": _six_term,
    "middle": _middle,
    "pi-ses": _pi_ses,
    "eed-rels": _eed_rels,
    "emd-equiv": _emd_equiv,
    "h-equiv": _h_equiv,
    "spp-plus": _spp_plus,
    "cj-tables": _cj_tables,
    "yoneda": _yoneda,
    "j-dual": _j_dual,
    "delta-dual": _delta_dual,
    "delta-adjoint": _delta_adjoint,
}


def run_verify(suite: str, max_order: int = 8, seed: int = 0) -> VerifyReport:
    """Run one named suite, or ``"all"`` of them in the order of :data:`SUITES`."""
    if suite == "all":
        start = time.perf_counter()
        report = VerifyReport("all", max_order, seed)
        for name in SUITES:
            child = run_verify(name, max_order, seed)
            report.children.append(child)
            report.instances += child.instances
        report.duration = time.perf_counter() - start
        return report
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join([*SUITES, 'all'])}")
    report = VerifyReport(suite, max_order, seed)
    start = time.perf_counter()
    report.instances = SUITES[suite](_Run(report), max_order, seed)
    report.duration = time.perf_counter() - start
    return report
