"""Eta-diagrams, their extensions (EEDs) and morphisms.

Run with ``python3 demos/02_eta_diagrams.py``.
"""

from etadiag import categories as K
from etadiag import cj
from etadiag import diagrams as D
from etadiag import groups as G
from etadiag import serialize as S

Z2, Z4 = G.cyclic(2), G.cyclic(4)

# An EED is B -psi-> A -eta-> C -chi-> B with 2 eta = 0, psi chi = 0 and
# chi eta psi = 2.  The simplest interesting one has B = Z/4.
Fb = cj.representable("b")
print("F_b:", S.diagram_display(Fb))
print("relations checked:", D.validate(Fb))
print("exact:", D.is_exact(Fb), "  Phi check:", bool(D.eeed_phi_check(Fb)))

# Relations failing on input are reported by name.
bad = D.ExtEtaDiagram(Z2, Z4, Z2, Z2.identity(), G.make_hom(Z2, Z4, [[2]]), Z4.zero_map(Z2))
print("bad diagram valid?", D.is_valid(bad))

# Morphisms form a group, solved for by linear algebra.
mg = D.morphism_group(Fb, Fb)
print("\nEED(F_b, F_b) =", mg.group, "with", len(mg), "elements")

# Forgetting B gives the eta-diagram; the kernel of that map is Hom(A[2], C'/2).
N = K.H(G.parse_group("Z/2+Z/4"), Z2)
N2 = K.construct_eeed_over(D.EtaDiagram(Z4, Z2, Z4.zero_map(Z2)))
print("|EEED(N, N')| =", len(D.morphism_group(N, N2)),
      "= |Hom(A[2], C'/2)| * |ED(pi N, pi N')| =",
      len(D.xi_domain(N, N2)), "*", len(D.hom_set(D.pi(N), D.pi(N2))))

# Every eta-diagram has an exact EED over it.  Over the mod-2 projection
# Z/4 -> Z/2 the induced map A[2] -> C/2 is zero, so B splits.
P = D.EtaDiagram(Z4, Z2, G.make_hom(Z4, Z2, [[1]]))
print("\nexact EED over", S.diagram_display(P), ":", S.diagram_display(K.construct_eeed_over(P)))

# Moore diagrams: the standard one for A has the middle group built from
# the 2-primary part of A, with a Z/4 block for each Z/d summand, d = 2 mod 4.
for A in (Z2, Z4, G.cyclic(6), G.Z):
    M = K.standard_emd(A)
    print(f"standard Moore diagram for {A}: {S.diagram_display(M)}  exact: {D.is_exact(M)}")

# Degenerate strata.
print("\ndegenerations of H(Z/2, Z/3):", sorted(K.classify_degenerate(K.H(Z2, G.cyclic(3))).tags))
