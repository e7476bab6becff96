"""Character duality J and the self-adjoint duality Delta.

Run with ``python3 demos/04_dualities.py``.
"""

from etadiag import categories as K
from etadiag import cj
from etadiag import diagrams as D
from etadiag import duality as Du
from etadiag import groups as G
from etadiag import serialize as S

Z2, Z3, Z5 = G.cyclic(2), G.cyclic(3), G.cyclic(5)
Fb = cj.representable("b")

# J swaps the roles of A and C and dualizes every map.
print("J(F_b) =", S.diagram_display(Du.j_dual(Fb)), " exact:", D.is_exact(Du.j_dual(Fb)))
print("N -> J(J(N)) is an isomorphism:", Du.j_double_dual_unit(Fb).is_isomorphism())

# Delta, computed two ways, agree through an explicit natural isomorphism.
for x in cj.OBJECTS:
    print(f"Delta(F_{x}) = F_{cj.delta_obj(x)}:", Du.delta_representable_iso(x).is_isomorphism())
cmp = Du.delta_comparison(Fb)
print("explicit vs abstract Delta(F_b):", cmp.is_isomorphism())

# Odd torsion is invisible to Delta.
odd = D.ExtEtaDiagram(Z3, G.TRIVIAL, Z5, Z3.zero_map(Z5), Z5.zero_map(G.TRIVIAL), G.TRIVIAL.zero_map(Z3))
print("\nDelta of an odd-order diagram:", S.diagram_display(Du.delta_dual_explicit(odd)))

# Delta does not preserve exactness.
N = Du.delta_dual_explicit(K.H(Z2, Z2))
print("Delta(H(Z/2, Z/2)) =", S.diagram_display(N), " exact:", D.is_exact(N))

# The unit kappa: N -> Delta(Delta(N)) and the adjunction.
print("\nkappa on F_b is an isomorphism:", Du.delta_unit(Fb).is_isomorphism())
H = K.H(Z2, G.cyclic(4))
print("EED(F_b, Delta H) <-> EED(H, Delta F_b):", Du.delta_adjunction_check(Fb, H))
