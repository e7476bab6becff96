"""The three-object category J and its representable EEDs.

Run with ``python3 demos/03_category_J.py``.
"""

from etadiag import categories as K
from etadiag import cj
from etadiag import groups as G
from etadiag import serialize as S

print("hom groups J(x, y):")
for x in cj.OBJECTS:
    print("  ", x, [str(cj.cj_hom(x, y)) for y in cj.OBJECTS])

rho, eta, beta = cj.generator("a", "b"), cj.generator("c", "a"), cj.generator("b", "c")
print("\nbeta.rho =", cj.cj_compose(beta, rho))
print("rho.eta.beta =", cj.cj_compose(rho, cj.cj_compose(eta, beta)))

print("\nrepresentables F_x = J(-, x):")
for x in cj.OBJECTS:
    print(f"  F_{x}:", S.diagram_display(cj.representable(x)))

print("\nmaps between them:")
for name, m in cj.morphism_square().items():
    print(f"  F_{name}: f={m.f.matrix} g={m.g.matrix} h={m.h.matrix}")

# Yoneda: morphisms F_x -> N are the elements of N(x).
N = K.H(G.cyclic(2), G.cyclic(4))
for x in cj.OBJECTS:
    y = cj.yoneda_check(x, N)
    print(f"EED(F_{x}, H(Z/2, Z/4)) <-> N({x}) = {N.at(x)}: bijection {y.verify()}")

print("\nthe involution Delta: a <-> c, b fixed;", "Delta(rho) =", cj.delta_mor(rho))
