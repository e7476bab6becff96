"""Finite abelian groups, Ext and the map Phi, step by step.

Run with ``python3 demos/01_groups_and_extensions.py``.
"""

from etadiag import groups as G
from etadiag import ext as X

# Group literals are normalized to invariant factors, Z summands last.
U = G.parse_group("Z/4+Z/2")
print("U =", U, " order", U.order)
print("U[2] =", G.two_torsion(U).group, "  U/2 =", G.mod_two(U).group)

# Homomorphisms are integer matrices, one column per generator of the domain.
# Z/2 -> Z/4 via [1] is rejected because 2*1 is not 0 mod 4.
t = G.make_hom(G.cyclic(2), G.cyclic(4), [[2]])
print("t =", t, " injective:", t.is_injective())
print("Hom(Z/4, Z/6) =", G.hom_group(G.cyclic(4), G.cyclic(6)).group)

# Kernels and cokernels come with their inclusion / projection maps.
K = G.kernel(G.make_hom(G.cyclic(4), G.cyclic(2), [[1]]))
print("ker(Z/4 -> Z/2) =", K.group, "included by", K.inclusion.matrix)

# Ext(U, V) and one extension per class.
Z2, Z4 = G.cyclic(2), G.cyclic(4)
print("\nExt(Z/2, Z/2) =", X.ext_group(Z2, Z2), "  Ext(Z/2, Z) =", X.ext_group(Z2, G.Z))
for c in X.all_classes(Z2, Z2):
    E = X.realize(c)
    print(f"  class {c}: middle group {E.M}, Phi = {X.phi(E).matrix}")

# The nonsplit extension Z/2 -> Z/4 -> Z/2 has Phi equal to the identity,
# and its six-term sequence is exact.
E1 = X.Extension(Z2, Z4, Z2, t, G.make_hom(Z4, Z2, [[1]]))
print("\nclassify(E1) =", X.classify(E1))
print("six-term groups:", [str(g) for g in X.six_term(E1).groups()],
      "exact:", X.six_term(E1).is_exact())

# Baer sums: the four classes of extensions of Z/4 by Z/4 add like Z/4.
gen = X.realize(X.ExtClass(Z4, Z4, ((1,),)))
acc = X.split_extension(Z4, Z4)
print("\nmultiples of a generator of Ext(Z/4, Z/4):")
for k in range(5):
    print(f"  {k} x gen -> {X.classify(acc)}  (middle group {acc.M})")
    acc = X.baer_sum(acc, gen)

# Phi(E) depends only on the class mod 2 and gives Ext/2 = Hom(U[2], V/2).
print("\nPhi checks for Ext(Z/2+Z/4, Z/4):", X.phi_isomorphism_report(G.parse_group("Z/2+Z/4"), Z4))

# Middle maps: with f = 1 and h = 0 there is no fill for E1, since [E1] != 0.
one, zero = Z2.identity(), Z2.zero_map(Z2)
print("fill for (1, 1):", X.middle_fill(E1, E1, one, one))
print("fill for (1, 0):", X.middle_fill(E1, E1, one, zero))
