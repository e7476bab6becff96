"""Exact computations with finitely generated abelian groups, extensions and eta-diagrams.

The submodules, from the bottom up:

``snf``         Smith normal form and integer linear algebra
``groups``      groups in invariant-factor form, homomorphisms, kernels, Hom
``ext``         extensions, Ext classes, Baer sums and the map Phi
``diagrams``    eta-diagrams, Moore diagrams, EEDs and their morphisms
``categories``  H, SPP, SPP+, the Moore-diagram equivalence, degenerations
``cj``          the category J, its representables and the Yoneda bijection
``duality``     the character dual J and the dual Delta
``verify``      named verification suites; ``cli`` is the command line
"""

from .errors import (
    EtaDiagError, GroupMismatch, IllDefined, InfiniteGroup, InfiniteHomSet, NotExact,
    NotInEmdPrime, ParseError, RelationFailed,
)
from .groups import (
    TRIVIAL, Z, FgGroup, GroupElement, Homomorphism, cokernel, cyclic, groups_up_to_order,
    hom_group, image, kernel, make_hom, mod_two, parse_group, two_torsion,
)
from .ext import (
    ExtClass, Extension, all_classes, baer_sum, classify, ext_group, middle_fill, phi, pullback,
    pushout, realize, six_term,
)
from .diagrams import (
    DiagramMorphism, EtaDiagram, ExtEtaDiagram, MooreDiagram, eeed_phi_check, hom_set, is_exact,
    lift_along_pi, morphism_group, pi, pi_mor, validate, xi,
)
from .categories import (
    H, SppObject, SppMorphism, SppPlusMorphism, H_mor, classify_degenerate, construct_eeed_over,
    ed_to_hom_bijection, eeed_to_emd, emd_to_eeed, spp_compose, spp_plus_compose, spp_plus_to_spp,
    standard_emd,
)
from .cj import (
    CjMorphism, cj_compose, cj_hom, delta_mor, delta_obj, representable, representable_mor,
    yoneda_check,
)
from .duality import (
    delta_adjunction_check, delta_dual_abstract, delta_dual_explicit, delta_unit, j_double_dual_unit,
    j_dual,
)
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"
