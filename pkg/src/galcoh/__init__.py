"""Finite Galois cohomology toolkit: nonabelian H^1/H^2 for finite
Gamma-groups, exact abelian cohomology in degrees 0..2, connecting maps
for central extensions, decision procedures with re-checkable
certificates, and exact verification of the split/definite unitary
example over the Gaussian rationals.
"""

from .errors import (
    GalcohError,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotACocycle,
    NotACocycleForStructure,
    NotAHomomorphism,
    NotASubgroup,
    NotCyclic,
    NotEquivariant,
    NotNormal,
    NotSL,
    NotSymmetric,
    SchemaError,
    SearchBudgetExceeded,
    Singular,
)
from .fingrp import (
    Automorphism,
    FiniteGroup,
    GroupHom,
    center,
    cyclic_group,
    dihedral_group,
    direct_product,
    make_group,
    quaternion_group,
    quotient,
    subgroup,
    symmetric_group,
    trivial_group,
)
from .gmod import (
    AbelianGammaModule,
    Cochain,
    CohomologyGroup,
    cohomology,
    differential,
    is_coboundary2,
    is_cocycle,
    make_module,
    negation_module,
    permutation_module,
    tate_cyclic_oracle,
    trivial_action_module,
)
from .nonab import (
    GammaGroup,
    NonabCocycle1,
    Twisted2Cocycle,
    cohomologous1,
    enumerate_cocycles1,
    h1_classes,
    is_neutral2,
    make_twisted2,
    trivial_gamma_group,
    twist,
    twist_by_automorphisms,
    verify_neutrality_witness,
)
from .extension import (
    CenterToAutMap,
    CentralExtension,
    central_extension,
    connecting_delta,
    identity_center_map,
    lifts_to_cocycle,
    pushforward2,
)
from .deciders import (
    ModelExistenceProblem,
    Verdict,
    decide_gu,
    decide_hxh,
    decide_model_existence,
    decide_tits,
    tits_class,
    verify_certificate,
)

__version__ = "0.1.0"
