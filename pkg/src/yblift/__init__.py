"""Exact rational checks and lifts for Yang-Baxter-type equations and
relative operator identities on small Lie algebras."""

from .algebra import (
    BilinearForm,
    GLieAlgebra,
    LieAlgebra,
    LinearMap,
    Representation,
    Space,
    abelian_algebra,
    adjoint_representation,
    check_invariant_form,
    check_representation,
    coadjoint_representation,
    dual_representation,
    identity_map,
    killing_form,
    map_from_matrix,
    module_target,
    self_target,
    semidirect_product,
    semidirect_with_module,
    trivial_representation,
    zero_map,
)
from .campaigns import CAMPAIGNS, CampaignResult, RunConfig, run
from .catalog import CatalogEntry, CatalogError, casimir_tensor, entries, get
from .lifts import (
    CoalgebraReport,
    LiftInternalError,
    LiftResult,
    cocommutator,
    double_algebra,
    dual_bracket_tables,
    invertible_o_operator_to_rb,
    lie_coalgebra_report,
    lift_baxter,
    lift_extended,
    lift_generalized,
    lift_o_operator,
    lift_rb_weight,
    o_operator_to_rb,
    reldiff_to_rb,
    skew_dual_bracket,
)
from .operators import (
    ExtensionChecks,
    antisymmetric_hom_report,
    cocycle_residuals,
    extended_o_residual,
    induced_bracket,
    induced_bracket_jacobi,
    o_operator_obstruction,
    o_operator_residual,
    o_operator_weighted_residual,
    relative_differential_residual,
    rota_baxter_residual,
    weighted_cocycle_residuals,
)
from .reports import Report
from .tensors import (
    Tensor2,
    Tensor3,
    is_skew,
    is_symmetric,
    map_to_tensor,
    simple_tensor,
    sym_skew_parts,
    tensor2_from_entries,
    tensor3_from_entries,
    tensor_to_map,
    twist,
    wedge,
    yang_baxter_brackets,
)
from .ybe import (
    SymmetricTensorChecks,
    cybe_residual,
    ecybe_residual,
    gcybe_residual,
    invariance_residual,
    is_invariant,
    kupershmidt_residual,
    modified_ybe_residual,
    symmetric_invariance_checks,
    table_is_zero,
)

__version__ = "0.1.0"
