//! Semidualizing bimodules, Auslander and Bass classes, and the constructions around them.

mod base_change;
mod characterize;
mod equivalence;
mod hha;
mod maps;
mod membership;
mod precover;
mod report;
mod semidualizing;

pub use base_change::{base_change_bimodule, tensor_embedding};
pub use characterize::{bcschar_complex, theorem2_complex, SplicedComplex};
pub use equivalence::{cclass_membership, foxby_backward, foxby_forward, CClass, CClassReport, RoundTrip};
pub use hha::{ext_module, hha_compare, homeval_dims, symmetric_bimodule, tensoreval_dims, HhaInput, HhaTable};
pub use maps::{
    hom_left_module, hom_right_module, homothety_maps, left_right_inverses, mu_map, nu_map, omega_map,
    theta_map, EvaluationMap, Homotheties, MuMap, NuMap,
};
pub use membership::{auslander_membership, bass_membership, ClassKind, FoxbyContext, MembershipReport};
pub use precover::{
    ic_preenvelope, injective_cogenerator, pc_precover, precover_map, preenvelope_map, PrecoverCertificate,
};
pub use report::{Condition, Overall, Status};
pub use semidualizing::{check_faithful, check_semidualizing, FaithfulReport, FaithfulSide, SemidualizingReport};
