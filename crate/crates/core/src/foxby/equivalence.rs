//! The Foxby equivalence functors and the C-projective, C-flat and C-injective classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modrep::{is_flat, is_injective, is_projective, same_algebra, Bimodule, LeftModule};

use super::maps::{mu_map, nu_map};
use super::membership::{FoxbyContext, MembershipReport};

/// One direction of the equivalence with its unit or counit.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    /// `C⊗m` (forward) or `Hom_S(C, n)` (backward)
    pub image: LeftModule,
    /// `μ_m : m → Hom_S(C, C⊗m)` or `ν_n : C⊗Hom_S(C, n) → n`
    pub witness: Matrix,
    pub invertible: bool,
}

impl RoundTrip {
    /// `(rows, cols)` of the witness; a mismatch already rules out an isomorphism.
    pub fn shape(&self) -> (usize, usize) {
        self.witness.shape()
    }
}

/// `m ↦ C ⊗_R m`, witnessed by `μ_m`.
pub fn foxby_forward(c: &Bimodule, m: &LeftModule) -> Result<RoundTrip> {
    let mu = mu_map(c, m)?;
    Ok(RoundTrip {
        invertible: mu.map.is_iso(),
        image: mu.tensor.module,
        witness: mu.map.matrix,
    })
}

/// `n ↦ Hom_S(C, n)`, witnessed by `ν_n`.
pub fn foxby_backward(c: &Bimodule, n: &LeftModule) -> Result<RoundTrip> {
    let nu = nu_map(c, n)?;
    Ok(RoundTrip {
        invertible: nu.map.is_iso(),
        image: nu.hom.module,
        witness: nu.map.matrix,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CClass {
    #[serde(rename = "F_C")]
    FlatC,
    #[serde(rename = "P_C")]
    ProjectiveC,
    #[serde(rename = "I_C")]
    InjectiveC,
}

#[derive(Clone, Debug, Serialize)]
pub struct CClassReport {
    pub class: CClass,
    pub member: bool,
    pub membership: MembershipReport,
    /// `Hom_S(C, v)` for `F_C`/`P_C`, `C⊗v` for `I_C`
    #[serde(skip)]
    pub companion: LeftModule,
    pub companion_dim: usize,
    /// whether the companion is flat, projective or injective as required
    pub companion_ok: bool,
    pub note: String,
}

/// `v ∈ P_C` (or `F_C`) iff `v ∈ B_C` and `Hom_S(C, v)` is projective (flat); `v ∈ I_C` iff
/// `v ∈ A_C` and `C⊗v` is injective.
pub fn cclass_membership(ctx: &FoxbyContext, v: &LeftModule, class: CClass) -> Result<CClassReport> {
    let c = ctx.bimodule();
    let (membership, companion, companion_ok, kind) = match class {
        CClass::FlatC | CClass::ProjectiveC => {
            if !same_algebra(v.algebra(), c.left_algebra()) {
                return Err(Error::AlgebraMismatch("C-projective and C-flat modules live over S".into()));
            }
            let membership = ctx.bass(v)?;
            let back = foxby_backward(c, v)?;
            let (ok, kind) = if class == CClass::FlatC {
                (is_flat(&back.image), "flat (equivalently projective for finite modules)")
            } else {
                (is_projective(&back.image), "projective")
            };
            (membership, back.image, ok, kind)
        }
        CClass::InjectiveC => {
            if !same_algebra(v.algebra(), c.right_algebra()) {
                return Err(Error::AlgebraMismatch("C-injective modules live over R".into()));
            }
            let membership = ctx.auslander(v)?;
            let fwd = foxby_forward(c, v)?;
            let ok = is_injective(&fwd.image);
            (membership, fwd.image, ok, "injective")
        }
    };
    let member = membership.is_member() && companion_ok;
    let note = format!(
        "companion of dimension {} is {}{kind}",
        companion.dim(),
        if companion_ok { "" } else { "not " }
    );
    Ok(CClassReport {
        class,
        member,
        membership,
        companion_dim: companion.dim(),
        companion,
        companion_ok,
        note,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::square_zero_local_ring;
    use crate::field::PrimeField;
    use crate::modrep::{dual, dual_bimodule, hom_from_bimodule, simple_module};

    #[test]
    fn dualizing_module_classes() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(2).unwrap(), 2).unwrap());
        let c = dual_bimodule(&Bimodule::regular(a.clone()));
        let ctx = FoxbyContext::new(&c, 5);
        let r = cclass_membership(&ctx, c.left(), CClass::ProjectiveC).unwrap();
        assert!(r.member, "{r:?}");
        assert_eq!(r.companion_dim, 3);
        assert!(cclass_membership(&ctx, c.left(), CClass::FlatC).unwrap().member);

        let e = dual(&LeftModule::regular(Arc::new(a.opposite()))).rebase(a.clone()).unwrap();
        let u = hom_from_bimodule(&c, &e).unwrap().module;
        assert!(cclass_membership(&ctx, &u, CClass::InjectiveC).unwrap().member);

        let k = simple_module(&a);
        let r = cclass_membership(&ctx, &k, CClass::InjectiveC).unwrap();
        assert!(!r.member);
        assert!(r.membership.witness().is_some());
    }

    #[test]
    fn round_trips_over_regular_bimodule() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(3).unwrap(), 2).unwrap());
        let c = Bimodule::regular(a.clone());
        let k = simple_module(&a);
        let f = foxby_forward(&c, &k).unwrap();
        assert!(f.invertible);
        assert_eq!(f.image.dim(), 1);
        let b = foxby_backward(&c, &LeftModule::regular(a)).unwrap();
        assert!(b.invertible);
        assert_eq!(b.shape(), (3, 3));
    }
}
