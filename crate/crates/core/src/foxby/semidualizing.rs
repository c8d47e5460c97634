//! Semidualizing and faithfulness checks.

use serde::Serialize;

use crate::algebra::{quotient_algebra, semisimple_annihilator, Algebra};
use crate::error::Result;
use crate::homology::{ext_dims_res, FreeResolution};
use crate::modrep::{Bimodule, LeftModule};

use super::maps::homothety_maps;
use super::report::{Condition, Overall, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidualizingReport {
    pub conditions: Vec<Condition>,
    pub bound: usize,
    pub overall: Overall,
}

impl SemidualizingReport {
    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }
}

pub fn check_semidualizing(c: &Bimodule, bound: usize) -> Result<SemidualizingReport> {
    let mut conditions = vec![
        Condition::new("a1", Status::Pass, "finite dimensional over the left algebra"),
        Condition::new("a2", Status::Pass, "finite dimensional over the right algebra"),
    ];
    let h = homothety_maps(c)?;
    for (label, map, side) in [("b1", &h.gamma_s, "S"), ("b2", &h.gamma_r, "R")] {
        let (src, tgt) = (map.source.dim(), map.target.dim());
        let ok = map.is_iso();
        let note = if ok {
            format!("homothety on {side} is bijective")
        } else {
            format!("homothety on {side} has rank {} from dimension {src} into dimension {tgt}", map.rank())
        };
        conditions.push(Condition::from_bool(label, ok, note).with_dims(vec![src, tgt]));
    }
    for (label, side, what) in [
        ("c1", c.left(), "Ext_S(C,C)"),
        ("c2", c.right(), "Ext_R^op(C,C)"),
    ] {
        let table = ext_dims_res(&mut FreeResolution::new(side), side, bound, true)?;
        conditions.push(Condition::from_table(label, &table, what));
    }
    let overall = Overall::combine(&conditions);
    Ok(SemidualizingReport {
        conditions,
        bound,
        overall,
    })
}

/// Result of the faithfulness test on one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulSide {
    /// dimension of `top(C)`
    pub top_dim: usize,
    /// basis of the annihilator of `top(C)` in the semisimple quotient, in its coordinates
    pub annihilator: Vec<Vec<u32>>,
}

impl FaithfulSide {
    pub fn is_faithful(&self) -> bool {
        self.annihilator.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulReport {
    pub left: FaithfulSide,
    pub right: FaithfulSide,
    pub faithful: bool,
}

/// `top(m) = m/Jm` as a module over `A/J`, tested for faithfulness.
fn faithful_side(m: &LeftModule) -> Result<FaithfulSide> {
    let a: &Algebra = m.algebra();
    let rad = &a.radical().basis;
    let (top, _) = m.quotient(&m.radical_part(rad));
    let qa = quotient_algebra(a, rad)?;
    let action: Vec<_> = qa
        .section
        .columns()
        .iter()
        .map(|u| Algebra::combine(top.actions(), u))
        .collect();
    let ann = semisimple_annihilator(&qa.algebra, &action)?;
    Ok(FaithfulSide {
        top_dim: top.dim(),
        annihilator: ann.columns(),
    })
}

/// `Hom_S(C, N) = 0 ⇒ N = 0` on both sides, reduced to simple modules: every simple
/// module over `S/J(S)` must occur in `top(C)`, i.e. its annihilator there is zero.
pub fn check_faithful(c: &Bimodule) -> Result<FaithfulReport> {
    let left = faithful_side(c.left())?;
    let right = faithful_side(c.right())?;
    let faithful = left.is_faithful() && right.is_faithful();
    Ok(FaithfulReport { left, right, faithful })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{matrix_ring, square_zero_local_ring, triangular_ring};
    use crate::field::PrimeField;
    use crate::homology::Certificate;
    use crate::modrep::dual_bimodule;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn regular_bimodule_is_certified() {
        let a = Arc::new(triangular_ring(f(2), 1).unwrap());
        let r = check_semidualizing(&Bimodule::regular(a.clone()), 8).unwrap();
        assert_eq!(r.overall, Overall::Yes);
        // T1 is not local, so generators of the free module need not be minimal
        assert!(matches!(
            r.condition("c1").unwrap().certificate,
            Some(Certificate::Terminates { .. } | Certificate::Periodic { .. })
        ));
        assert!(check_faithful(&Bimodule::regular(a)).unwrap().faithful);
    }

    #[test]
    fn rank_two_free_fails_b2_with_four_times_dimension() {
        let a = Arc::new(matrix_ring(f(3), 2).unwrap());
        let reg = Bimodule::regular(a.clone());
        let c = Bimodule::direct_sum(&[&reg, &reg]).unwrap();
        let r = check_semidualizing(&c, 4).unwrap();
        assert_eq!(
            r.overall,
            Overall::No {
                failing: vec!["b1".into(), "b2".into()]
            }
        );
        let b2 = r.condition("b2").unwrap();
        assert_eq!(b2.status, Status::Fail);
        assert_eq!(b2.dims, vec![4, 16]);
    }

    #[test]
    fn dualizing_module_is_semidualizing_up_to_bound() {
        let a = Arc::new(square_zero_local_ring(f(2), 2).unwrap());
        let c = dual_bimodule(&Bimodule::regular(a));
        let r = check_semidualizing(&c, 4).unwrap();
        assert!(r.overall.is_yes(), "{r:?}");
        assert!(check_faithful(&c).unwrap().faithful);
    }

    #[test]
    fn zero_bimodule_is_not_faithful() {
        let a = Arc::new(matrix_ring(f(2), 2).unwrap());
        let side = faithful_side(&LeftModule::zero(a)).unwrap();
        assert!(!side.is_faithful());
    }
}
