//! Auslander and Bass class membership.

use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{ext_dims_res, tor_dims_res, FreeResolution};
use crate::modrep::{same_algebra, Bimodule, LeftModule};

use super::maps::{mu_map, nu_map};
use super::report::{Condition, Overall};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Auslander,
    Bass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub class: ClassKind,
    pub conditions: Vec<Condition>,
    pub bound: usize,
    pub verdict: Overall,
}

impl MembershipReport {
    fn new(class: ClassKind, conditions: Vec<Condition>, bound: usize) -> Self {
        let verdict = Overall::combine(&conditions);
        MembershipReport {
            class,
            conditions,
            bound,
            verdict,
        }
    }

    pub fn is_member(&self) -> bool {
        self.verdict.is_yes()
    }

    /// First failing condition.
    pub fn witness(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.failed())
    }
}

/// A bimodule with a bound and the free resolutions of `C` on both sides, shared by
/// repeated checks.
pub struct FoxbyContext {
    c: Bimodule,
    bound: usize,
    c_res: Mutex<FreeResolution>,
    c_right_res: Mutex<FreeResolution>,
    /// whether the resolution of `C_R` ends or repeats within a few degrees
    right_certified: OnceLock<bool>,
}

/// Degrees searched for a short resolution of `C_R` before Tor falls back to resolving `M`.
const RIGHT_SEARCH: usize = 4;

impl FoxbyContext {
    pub fn new(c: &Bimodule, bound: usize) -> Self {
        FoxbyContext {
            c: c.clone(),
            bound,
            c_res: Mutex::new(FreeResolution::new(c.left())),
            c_right_res: Mutex::new(FreeResolution::new(c.right())),
            right_certified: OnceLock::new(),
        }
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.c
    }
    pub fn bound(&self) -> usize {
        self.bound
    }

    fn ext_from_c(&self, n: &LeftModule, label: &str, what: &str) -> Result<Condition> {
        let mut res = self.c_res.lock().expect("resolution lock");
        let t = ext_dims_res(&mut res, n, self.bound, true)?;
        Ok(Condition::from_table(label, &t, what))
    }

    /// `Tor_R(C, m)` from whichever side has the shorter resolution: `C_R` when its
    /// resolution ends or is periodic early, otherwise `m`.
    fn tor_with_c(&self, m: &LeftModule, label: &str, what: &str) -> Result<Condition> {
        let certified = *self.right_certified.get_or_init(|| {
            let mut res = self.c_right_res.lock().expect("resolution lock");
            let upto = self.bound.min(RIGHT_SEARCH);
            res.extend_to(upto);
            res.length().is_some() || res.periodicity(upto).is_some()
        });
        let t = if certified {
            let mut res = self.c_right_res.lock().expect("resolution lock");
            tor_dims_res(m, &mut res, self.bound, true)?
        } else {
            tor_dims_res(self.c.right(), &mut FreeResolution::new(m), self.bound, true)?
        };
        Ok(Condition::from_table(label, &t, what))
    }

    pub fn auslander(&self, m: &LeftModule) -> Result<MembershipReport> {
        if !same_algebra(m.algebra(), self.c.right_algebra()) {
            return Err(Error::AlgebraMismatch(
                "Auslander class membership needs a module over the right algebra".into(),
            ));
        }
        let a1 = self.tor_with_c(m, "A1", "Tor_R(C,M)")?;
        let mu = mu_map(&self.c, m)?;
        let a2 = self.ext_from_c(&mu.tensor.module, "A2", "Ext_S(C,C⊗M)")?;
        let ok = mu.map.is_iso();
        let a3 = Condition::from_bool("A3", ok, iso_note("μ_M", mu.map.rank(), m.dim(), mu.hom.module.dim()))
            .with_dims(vec![m.dim(), mu.hom.module.dim()]);
        Ok(MembershipReport::new(ClassKind::Auslander, vec![a1, a2, a3], self.bound))
    }

    pub fn bass(&self, n: &LeftModule) -> Result<MembershipReport> {
        if !same_algebra(n.algebra(), self.c.left_algebra()) {
            return Err(Error::AlgebraMismatch(
                "Bass class membership needs a module over the left algebra".into(),
            ));
        }
        let b1 = self.ext_from_c(n, "B1", "Ext_S(C,N)")?;
        let nu = nu_map(&self.c, n)?;
        let b2 = self.tor_with_c(&nu.hom.module, "B2", "Tor_R(C,Hom_S(C,N))")?;
        let ok = nu.map.is_iso();
        let b3 = Condition::from_bool("B3", ok, iso_note("ν_N", nu.map.rank(), nu.tensor.module.dim(), n.dim()))
            .with_dims(vec![nu.tensor.module.dim(), n.dim()]);
        Ok(MembershipReport::new(ClassKind::Bass, vec![b1, b2, b3], self.bound))
    }
}

fn iso_note(name: &str, rank: usize, src: usize, tgt: usize) -> String {
    if rank == src && src == tgt {
        format!("{name} is bijective")
    } else {
        format!("{name} has rank {rank} from dimension {src} into dimension {tgt}")
    }
}

pub fn auslander_membership(c: &Bimodule, m: &LeftModule, bound: usize) -> Result<MembershipReport> {
    FoxbyContext::new(c, bound).auslander(m)
}

pub fn bass_membership(c: &Bimodule, n: &LeftModule, bound: usize) -> Result<MembershipReport> {
    FoxbyContext::new(c, bound).bass(n)
}
