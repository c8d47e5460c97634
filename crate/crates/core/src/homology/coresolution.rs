//! Injective coresolutions as duals of free resolutions over the opposite algebra.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::modrep::{dual, hom_map, hom_space, same_algebra, LeftModule};

use super::complex::ChainComplex;
use super::exttor::{Certificate, ExtTorTable};
use super::resolution::FreeResolution;

/// `0 → n → I^0 → I^1 → …` with `I^j = D(F_j)` for a free resolution `F` of `D(n)`.
#[derive(Clone, Debug)]
pub struct InjectiveCoresolution {
    module: LeftModule,
    dual_res: FreeResolution,
}

impl InjectiveCoresolution {
    pub fn new(n: &LeftModule) -> Self {
        InjectiveCoresolution {
            module: n.clone(),
            dual_res: FreeResolution::new(&dual(n)),
        }
    }

    pub fn module(&self) -> &LeftModule {
        &self.module
    }
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.module.algebra()
    }

    pub fn length(&self) -> Option<usize> {
        self.dual_res.length()
    }

    pub fn term_dim(&mut self, j: usize) -> usize {
        self.dual_res.rank(j) * self.algebra().dim()
    }

    /// `I^j` as a left module.
    pub fn term(&mut self, j: usize) -> LeftModule {
        dual(&self.dual_res.free_module(j))
            .rebase(self.algebra().clone())
            .expect("double opposite")
    }

    /// `n → I^0`
    pub fn coaugmentation(&mut self) -> Matrix {
        self.dual_res.augmentation().transpose()
    }

    /// `I^j → I^{j+1}`
    pub fn codifferential(&mut self, j: usize) -> Matrix {
        self.dual_res.differential(j + 1).transpose()
    }

    /// The augmented coresolution with `n` in degree 0 and `I^j` in degree `-1-j`.
    pub fn augmented_complex(&mut self, len: usize) -> ChainComplex {
        let f = self.module.field();
        let mut dims_desc = vec![self.module.dim()];
        let mut maps_desc = vec![self.coaugmentation()];
        dims_desc.push(self.term_dim(0));
        for j in 0..len {
            maps_desc.push(self.codifferential(j));
            dims_desc.push(self.term_dim(j + 1));
        }
        ChainComplex::from_descending(f, -1 - len as i64, dims_desc, maps_desc)
            .expect("coresolution shapes")
    }
}

/// Augmented injective coresolution of `n` through `I^length`.
pub fn injective_coresolution(n: &LeftModule, length: usize) -> ChainComplex {
    InjectiveCoresolution::new(n).augmented_complex(length)
}

/// `dim Ext^i(m, n)` from `Hom(m, I^•)`: an independent route to [`super::ext_dims`].
pub fn ext_dims_injective(m: &LeftModule, n: &LeftModule, bound: usize) -> Result<ExtTorTable> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch("Ext between modules over different algebras".into()));
    }
    let mut cores = InjectiveCoresolution::new(n);
    let mut spaces = Vec::new();
    for j in 0..=bound + 1 {
        let t = cores.term(j);
        spaces.push(hom_space(m, &t)?);
    }
    let mut ranks = Vec::new();
    for j in 0..=bound {
        let d = cores.codifferential(j);
        ranks.push(linalg::rank(&hom_map(&d, &spaces[j], &spaces[j + 1])));
    }
    let dims = (0..=bound)
        .map(|i| spaces[i].dim() - ranks[i] - if i == 0 { 0 } else { ranks[i - 1] })
        .collect();
    let certificate = match cores.length() {
        Some(length) => Certificate::Terminates { length },
        None => Certificate::None,
    };
    Ok(ExtTorTable {
        dims,
        bound,
        certificate,
    })
}

/// Splices `… → P_0 → m → 0` (with `m` in degree `-1`) and `0 → m → U^0 → …` (with `m` in
/// degree 0) into `… → P_1 → P_0 → U^0 → U^1 → …`, `P_i` in degree `i`, `U^j` in degree `-1-j`.
pub fn splice(proj: &ChainComplex, cores: &ChainComplex, m_dim: usize) -> Result<ChainComplex> {
    if proj.lowest() != -1 || cores.highest() != 0 {
        return Err(Error::EndpointMismatch(format!(
            "expected an augmented resolution ending in degree -1 and a coresolution starting in degree 0, got {} and {}",
            proj.lowest(),
            cores.highest()
        )));
    }
    if proj.dim(-1) != m_dim || cores.dim(0) != m_dim {
        return Err(Error::EndpointMismatch(format!(
            "middle terms have dimensions {} and {}, expected {m_dim}",
            proj.dim(-1),
            cores.dim(0)
        )));
    }
    let (aug, coaug) = (proj.d(0), cores.d(0));
    if linalg::rank(&aug) != m_dim || linalg::rank(&coaug) != m_dim {
        return Err(Error::EndpointMismatch(
            "augmentation must be onto and coaugmentation one-to-one".into(),
        ));
    }
    splice_unchecked(proj, cores)
}

/// [`splice`] without the endpoint checks, for complexes that need not be exact at `m`.
pub fn splice_unchecked(proj: &ChainComplex, cores: &ChainComplex) -> Result<ChainComplex> {
    let (aug, coaug) = (proj.d(0), cores.d(0));
    let f = proj.field();
    let mut dims = Vec::new();
    let mut diffs = Vec::new();
    for n in cores.lowest()..=-1 {
        dims.push(cores.dim(n));
        if n < -1 {
            diffs.push(cores.d(n + 1));
        }
    }
    diffs.push(coaug.mul(&aug));
    for n in 0..=proj.highest() {
        dims.push(proj.dim(n));
        if n >= 1 {
            diffs.push(proj.d(n));
        }
    }
    ChainComplex::new(f, cores.lowest(), dims, diffs)
}
