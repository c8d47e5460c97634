//! Ext and Tor dimensions from free resolutions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::modrep::{same_algebra, Bimodule, LeftModule};

use super::resolution::FreeResolution;

/// Why a vanishing verdict extends to all degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    None,
    /// `Ω^i ≅ Ω^j`: degree `t > i` agrees with degree `t + (j - i)`.
    Periodic { i: usize, j: usize },
    /// The resolution stops: `F_t = 0` for `t > length`.
    Terminates { length: usize },
}

/// Vanishing of the table in all degrees `>= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Vanishing {
    Certified,
    UpToBound,
    FailsAt { degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTorTable {
    /// `dims[i]` for `i = 0..=bound`, or fewer when computation stopped at a nonzero degree
    pub dims: Vec<usize>,
    pub bound: usize,
    pub certificate: Certificate,
}

impl ExtTorTable {
    pub fn vanishing(&self) -> Vanishing {
        if let Some(t) = (1..self.dims.len()).find(|&t| self.dims[t] != 0) {
            return Vanishing::FailsAt { degree: t };
        }
        let checked = self.dims.len().saturating_sub(1);
        let certified = match self.certificate {
            Certificate::None => false,
            Certificate::Periodic { j, .. } => j <= checked,
            Certificate::Terminates { length } => length <= checked,
        };
        if certified {
            Vanishing::Certified
        } else {
            Vanishing::UpToBound
        }
    }
}

fn certificate(res: &mut FreeResolution, bound: usize, search: bool) -> Certificate {
    if let Some(length) = res.length() {
        return Certificate::Terminates { length };
    }
    if search {
        if let Some((i, j)) = res.periodicity(bound) {
            return Certificate::Periodic { i, j };
        }
    }
    Certificate::None
}

/// Matrix of `Hom(d_i, N) : N^{r_{i-1}} → N^{r_i}`; block `(j, l)` is `Σ_b g[(l,b), j] N_b`.
pub fn hom_differential(res: &mut FreeResolution, n: &LeftModule, i: usize) -> Matrix {
    let g = res.generator_images(i);
    let nd = n.dim();
    let nn = res.algebra().dim();
    let (r_prev, r_i) = (g.rows() / nn.max(1), g.cols());
    let mut out = Matrix::zeros(n.field(), r_i * nd, r_prev * nd);
    if nd == 0 {
        return out;
    }
    for row in 0..g.rows() {
        let (l, b) = (row / nn, row % nn);
        for (j, &c) in g.row(row).iter().enumerate() {
            if c != 0 {
                out.add_scaled_block(j * nd, l * nd, c, n.action(b));
            }
        }
    }
    out
}

/// Matrix of `X ⊗ d_i : X^{r_i} → X^{r_{i-1}}` for a right module `X` (a left module over
/// the opposite algebra); block `(l, j)` is `Σ_b g[(l,b), j] P_b`.
pub fn tensor_differential(x: &LeftModule, res: &mut FreeResolution, i: usize) -> Matrix {
    let g = res.generator_images(i);
    let xd = x.dim();
    let nn = res.algebra().dim();
    let (r_prev, r_i) = (g.rows() / nn.max(1), g.cols());
    let mut out = Matrix::zeros(x.field(), r_prev * xd, r_i * xd);
    if xd == 0 {
        return out;
    }
    for row in 0..g.rows() {
        let (l, b) = (row / nn, row % nn);
        for (j, &c) in g.row(row).iter().enumerate() {
            if c != 0 {
                out.add_scaled_block(l * xd, j * xd, c, x.action(b));
            }
        }
    }
    out
}

/// `dim Ext^i(m, n)` for `i <= bound` from a resolution of `m`. With `stop_at_nonzero`, stops at
/// the first nonzero degree `>= 1`.
pub fn ext_dims_res(res: &mut FreeResolution, n: &LeftModule, bound: usize, stop_at_nonzero: bool) -> Result<ExtTorTable> {
    if !same_algebra(res.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch("Ext between modules over different algebras".into()));
    }
    let nd = n.dim();
    let mut dims = Vec::with_capacity(bound + 1);
    // rank of Hom(d_i, N); d_0 contributes nothing
    let mut rank_in = 0;
    for i in 0..=bound {
        let r_i = res.rank(i);
        let rank_out = if r_i == 0 || nd == 0 {
            0
        } else {
            linalg::rank(&hom_differential(res, n, i + 1))
        };
        let d = r_i * nd - rank_out - rank_in;
        dims.push(d);
        rank_in = rank_out;
        if stop_at_nonzero && i >= 1 && d != 0 {
            break;
        }
    }
    let search = !stop_at_nonzero || dims.iter().skip(1).all(|&d| d == 0);
    Ok(ExtTorTable {
        dims,
        bound,
        certificate: certificate(res, bound, search),
    })
}

/// `dim Tor_i(x, m)` for a right module `x` (over `A^op`) and a resolution of `m`.
pub fn tor_dims_res(x: &LeftModule, res: &mut FreeResolution, bound: usize, stop_at_nonzero: bool) -> Result<ExtTorTable> {
    if !x.algebra().same_structure(&res.algebra().opposite()) {
        return Err(Error::AlgebraMismatch("Tor needs a right module over the resolved algebra".into()));
    }
    let xd = x.dim();
    let mut dims = Vec::with_capacity(bound + 1);
    let mut rank_out = 0;
    for i in 0..=bound {
        let r_i = res.rank(i);
        let rank_in = if r_i == 0 || xd == 0 {
            0
        } else {
            linalg::rank(&tensor_differential(x, res, i + 1))
        };
        let d = r_i * xd - rank_in - rank_out;
        dims.push(d);
        rank_out = rank_in;
        if stop_at_nonzero && i >= 1 && d != 0 {
            break;
        }
    }
    let search = !stop_at_nonzero || dims.iter().skip(1).all(|&d| d == 0);
    Ok(ExtTorTable {
        dims,
        bound,
        certificate: certificate(res, bound, search),
    })
}

pub fn ext_dims(m: &LeftModule, n: &LeftModule, bound: usize) -> Result<ExtTorTable> {
    ext_dims_res(&mut FreeResolution::new(m), n, bound, false)
}

/// `dim Tor^R_i(C, m)`.
pub fn tor_dims(c: &Bimodule, m: &LeftModule, bound: usize) -> Result<ExtTorTable> {
    if !same_algebra(c.right_algebra(), m.algebra()) {
        return Err(Error::AlgebraMismatch("C and m are over different rings".into()));
    }
    tor_dims_res(c.right(), &mut FreeResolution::new(m), bound, false)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{square_zero_local_ring, truncated_polynomial_ring};
    use crate::field::PrimeField;
    use crate::modrep::{dual_bimodule, simple_module};

    #[test]
    fn ext_over_dual_numbers() {
        let a = Arc::new(truncated_polynomial_ring(PrimeField::new(2).unwrap(), 2).unwrap());
        let k = simple_module(&a);
        let t = ext_dims(&k, &k, 5).unwrap();
        assert_eq!(t.dims, vec![1; 6]);
        assert_eq!(t.certificate, Certificate::Periodic { i: 0, j: 1 });
        assert_eq!(t.vanishing(), Vanishing::FailsAt { degree: 1 });

        let free = LeftModule::free(a.clone(), 2);
        let t = ext_dims(&free, &k, 4).unwrap();
        assert_eq!(t.dims, vec![2, 0, 0, 0, 0]);
        assert_eq!(t.vanishing(), Vanishing::Certified);
        let z = ext_dims(&LeftModule::zero(a.clone()), &k, 3).unwrap();
        assert_eq!(z.dims, vec![0; 4]);

        let c = Bimodule::regular(a);
        assert_eq!(tor_dims(&c, &k, 3).unwrap().dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn tor_against_dualizing_module_is_nonzero() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(2).unwrap(), 2).unwrap());
        let omega = dual_bimodule(&Bimodule::regular(a.clone()));
        let k = simple_module(&a);
        let t = tor_dims(&omega, &k, 2).unwrap();
        assert!(t.dims[1] > 0);
    }
}
