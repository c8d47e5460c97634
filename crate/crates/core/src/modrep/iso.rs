//! Three-valued isomorphism test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::functor::hom_basis;
use super::LeftModule;
use crate::error::Result;
use crate::linalg;
use crate::matrix::Matrix;

const EXHAUSTIVE_LIMIT: u64 = 4096;
const RANDOM_TRIALS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An invertible intertwiner `m → n`.
    Yes(Matrix),
    No(String),
    Unknown,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }
}

fn invertible(x: &Matrix) -> bool {
    linalg::rank(x) == x.rows()
}

/// Never answers a wrong yes or no: `No` comes from a dimension count or from an exhaustive
/// search of `Hom(m, n)`, `Yes` always carries a checked witness.
pub fn iso_test(m: &LeftModule, n: &LeftModule) -> Result<IsoVerdict> {
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::No(format!("dimensions {} and {}", m.dim(), n.dim())));
    }
    let f = m.field();
    if m.dim() == 0 {
        return Ok(IsoVerdict::Yes(Matrix::zeros(f, 0, 0)));
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(IsoVerdict::No("Hom(m, n) = 0".into()));
    }
    let end_m = hom_basis(m, m)?.len();
    if end_m != basis.len() {
        return Ok(IsoVerdict::No(format!(
            "dim End(m) = {end_m} but dim Hom(m, n) = {}",
            basis.len()
        )));
    }
    let end_n = hom_basis(n, n)?.len();
    if end_n != basis.len() {
        return Ok(IsoVerdict::No(format!(
            "dim End(n) = {end_n} but dim Hom(m, n) = {}",
            basis.len()
        )));
    }
    let combine = |c: &[u32]| {
        let mut acc = Matrix::zeros(f, n.dim(), m.dim());
        for (b, &x) in basis.iter().zip(c) {
            acc.add_scaled_assign(x, b);
        }
        acc
    };
    for b in &basis {
        if invertible(b) {
            return Ok(IsoVerdict::Yes(b.clone()));
        }
    }
    let p = f.p() as u64;
    let h = basis.len();
    if p.checked_pow(h as u32).is_some_and(|t| t <= EXHAUSTIVE_LIMIT) {
        let total = p.pow(h as u32);
        let mut c = vec![0u32; h];
        for mut idx in 1..total {
            for x in c.iter_mut() {
                *x = (idx % p) as u32;
                idx /= p;
            }
            let cand = combine(&c);
            if invertible(&cand) {
                return Ok(IsoVerdict::Yes(cand));
            }
        }
        return Ok(IsoVerdict::No(format!(
            "no invertible element among all {total} elements of Hom(m, n)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150 ^ (h as u64) << 8 ^ m.dim() as u64);
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<u32> = (0..h).map(|_| rng.gen_range(0..f.p())).collect();
        let cand = combine(&c);
        if invertible(&cand) {
            return Ok(IsoVerdict::Yes(cand));
        }
    }
    Ok(IsoVerdict::Unknown)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::truncated_polynomial_ring;
    use crate::field::PrimeField;

    #[test]
    fn iso_examples() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(truncated_polynomial_ring(f, 2).unwrap());
        let r = LeftModule::regular(a.clone());
        assert!(iso_test(&r, &r).unwrap().is_yes());
        let kk = LeftModule::new(a.clone(), 2, vec![Matrix::identity(f, 2), Matrix::zeros(f, 2, 2)]).unwrap();
        assert!(iso_test(&kk, &r).unwrap().is_no());
        let k3 = LeftModule::free(a, 1).quotient(&Matrix::zeros(f, 2, 0)).0;
        assert!(iso_test(&k3, &r).unwrap().is_yes());
        let z = LeftModule::zero(r.algebra().clone());
        assert!(iso_test(&z, &r).unwrap().is_no());
    }
}
