//! Jacobson radical, semisimple quotients and annihilators.
//!
//! The radical is computed with the iterated trace-form method for characteristic
//! `p`: starting from `I_{-1} = A`, each step keeps the `x ∈ I_{i-1}` with
//! `g_i(x y) = 0` for all `y`, where `g_i(x) = Tr(x̃^(p^i)) / p^i mod p` is read
//! off an integer lift `x̃` of the left regular matrix of `x`. After
//! `floor(log_p dim)` steps the ideal is the radical. The plain trace form
//! (`i = 0` only) is wrong in characteristic `p` as soon as `p <= dim`.

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{self, CanonicalQuotient};
use crate::matrix::Matrix;

/// Basis of `J(A)` (columns) and the least `t >= 1` with `J^t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub basis: Matrix,
    pub nilpotency_index: usize,
}

impl RadicalReport {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

fn trace_power_mod(x: &Matrix, power: u64, modulus: u128) -> u128 {
    let n = x.rows();
    let lift: Vec<u128> = x.data().iter().map(|&v| v as u128).collect();
    let mul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + aik * b[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut acc: Vec<u128> = (0..n * n).map(|i| u128::from(i % (n + 1) == 0)).collect();
    let mut base = lift;
    let mut e = power;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    (0..n).fold(0u128, |s, i| (s + acc[i * n + i]) % modulus)
}

/// The Jacobson radical: the largest nilpotent two-sided ideal.
pub fn jacobson_radical(a: &Algebra) -> RadicalReport {
    let field = a.field();
    let p = field.p() as u128;
    let n = a.dim();
    let mut steps = 0u32;
    while (p as u64).saturating_pow(steps + 1) <= n as u64 {
        steps += 1;
    }
    let mut current = Matrix::identity(field, n);
    for i in 0..=steps {
        if current.cols() == 0 {
            break;
        }
        let pi = p.pow(i);
        let modulus = pi * p;
        let d = current.cols();
        let mut conditions = Matrix::zeros(field, n, d);
        for t in 0..d {
            let v = current.column(t);
            for j in 0..n {
                let x = a.mul(&v, &a.basis_vector(j));
                let tr = trace_power_mod(&a.left_mult(&x), pi as u64, modulus);
                debug_assert_eq!(tr % pi, 0, "trace not divisible at step {i}");
                conditions.set(j, t, ((tr / pi) % p) as u32);
            }
        }
        let k = linalg::kernel(&conditions);
        current = current.mul(&k);
    }
    let basis = linalg::column_basis(&current);
    let nilpotency_index = nilpotency_index(a, &basis);
    RadicalReport {
        basis,
        nilpotency_index,
    }
}

/// Least `t >= 1` with `I^t = 0`, or `usize::MAX` when `I` is not nilpotent.
pub fn nilpotency_index(a: &Algebra, ideal: &Matrix) -> usize {
    let mut power = ideal.clone();
    let mut t = 1;
    while power.cols() > 0 {
        let next = a.product_span(&power, ideal);
        if next.cols() == power.cols() {
            return usize::MAX;
        }
        power = next;
        t += 1;
    }
    t
}

/// `A / I` for a two-sided ideal `I` with the canonical complement basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    /// `dim(A/I) x dim(A)`
    pub projection: Matrix,
    /// `dim(A) x dim(A/I)`, standard basis vectors lifting the quotient basis
    pub section: Matrix,
}

pub fn quotient_algebra(a: &Algebra, ideal: &Matrix) -> Result<QuotientAlgebra> {
    let field = a.field();
    let q = CanonicalQuotient::new(field, a.dim(), ideal);
    let m = q.dim();
    if m == 0 {
        return Err(Error::Invalid("quotient by the whole algebra".into()));
    }
    let lifts = q.section.columns();
    let mut table = vec![0u32; m * m * m];
    for i in 0..m {
        for j in 0..m {
            let prod = a.mul(&lifts[i], &lifts[j]);
            let img = q.projection.mul_vec(&prod);
            for (k, &v) in img.iter().enumerate() {
                table[(i * m + j) * m + k] = v;
            }
        }
    }
    let one = q.projection.mul_vec(a.one());
    let algebra = Algebra::new(field, m, table, one, format!("{}/J", a.name()))?;
    Ok(QuotientAlgebra {
        algebra,
        projection: q.projection,
        section: q.section,
    })
}

/// Annihilator `{b : b · m = 0}` of a module given by action matrices over an algebra
/// (one matrix per basis element). Returns a basis as columns in algebra coordinates.
///
/// Over a semisimple algebra the module contains every simple module exactly when this
/// annihilator vanishes.
pub fn semisimple_annihilator(a: &Algebra, action: &[Matrix]) -> Result<Matrix> {
    if action.len() != a.dim() {
        return Err(Error::AlgebraMismatch(format!(
            "{} action matrices for an algebra of dimension {}",
            action.len(),
            a.dim()
        )));
    }
    let field = a.field();
    let m = action.first().map_or(0, |x| x.rows());
    let cols: Vec<Vec<u32>> = action.iter().map(|x| x.flatten()).collect();
    let system = Matrix::from_columns(field, m * m, &cols);
    Ok(linalg::kernel(&system))
}
