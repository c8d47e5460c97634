//! Bounded chain complexes of finite-dimensional spaces.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg;
use crate::matrix::Matrix;

/// `X_lo ← X_{lo+1} ← … ← X_hi` with `d_n : X_n → X_{n-1}`; terms outside the window are zero.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    field: PrimeField,
    lowest: i64,
    dims: Vec<usize>,
    /// `diffs[t]` is `d_{lowest+t+1}`, a `dims[t] x dims[t+1]` matrix
    diffs: Vec<Matrix>,
}

/// Exactness verdict at one position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exactness {
    pub degree: i64,
    /// `dim ker d_n - dim im d_{n+1}`
    pub defect: usize,
}

impl Exactness {
    pub fn is_exact(&self) -> bool {
        self.defect == 0
    }
}

impl ChainComplex {
    pub fn new(field: PrimeField, lowest: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() {
            if !diffs.is_empty() {
                return Err(Error::DimensionMismatch("differentials without terms".into()));
            }
        } else if diffs.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} terms need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                diffs.len()
            )));
        }
        for (t, d) in diffs.iter().enumerate() {
            if d.shape() != (dims[t], dims[t + 1]) {
                return Err(Error::DimensionMismatch(format!(
                    "differential out of degree {} is {:?}, expected {}x{}",
                    lowest + t as i64 + 1,
                    d.shape(),
                    dims[t],
                    dims[t + 1]
                )));
            }
        }
        Ok(ChainComplex {
            field,
            lowest,
            dims,
            diffs,
        })
    }

    /// A complex given by its terms from the top degree down: `X_hi → … → X_lo`.
    pub fn from_descending(field: PrimeField, lowest: i64, dims_desc: Vec<usize>, maps_desc: Vec<Matrix>) -> Result<Self> {
        let mut dims = dims_desc;
        dims.reverse();
        let mut diffs = maps_desc;
        diffs.reverse();
        ChainComplex::new(field, lowest, dims, diffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn lowest(&self) -> i64 {
        self.lowest
    }
    pub fn highest(&self) -> i64 {
        self.lowest + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, n: i64) -> usize {
        if n < self.lowest {
            return 0;
        }
        self.dims.get((n - self.lowest) as usize).copied().unwrap_or(0)
    }

    /// `d_n : X_n → X_{n-1}`, a zero matrix outside the window.
    pub fn d(&self, n: i64) -> Matrix {
        let t = n - self.lowest - 1;
        if t >= 0 && (t as usize) < self.diffs.len() {
            self.diffs[t as usize].clone()
        } else {
            Matrix::zeros(self.field, self.dim(n - 1), self.dim(n))
        }
    }

    fn rank_d(&self, n: i64) -> usize {
        let t = n - self.lowest - 1;
        if t >= 0 && (t as usize) < self.diffs.len() {
            linalg::rank(&self.diffs[t as usize])
        } else {
            0
        }
    }

    /// `d_{n-1} d_n = 0` everywhere.
    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn exactness_at(&self, n: i64) -> Exactness {
        let dim = self.dim(n);
        let defect = dim - self.rank_d(n) - self.rank_d(n + 1);
        Exactness { degree: n, defect }
    }

    /// Exactness at each requested degree.
    pub fn is_exact(&self, at: impl IntoIterator<Item = i64>) -> Vec<Exactness> {
        at.into_iter().map(|n| self.exactness_at(n)).collect()
    }

    /// All degrees of the window.
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lowest..=self.highest()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactness_examples() {
        let f = PrimeField::new(2).unwrap();
        let id = ChainComplex::new(f, 0, vec![2, 2], vec![Matrix::identity(f, 2)]).unwrap();
        assert!(id.is_exact([0, 1]).iter().all(|e| e.is_exact()));
        let k = ChainComplex::new(f, 0, vec![1], vec![]).unwrap();
        assert_eq!(k.exactness_at(0).defect, 1);
        assert!(ChainComplex::new(f, 0, vec![2, 1], vec![Matrix::identity(f, 2)]).is_err());
    }
}
