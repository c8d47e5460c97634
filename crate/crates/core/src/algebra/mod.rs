//! Finite-dimensional associative `F_p`-algebras given by structure constants.

mod constructors;
mod radical;

pub use constructors::{
    cyclic_group_table, direct_product, group_ring, matrix_ring, square_zero_local_ring, tensor_algebra, triangular_ring,
    truncated_polynomial_ring,
};
pub use radical::{jacobson_radical, nilpotency_index, quotient_algebra, semisimple_annihilator, QuotientAlgebra, RadicalReport};

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{self, Echelon};
use crate::matrix::Matrix;

/// `e_i * e_j = Σ_k table[(i*n + j)*n + k] e_k`, with a designated unit `one`.
#[derive(Clone)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    table: Vec<u32>,
    one: Vec<u32>,
    name: String,
    generators: OnceLock<Vec<usize>>,
    radical: OnceLock<RadicalReport>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other) && self.name == other.name
    }
}

impl Eq for Algebra {}

impl Hash for Algebra {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.dim.hash(state);
        self.table.hash(state);
        self.one.hash(state);
        self.name.hash(state);
    }
}

/// First failing law found by [`Algebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::Associativity { i, j, k } => {
                write!(f, "(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
            }
            AlgebraViolation::LeftUnit { i } => write!(f, "1 * e{i} != e{i}"),
            AlgebraViolation::RightUnit { i } => write!(f, "e{i} * 1 != e{i}"),
        }
    }
}

impl Algebra {
    /// Checks shapes only; the algebra laws are checked by [`Algebra::validate`].
    pub fn new(
        field: PrimeField,
        dim: usize,
        table: Vec<u32>,
        one: Vec<u32>,
        name: impl Into<String>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedTable("dimension must be at least 1".into()));
        }
        if table.len() != dim * dim * dim {
            return Err(Error::MalformedTable(format!(
                "table has {} entries, expected {}",
                table.len(),
                dim * dim * dim
            )));
        }
        if one.len() != dim {
            return Err(Error::MalformedTable(format!(
                "unit has {} coordinates, expected {dim}",
                one.len()
            )));
        }
        let p = field.p();
        Ok(Algebra {
            field,
            dim,
            table: table.into_iter().map(|x| x % p).collect(),
            one: one.into_iter().map(|x| x % p).collect(),
            name: name.into(),
            generators: OnceLock::new(),
            radical: OnceLock::new(),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn one(&self) -> &[u32] {
        &self.one
    }
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Number of elements `p^dim`, saturating.
    pub fn order(&self) -> u64 {
        (self.field.p() as u64).saturating_pow(self.dim as u32)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// Product of two coordinate vectors.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0u32; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let c = f.mul(x[i], y[j]);
                for (k, o) in out.iter_mut().enumerate() {
                    let t = self.constant(i, j, k);
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y` on coordinate columns.
    pub fn left_mult(&self, x: &[u32]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = self.mul(x, &self.basis_vector(j));
            for (k, &v) in col.iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Matrix of `y ↦ y x` on coordinate columns.
    pub fn right_mult(&self, x: &[u32]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = self.mul(&self.basis_vector(j), x);
            for (k, &v) in col.iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Left regular action matrices, one per basis element.
    pub fn left_regular(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.left_mult(&self.basis_vector(i)))
            .collect()
    }

    pub fn validate(&self) -> std::result::Result<(), AlgebraViolation> {
        let n = self.dim;
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul(&self.one, &e) != e {
                return Err(AlgebraViolation::LeftUnit { i });
            }
            if self.mul(&e, &self.one) != e {
                return Err(AlgebraViolation::RightUnit { i });
            }
        }
        let basis: Vec<Vec<u32>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let prods: Vec<Vec<Vec<u32>>> = (0..n)
            .map(|i| (0..n).map(|j| self.mul(&basis[i], &basis[j])).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(&prods[i][j], &basis[k]);
                    let rhs = self.mul(&basis[i], &prods[j][k]);
                    if lhs != rhs {
                        return Err(AlgebraViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra: `e_i *op e_j = e_j * e_i`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut table = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    table[(i * n + j) * n + k] = self.constant(j, i, k);
                }
            }
        }
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Algebra {
            field: self.field,
            dim: n,
            table,
            one: self.one.clone(),
            name,
            generators: OnceLock::new(),
            radical: OnceLock::new(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.constant(i, j, k) == self.constant(j, i, k))))
    }

    /// Same multiplication table and unit, ignoring the label.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table && self.one == other.one
    }

    /// A small set of basis indices generating the algebra, chosen greedily.
    ///
    /// Hom and tensor relations only need to be imposed for generators.
    pub fn generators(&self) -> Vec<usize> {
        self.generators.get_or_init(|| self.compute_generators()).clone()
    }

    /// The Jacobson radical, computed once per algebra value.
    pub fn radical(&self) -> &RadicalReport {
        self.radical.get_or_init(|| jacobson_radical(self))
    }

    fn compute_generators(&self) -> Vec<usize> {
        let n = self.dim;
        let mut gens = Vec::new();
        let mut span = Echelon::new(self.field, n);
        span.insert(&self.one);
        let mut elems = vec![self.one.clone()];
        for cand in 0..n {
            let e = self.basis_vector(cand);
            if span.contains(&e) {
                continue;
            }
            gens.push(cand);
            // close the span under multiplication by chosen generators
            span.insert(&e);
            elems.push(e);
            let mut frontier = elems.clone();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let ge = self.basis_vector(g);
                    for y in [self.mul(&x, &ge), self.mul(&ge, &x)] {
                        if span.insert(&y) {
                            elems.push(y.clone());
                            frontier.push(y);
                        }
                    }
                }
            }
            if span.dim() == n {
                break;
            }
        }
        if gens.is_empty() && n > 0 {
            // the algebra is spanned by its unit
            gens.push((0..n).find(|&i| self.one[i] != 0).unwrap_or(0));
        }
        gens
    }

    /// Coordinates of the structure as one matrix per basis element in a given
    /// linear combination: `Σ x_i A_i`.
    pub fn combine(mats: &[Matrix], x: &[u32]) -> Matrix {
        assert_eq!(mats.len(), x.len());
        let mut acc = Matrix::zeros(mats[0].field(), mats[0].rows(), mats[0].cols());
        for (m, &c) in mats.iter().zip(x) {
            acc.add_scaled_assign(c, m);
        }
        acc
    }

    /// Span of all products `x y` for `x` in the columns of `a`, `y` in the columns of `b`.
    pub fn product_span(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let mut cols = Vec::new();
        for i in 0..a.cols() {
            let x = a.column(i);
            for j in 0..b.cols() {
                cols.push(self.mul(&x, &b.column(j)));
            }
        }
        let m = Matrix::from_columns(self.field, self.dim, &cols);
        linalg::column_basis(&m)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({} over F_{}, dim {})", self.name, self.field.p(), self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_as_algebra_is_valid() {
        let a = Algebra::new(f(2), 1, vec![1], vec![1], "F2").unwrap();
        assert_eq!(a.validate(), Ok(()));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(Algebra::new(f(2), 2, vec![0; 7], vec![1, 0], "bad").is_err());
        assert!(Algebra::new(f(2), 2, vec![0; 8], vec![1], "bad").is_err());
        assert!(Algebra::new(f(2), 0, vec![], vec![], "bad").is_err());
    }

    #[test]
    fn flipped_constant_breaks_m2() {
        let m2 = matrix_ring(f(2), 2).unwrap();
        assert_eq!(m2.validate(), Ok(()));
        let mut table = m2.table().to_vec();
        // E12 * E21 = E11; flip the E22 coefficient of that product
        let n = 4;
        table[(n + 2) * n + 3] ^= 1;
        let broken = Algebra::new(f(2), 4, table, m2.one().to_vec(), "broken").unwrap();
        assert!(matches!(
            broken.validate(),
            Err(AlgebraViolation::Associativity { .. })
        ));
    }

    #[test]
    fn opposite_examples() {
        let dual_numbers = truncated_polynomial_ring(f(2), 2).unwrap();
        assert_eq!(dual_numbers.opposite().table(), dual_numbers.table());

        let m2 = matrix_ring(f(2), 2).unwrap();
        let op = m2.opposite();
        assert_eq!(op.validate(), Ok(()));
        // basis order E11, E12, E21, E22
        let (e12, e21) = (m2.basis_vector(1), m2.basis_vector(2));
        assert_eq!(op.mul(&e12, &e21), m2.mul(&e21, &e12));
        assert_eq!(op.mul(&e21, &e12), m2.mul(&e12, &e21));

        let m3 = matrix_ring(f(3), 2).unwrap();
        assert!(m3.opposite().opposite().same_structure(&m3));
    }

    #[test]
    fn generators_generate() {
        let m2 = matrix_ring(f(3), 2).unwrap();
        let g = m2.generators();
        assert!(g.len() <= 3);
        let local = square_zero_local_ring(f(2), 2).unwrap();
        assert_eq!(local.generators(), vec![1, 2]);
    }
}
