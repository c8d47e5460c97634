//! Hom, tensor and linear duality, with their induced module structures.

use std::sync::Arc;

use super::{same_algebra, Bimodule, LeftModule};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{self, CanonicalQuotient, SpanCoords};
use crate::matrix::Matrix;

/// Basis of `Hom_A(m, n)` as `n.dim x m.dim` matrices.
///
/// Solves `N_g X = X M_g` for the algebra generators `g` on `vec(X)` (row-major).
pub fn hom_basis(m: &LeftModule, n: &LeftModule) -> Result<Vec<Matrix>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch(format!(
            "Hom between modules over {} and {}",
            m.algebra().name(),
            n.algebra().name()
        )));
    }
    let f = m.field();
    let (a, b) = (m.dim(), n.dim());
    if a == 0 || b == 0 {
        return Ok(Vec::new());
    }
    let gens = m.algebra().generators();
    let (ia, ib) = (Matrix::identity(f, a), Matrix::identity(f, b));
    let blocks: Vec<Matrix> = gens
        .iter()
        .map(|&g| n.action(g).kron(&ia).sub(&ib.kron(&m.action(g).transpose())))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(f, a * b, &refs);
    let k = linalg::kernel(&system);
    Ok((0..k.cols())
        .map(|j| Matrix::unflatten(f, b, a, &k.column(j)))
        .collect())
}

/// `Hom_A(m, n)` with coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    pub basis: Vec<Matrix>,
    coords: Option<SpanCoords>,
}

impl HomSpace {
    pub fn new(field: PrimeField, rows: usize, cols: usize, basis: Vec<Matrix>) -> Self {
        let coords = (!basis.is_empty()).then(|| {
            let flat: Vec<Vec<u32>> = basis.iter().map(|m| m.flatten()).collect();
            SpanCoords::new(Matrix::from_columns(field, rows * cols, &flat))
        });
        HomSpace {
            field,
            rows,
            cols,
            basis,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a matrix in the span, `None` otherwise.
    pub fn coords(&self, x: &Matrix) -> Option<Vec<u32>> {
        match &self.coords {
            None => x.is_zero().then(Vec::new),
            Some(sc) => sc
                .coords(&Matrix::column_vector(x.field(), &x.flatten()))
                .map(|c| c.column(0)),
        }
    }

    /// Coordinates of several maps at once, as the columns of a `dim x k` matrix.
    pub fn coords_many(&self, xs: &[Matrix]) -> Option<Matrix> {
        let f = self.field;
        let Some(sc) = &self.coords else {
            return xs
                .iter()
                .all(|x| x.is_zero())
                .then(|| Matrix::zeros(f, 0, xs.len()));
        };
        let flat: Vec<Vec<u32>> = xs.iter().map(|x| x.flatten()).collect();
        sc.coords(&Matrix::from_columns(f, self.rows * self.cols, &flat))
    }

    pub fn combine(&self, c: &[u32]) -> Matrix {
        assert_eq!(c.len(), self.dim());
        let mut acc = Matrix::zeros(self.field, self.rows, self.cols);
        for (m, &x) in self.basis.iter().zip(c) {
            acc.add_scaled_assign(x, m);
        }
        acc
    }
}

pub fn hom_space(m: &LeftModule, n: &LeftModule) -> Result<HomSpace> {
    Ok(HomSpace::new(m.field(), n.dim(), m.dim(), hom_basis(m, n)?))
}

/// `Hom_S(C, N)` as a left `R`-module via `(r·f)(c) = f(c·r)`.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: LeftModule,
    pub space: HomSpace,
}

pub fn hom_from_bimodule(c: &Bimodule, n: &LeftModule) -> Result<HomModule> {
    let space = hom_space(c.left(), n)?;
    let r = c.right_algebra();
    let h = space.dim();
    let action = (0..r.dim())
        .map(|i| {
            let moved: Vec<Matrix> = space.basis.iter().map(|b| b.mul(c.right_action(i))).collect();
            space
                .coords_many(&moved)
                .expect("Hom_S(C,N) is stable under the right action")
        })
        .collect();
    Ok(HomModule {
        module: LeftModule::new_unchecked(r.clone(), h, action),
        space,
    })
}

/// Quotient of `X ⊗_{F_p} Y` (index `x*dim Y + y`) by `x·r ⊗ y - x ⊗ r·y`,
/// for `x` a left `R^op`-module and `y` a left `R`-module.
pub fn tensor_quotient(x: &LeftModule, y: &LeftModule) -> Result<CanonicalQuotient> {
    let r = y.algebra();
    if !x.algebra().same_structure(&r.opposite()) {
        return Err(Error::AlgebraMismatch(format!(
            "tensor of a module over {} with a module over {}",
            x.algebra().name(),
            r.name()
        )));
    }
    let f = y.field();
    let (a, b) = (x.dim(), y.dim());
    let (ia, ib) = (Matrix::identity(f, a), Matrix::identity(f, b));
    let blocks: Vec<Matrix> = r
        .generators()
        .iter()
        .map(|&g| x.action(g).kron(&ib).sub(&ia.kron(y.action(g))))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let rel = Matrix::hstack(f, a * b, &refs);
    Ok(CanonicalQuotient::new(f, a * b, &rel))
}

/// `C ⊗_R m` as a left `S`-module, with the quotient data of the underlying space.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: LeftModule,
    pub quotient: CanonicalQuotient,
}

pub fn tensor_over(c: &Bimodule, m: &LeftModule) -> Result<TensorProduct> {
    if !same_algebra(c.right_algebra(), m.algebra()) {
        return Err(Error::AlgebraMismatch(format!(
            "C is a right {}-module, m is over {}",
            c.right_algebra().name(),
            m.algebra().name()
        )));
    }
    let q = tensor_quotient(c.right(), m)?;
    let f = c.field();
    let im = Matrix::identity(f, m.dim());
    let action = c
        .left()
        .actions()
        .iter()
        .map(|l| q.projection.mul(&l.kron(&im)).mul(&q.section))
        .collect();
    Ok(TensorProduct {
        module: LeftModule::new_unchecked(c.left_algebra().clone(), q.dim(), action),
        quotient: q,
    })
}

/// `C ⊗ f : C⊗m → C⊗m'` in the canonical quotient bases.
pub fn tensor_map(c_dim: usize, f: &Matrix, src: &CanonicalQuotient, tgt: &CanonicalQuotient) -> Matrix {
    let ic = Matrix::identity(f.field(), c_dim);
    tgt.projection.mul(&ic.kron(f)).mul(&src.section)
}

/// `Hom(C, g) : Hom(C,n) → Hom(C,n')`, `F ↦ g F`, in Hom-space coordinates.
pub fn hom_map(g: &Matrix, src: &HomSpace, tgt: &HomSpace) -> Matrix {
    let moved: Vec<Matrix> = src.basis.iter().map(|b| g.mul(b)).collect();
    tgt.coords_many(&moved)
        .expect("image of a homomorphism lies in the target Hom space")
}

/// `D(m) = Hom_{F_p}(m, F_p)` as a left module over `A^op` (transposed actions).
pub fn dual(m: &LeftModule) -> LeftModule {
    let op = Arc::new(m.algebra().opposite());
    let action = m.actions().iter().map(|x| x.transpose()).collect();
    LeftModule::new_unchecked(op, m.dim(), action)
}

/// `D(C)` for an `(S, R)`-bimodule `C`, an `(R, S)`-bimodule.
pub fn dual_bimodule(c: &Bimodule) -> Bimodule {
    let left = LeftModule::new_unchecked(
        c.right_algebra().clone(),
        c.dim(),
        c.right().actions().iter().map(|x| x.transpose()).collect(),
    );
    let right = dual(c.left());
    Bimodule::from_modules(left, right, c.left_algebra().clone()).expect("dual bimodule shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_ring, truncated_polynomial_ring, Algebra};
    use crate::field::PrimeField;

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(truncated_polynomial_ring(PrimeField::new(2).unwrap(), 2).unwrap())
    }

    fn k(a: &Arc<Algebra>) -> LeftModule {
        let f = a.field();
        LeftModule::new(a.clone(), 1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)]).unwrap()
    }

    #[test]
    fn hom_examples() {
        let a = dual_numbers();
        let r = LeftModule::regular(a.clone());
        let kk = k(&a);
        assert_eq!(hom_basis(&r, &r).unwrap().len(), 2);
        assert_eq!(hom_basis(&kk, &kk).unwrap().len(), 1);
        assert_eq!(hom_basis(&r, &kk).unwrap().len(), 1);
        // Hom(k, R) lands in the socle span{x}
        let h = hom_basis(&kk, &r).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].column(0), vec![0, 1]);
        let z = LeftModule::zero(a);
        assert!(hom_basis(&z, &r).unwrap().is_empty());
    }

    #[test]
    fn tensor_examples() {
        let a = dual_numbers();
        let c = Bimodule::regular(a.clone());
        let kk = k(&a);
        assert_eq!(tensor_over(&c, &kk).unwrap().module.dim(), 1);
        let r2 = LeftModule::free(a.clone(), 2);
        assert_eq!(tensor_over(&c, &r2).unwrap().module.dim(), 4);
        let t = tensor_over(&c, &LeftModule::zero(a)).unwrap();
        assert_eq!(t.module.dim(), 0);
    }

    #[test]
    fn hom_from_regular_bimodule() {
        let a = Arc::new(matrix_ring(PrimeField::new(3).unwrap(), 2).unwrap());
        let c = Bimodule::regular(a.clone());
        let h = hom_from_bimodule(&c, &LeftModule::regular(a)).unwrap();
        assert_eq!(h.module.dim(), 4);
        assert_eq!(h.module.validate(), Ok(()));
    }

    #[test]
    fn dual_is_involutive_up_to_structure() {
        let a = Arc::new(matrix_ring(PrimeField::new(2).unwrap(), 2).unwrap());
        let r = LeftModule::regular(a.clone());
        let d = dual(&r);
        assert_eq!(d.validate(), Ok(()));
        let dd = dual(&d).rebase(a.clone()).unwrap();
        assert_eq!(dd.actions(), r.actions());
        let c = Bimodule::regular(a);
        let dc = dual_bimodule(&c);
        assert_eq!(dc.validate(), Ok(()));
    }
}
