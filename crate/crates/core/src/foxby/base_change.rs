//! Base change of a module over a commutative algebra to an `(R, R)`-bimodule.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modrep::{tensor_quotient, Bimodule, LeftModule};

/// `E ⊗_Q R` with `r'·(e⊗r) = e⊗r'r` and `(e⊗r)·r' = e⊗rr'`, for a commutative `Q` embedded
/// centrally in `R` by `embedding` (a `dim R x dim Q` matrix whose columns are the images of
/// the basis of `Q`).
pub fn base_change_bimodule(e: &LeftModule, r: &Arc<Algebra>, embedding: &Matrix) -> Result<Bimodule> {
    let q = e.algebra();
    let f = r.field();
    if !q.is_commutative() {
        return Err(Error::NotCommutative(q.name().to_string()));
    }
    if embedding.shape() != (r.dim(), q.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "embedding is {}x{}, expected {}x{}",
            embedding.rows(),
            embedding.cols(),
            r.dim(),
            q.dim()
        )));
    }
    let images = embedding.columns();
    if embedding.mul_vec(q.one()) != r.one() {
        return Err(Error::Invalid("the embedding does not preserve the unit".into()));
    }
    for i in 0..q.dim() {
        for j in 0..q.dim() {
            let lhs = embedding.mul_vec(&q.mul(&q.basis_vector(i), &q.basis_vector(j)));
            if lhs != r.mul(&images[i], &images[j]) {
                return Err(Error::Invalid(format!("the embedding is not multiplicative at ({i},{j})")));
            }
        }
        for t in 0..r.dim() {
            let b = r.basis_vector(t);
            if r.mul(&images[i], &b) != r.mul(&b, &images[i]) {
                return Err(Error::NonCentral(format!("image of e{i} does not commute with e{t}")));
            }
        }
    }
    // E as a right Q-module, R as a left Q-module through the embedding
    let e_right = LeftModule::new_unchecked(Arc::new(q.opposite()), e.dim(), e.actions().to_vec());
    let r_left = LeftModule::new_unchecked(
        q.clone(),
        r.dim(),
        images.iter().map(|x| r.left_mult(x)).collect(),
    );
    let quot = tensor_quotient(&e_right, &r_left)?;
    let ie = Matrix::identity(f, e.dim());
    let induced = |m: Matrix| quot.projection.mul(&ie.kron(&m)).mul(&quot.section);
    let left = r.left_regular().into_iter().map(induced).collect();
    let right = (0..r.dim())
        .map(|t| induced(r.right_mult(&r.basis_vector(t))))
        .collect();
    Bimodule::new(r.clone(), r.clone(), quot.dim(), left, right)
}

/// The embedding `q ↦ q ⊗ 1` of `Q` into `Q ⊗ B` (see [`crate::algebra::tensor_algebra`]).
pub fn tensor_embedding(q: &Algebra, b: &Algebra) -> Matrix {
    let m = b.dim();
    let cols: Vec<Vec<u32>> = (0..q.dim())
        .map(|i| {
            let mut v = vec![0; q.dim() * m];
            v[i * m..(i + 1) * m].copy_from_slice(b.one());
            v
        })
        .collect();
    Matrix::from_columns(q.field(), q.dim() * m, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_group_table, group_ring, matrix_ring, tensor_algebra, truncated_polynomial_ring};
    use crate::field::PrimeField;
    use crate::foxby::{check_faithful, check_semidualizing, injective_cogenerator};

    #[test]
    fn free_rank_one_gives_regular_bimodule() {
        let f = PrimeField::new(2).unwrap();
        let q = Arc::new(matrix_ring(f, 1).unwrap());
        let m2 = matrix_ring(f, 2).unwrap();
        let r = Arc::new(tensor_algebra(&q, &m2).unwrap());
        assert_eq!(r.validate(), Ok(()));
        let c = base_change_bimodule(&LeftModule::regular(q.clone()), &r, &tensor_embedding(&q, &m2)).unwrap();
        let reg = Bimodule::regular(r.clone());
        assert_eq!(c.left().actions(), reg.left().actions());
        assert_eq!(c.right().actions(), reg.right().actions());
    }

    #[test]
    fn dualizing_module_of_dual_numbers_over_matrix_ring() {
        let f = PrimeField::new(2).unwrap();
        let q = Arc::new(truncated_polynomial_ring(f, 2).unwrap());
        let m2 = matrix_ring(f, 2).unwrap();
        let r = Arc::new(tensor_algebra(&q, &m2).unwrap());
        let e = injective_cogenerator(&q);
        let c = base_change_bimodule(&e, &r, &tensor_embedding(&q, &m2)).unwrap();
        assert_eq!(c.validate(), Ok(()));
        assert_eq!(c.dim(), 8);
        assert!(check_semidualizing(&c, 4).unwrap().overall.is_yes());
        assert!(check_faithful(&c).unwrap().faithful);
    }

    #[test]
    fn group_ring_over_q() {
        let f = PrimeField::new(2).unwrap();
        let q = Arc::new(matrix_ring(f, 1).unwrap());
        let g = group_ring(f, &cyclic_group_table(2)).unwrap();
        let r = Arc::new(tensor_algebra(&q, &g).unwrap());
        let c = base_change_bimodule(&LeftModule::regular(q.clone()), &r, &tensor_embedding(&q, &g)).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(check_semidualizing(&c, 4).unwrap().overall.is_certified());
    }

    #[test]
    fn rejects_noncommutative_and_noncentral() {
        let f = PrimeField::new(2).unwrap();
        let m2 = Arc::new(matrix_ring(f, 2).unwrap());
        let r = Arc::new(tensor_algebra(&m2, &matrix_ring(f, 1).unwrap()).unwrap());
        let emb = Matrix::identity(f, 4);
        assert!(matches!(
            base_change_bimodule(&LeftModule::regular(m2.clone()), &r, &emb),
            Err(Error::NotCommutative(_))
        ));
        // F2 x F2 (diagonal matrices) inside M2 is commutative but not central
        let d = Arc::new(
            Algebra::new(f, 2, vec![1, 0, 0, 0, 0, 0, 0, 1], vec![1, 1], "F2xF2").unwrap(),
        );
        let emb = Matrix::from_columns(f, 4, &[vec![1, 0, 0, 0], vec![0, 0, 0, 1]]);
        assert!(matches!(
            base_change_bimodule(&LeftModule::regular(d), &m2, &emb),
            Err(Error::NonCentral(_))
        ));
    }
}
