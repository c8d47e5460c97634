//! Generators, and projectivity tests by splitting the generator surjection.

use super::functor::{dual, hom_basis};
use super::LeftModule;
use crate::linalg::{self, Echelon};
use crate::matrix::Matrix;

/// Greedy generating set: standard basis vectors of `m` taken in order, skipping those
/// already in `J·m + A·(chosen)`. Minimal when `A` is local.
///
/// `radical` is a basis of `J(A)` in algebra coordinates, or `None` to skip the `J·m` term.
pub fn module_generators(m: &LeftModule, radical: Option<&Matrix>) -> Vec<Vec<u32>> {
    let f = m.field();
    let mut ech = Echelon::new(f, m.dim());
    if let Some(j) = radical {
        for c in m.radical_part(j).columns() {
            ech.insert(&c);
        }
    }
    let gens = m.generator_actions();
    let mut chosen = Vec::new();
    for i in 0..m.dim() {
        let mut v = vec![0; m.dim()];
        v[i] = 1;
        if ech.contains(&v) {
            continue;
        }
        chosen.push(v.clone());
        ech.insert(&v);
        let mut frontier = vec![v];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = g.mul_vec(&x);
                if ech.insert(&y) {
                    frontier.push(y);
                }
            }
        }
        if ech.dim() == m.dim() {
            break;
        }
    }
    chosen
}

/// `A^k → m` sending the `l`-th free generator to `gens[l]`; column `l*n + b` is `e_b · gens[l]`.
pub fn generator_surjection(m: &LeftModule, gens: &[Vec<u32>]) -> Matrix {
    let n = m.algebra().dim();
    let mut cols = Vec::with_capacity(gens.len() * n);
    for g in gens {
        for b in 0..n {
            cols.push(m.action(b).mul_vec(g));
        }
    }
    Matrix::from_columns(m.field(), m.dim(), &cols)
}

/// Whether the generator surjection `A^k → m` has an `A`-linear section.
pub fn is_projective(m: &LeftModule) -> bool {
    if m.is_zero() {
        return true;
    }
    let f = m.field();
    let gens = module_generators(m, None);
    let pi = generator_surjection(m, &gens);
    let free = LeftModule::free(m.algebra().clone(), gens.len());
    let homs = hom_basis(m, &free).expect("same algebra");
    if homs.is_empty() {
        return false;
    }
    let cols: Vec<Vec<u32>> = homs.iter().map(|s| pi.mul(s).flatten()).collect();
    let system = Matrix::from_columns(f, m.dim() * m.dim(), &cols);
    let target = Matrix::column_vector(f, &Matrix::identity(f, m.dim()).flatten());
    matches!(linalg::solve(&system, &target), Ok(Some(_)))
}

/// Injective exactly when the dual is projective over the opposite algebra.
pub fn is_injective(m: &LeftModule) -> bool {
    is_projective(&dual(m))
}

/// Finitely generated flat modules over a finite-dimensional algebra are projective.
pub fn is_flat(m: &LeftModule) -> bool {
    is_projective(m)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{jacobson_radical, square_zero_local_ring, truncated_polynomial_ring, Algebra};
    use crate::field::PrimeField;

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(truncated_polynomial_ring(PrimeField::new(2).unwrap(), 2).unwrap())
    }

    #[test]
    fn projectivity_examples() {
        let a = dual_numbers();
        let f = a.field();
        assert!(is_projective(&LeftModule::free(a.clone(), 2)));
        let k = LeftModule::new(a.clone(), 1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)]).unwrap();
        assert!(!is_projective(&k));
        assert!(!is_flat(&k));
        assert!(is_projective(&LeftModule::zero(a.clone())));
        // self-injective
        assert!(is_injective(&LeftModule::regular(a.clone())));
        assert!(!is_injective(&k));
    }

    #[test]
    fn non_gorenstein_ring_is_not_self_injective() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(2).unwrap(), 2).unwrap());
        assert!(!is_injective(&LeftModule::regular(a)));
    }

    #[test]
    fn local_generators_are_minimal() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(3).unwrap(), 2).unwrap());
        let j = jacobson_radical(&a).basis;
        let r2 = LeftModule::free(a, 2);
        assert_eq!(module_generators(&r2, Some(&j)).len(), 2);
    }
}
