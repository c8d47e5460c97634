//! Seeded generation of modules, projectives, injectives and short exact sequences,
//! plus a simple module.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::functor::dual;
use super::{direct_sum, submodule_closure, LeftModule, ShortExactSeq};
use crate::algebra::{jacobson_radical, Algebra};
use crate::field::PrimeField;
use crate::linalg;
use crate::matrix::Matrix;

fn random_vector<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..field.p())).collect()
}

/// A random invertible matrix and its inverse.
pub fn random_invertible<R: Rng>(field: PrimeField, n: usize, rng: &mut R) -> (Matrix, Matrix) {
    loop {
        let data = random_vector(field, n * n, rng);
        let g = Matrix::from_flat(field, n, n, data).expect("square shape");
        if let Some(inv) = linalg::inverse(&g) {
            return (g, inv);
        }
    }
}

/// A random quotient of a random submodule of `A^k`, of dimension at most `max_dim`.
pub fn random_module_rng<R: Rng>(algebra: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> LeftModule {
    if max_dim == 0 {
        return LeftModule::zero(algebra.clone());
    }
    let f = algebra.field();
    let k = rng.gen_range(1..=2);
    let free = LeftModule::free(algebra.clone(), k);
    let n_gens = rng.gen_range(1..=2);
    let gens: Vec<Vec<u32>> = (0..n_gens)
        .map(|_| random_vector(f, free.dim(), rng))
        .collect();
    let (u, _) = free.submodule(&free.span_closure(&gens));
    let mut rel: Vec<Vec<u32>> = (0..rng.gen_range(0..=1))
        .map(|_| random_vector(f, u.dim(), rng))
        .collect();
    loop {
        let w = u.span_closure(&rel);
        if u.dim() - w.cols() <= max_dim {
            return u.quotient(&w).0;
        }
        rel.push(random_vector(f, u.dim(), rng));
    }
}

/// [`random_module_rng`] with a ChaCha8 stream seeded by `seed`.
pub fn random_module(algebra: &Arc<Algebra>, max_dim: usize, seed: u64) -> LeftModule {
    random_module_rng(algebra, max_dim, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn power_idempotent(a: &Algebra, x: &[u32]) -> Option<Vec<u32>> {
    // some power of x is idempotent; give up on long cycles
    let mut pw = x.to_vec();
    for _ in 0..64 {
        if a.mul(&pw, &pw) == pw {
            return Some(pw);
        }
        pw = a.mul(&pw, x);
    }
    None
}

/// Idempotents found among powers of basis elements, closed under `e ↦ 1 - e`,
/// always containing `1`. Zero is excluded.
pub fn find_idempotents(a: &Algebra) -> Vec<Vec<u32>> {
    let f = a.field();
    let mut out: Vec<Vec<u32>> = vec![a.one().to_vec()];
    for i in 0..a.dim() {
        if let Some(e) = power_idempotent(a, &a.basis_vector(i)) {
            let comp: Vec<u32> = a.one().iter().zip(&e).map(|(&u, &v)| f.sub(u, v)).collect();
            for cand in [e, comp] {
                if cand.iter().any(|&v| v != 0) && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// A direct sum of summands `A·e` (idempotent `e`) in a random basis, dimension at most `max_dim`.
pub fn random_projective<R: Rng>(algebra: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> LeftModule {
    let reg = LeftModule::regular(algebra.clone());
    let mut pieces: Vec<LeftModule> = find_idempotents(algebra)
        .iter()
        .map(|e| {
            let basis = linalg::column_basis(&algebra.right_mult(e));
            reg.submodule(&basis).0
        })
        .collect();
    pieces.sort_by_key(|m| m.dim());
    let count = rng.gen_range(1..=3);
    let mut chosen: Vec<&LeftModule> = Vec::new();
    let mut total = 0;
    for _ in 0..count {
        let fits: Vec<&LeftModule> = pieces.iter().filter(|m| total + m.dim() <= max_dim).collect();
        if fits.is_empty() {
            break;
        }
        let m = fits[rng.gen_range(0..fits.len())];
        total += m.dim();
        chosen.push(m);
    }
    let sum = direct_sum(algebra, &chosen).expect("same algebra").module;
    let (g, g_inv) = random_invertible(algebra.field(), sum.dim(), rng);
    sum.change_basis(&g, &g_inv)
}

/// The dual of a random projective over the opposite algebra.
pub fn random_injective<R: Rng>(algebra: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> LeftModule {
    let op = Arc::new(algebra.opposite());
    dual(&random_projective(&op, max_dim, rng))
        .rebase(algebra.clone())
        .expect("double opposite")
}

/// `0 → U → M → M/U → 0` with `M` random and `U` generated by one random vector.
pub fn random_ses<R: Rng>(algebra: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> ShortExactSeq {
    let m = random_module_rng(algebra, max_dim, rng);
    let v = random_vector(algebra.field(), m.dim(), rng);
    submodule_closure(&m, &Matrix::column_vector(algebra.field(), &v))
}

/// A simple module: a cyclic submodule of `A/J(A)` of least dimension.
pub fn simple_module(algebra: &Arc<Algebra>) -> LeftModule {
    let f = algebra.field();
    let j = jacobson_radical(algebra);
    let (top, _) = LeftModule::regular(algebra.clone()).quotient(&j.basis);
    let d = top.dim();
    let candidates: Vec<Vec<u32>> = if (f.p() as u64).saturating_pow(d as u32) <= 4096 {
        let total = (f.p() as usize).pow(d as u32);
        (1..total)
            .map(|mut idx| {
                (0..d)
                    .map(|_| {
                        let c = (idx % f.p() as usize) as u32;
                        idx /= f.p() as usize;
                        c
                    })
                    .collect()
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x51);
        let mut c: Vec<Vec<u32>> = (0..d).map(|i| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        }).collect();
        c.extend((0..256).map(|_| random_vector(f, d, &mut rng)));
        c
    };
    let best = candidates
        .iter()
        .map(|v| top.span_closure(std::slice::from_ref(v)))
        .filter(|b| b.cols() > 0)
        .min_by_key(|b| b.cols())
        .expect("A/J is nonzero");
    top.submodule(&best).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_ring, cyclic_group_table, matrix_ring, triangular_ring};
    use crate::modrep::{is_injective, is_projective};

    #[test]
    fn random_modules_are_valid_and_reproducible() {
        let f = PrimeField::new(3).unwrap();
        let a = Arc::new(triangular_ring(f, 1).unwrap());
        for seed in 0..20 {
            let m = random_module(&a, 6, seed);
            assert!(m.dim() <= 6);
            assert_eq!(m.validate(), Ok(()));
            assert_eq!(m.actions(), random_module(&a, 6, seed).actions());
        }
        assert_eq!(random_module(&a, 0, 7).dim(), 0);
    }

    #[test]
    fn random_projectives_and_injectives() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for a in [
            Arc::new(triangular_ring(f, 1).unwrap()),
            Arc::new(matrix_ring(f, 2).unwrap()),
            Arc::new(group_ring(f, &cyclic_group_table(2)).unwrap()),
        ] {
            for _ in 0..4 {
                let p = random_projective(&a, 8, &mut rng);
                assert_eq!(p.validate(), Ok(()));
                assert!(is_projective(&p));
                let i = random_injective(&a, 8, &mut rng);
                assert_eq!(i.validate(), Ok(()));
                assert!(is_injective(&i));
            }
        }
    }

    #[test]
    fn simple_modules() {
        let f = PrimeField::new(2).unwrap();
        let m2 = Arc::new(matrix_ring(f, 2).unwrap());
        assert_eq!(simple_module(&m2).dim(), 2);
        let t = Arc::new(triangular_ring(f, 1).unwrap());
        let s = simple_module(&t);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.validate(), Ok(()));
    }
}
