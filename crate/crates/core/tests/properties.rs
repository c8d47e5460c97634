//! Property tests against brute-force or independent computations.

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sdcheck_core::corpus::{corpus_algebras, corpus_bimodules, dualizing};
use sdcheck_core::foxby::FoxbyContext;
use sdcheck_core::homology::{ext_dims, ext_dims_injective, tor_dims_res, FreeResolution};
use sdcheck_core::linalg::{inverse, kernel, rank, solve};
use sdcheck_core::modrep::{direct_sum, hom_space, random_invertible, random_module, tensor_over, Bimodule, LeftModule};
use sdcheck_core::{Algebra, Matrix, PrimeField};

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (prop::sample::select(vec![2u32, 3, 5]), 1..=max, 1..=max).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c)
            .prop_map(move |data| Matrix::from_flat(PrimeField::new(p).unwrap(), r, c, data).unwrap())
    })
}

fn algebra(index: usize) -> Arc<Algebra> {
    let all = corpus_algebras();
    all[index % all.len()].clone()
}

/// Counts module maps `m -> n` by trying every matrix; only for `F_2` and small dimensions.
fn brute_hom_count(m: &LeftModule, n: &LeftModule) -> u64 {
    let cells = m.dim() * n.dim();
    let f = m.field();
    (0u64..1 << cells)
        .filter(|bits| {
            let data = (0..cells).map(|i| (bits >> i & 1) as u32).collect();
            let x = Matrix::from_flat(f, n.dim(), m.dim(), data).unwrap();
            m.actions().iter().zip(n.actions()).all(|(a, b)| x.mul(a) == b.mul(&x))
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in matrix(7)) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(rank(&k), k.cols());
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn solve_recovers_consistent_systems(a in matrix(6), seed in any::<u64>()) {
        let f = a.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Matrix::from_flat(f, a.cols(), 2, (0..a.cols() * 2).map(|_| rand::Rng::gen_range(&mut rng, 0..f.p())).collect()).unwrap();
        let b = a.mul(&x);
        let y = solve(&a, &b).unwrap().expect("b is in the column space");
        prop_assert_eq!(a.mul(&y), b);
    }

    #[test]
    fn random_invertibles_invert(p in prop::sample::select(vec![2u32, 3, 7]), n in 1usize..6, seed in any::<u64>()) {
        let f = PrimeField::new(p).unwrap();
        let (g, g_inv) = random_invertible(f, n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(g.mul(&g_inv).is_identity());
        prop_assert_eq!(inverse(&g), Some(g_inv));
    }

    #[test]
    fn opposite_is_an_involution(index in 0usize..64, i in 0usize..16, j in 0usize..16) {
        let a = algebra(index);
        let op = a.opposite();
        prop_assert!(op.validate().is_ok());
        prop_assert!(op.opposite().same_structure(&a));
        let (x, y) = (a.basis_vector(i % a.dim()), a.basis_vector(j % a.dim()));
        prop_assert_eq!(op.mul(&x, &y), a.mul(&y, &x));
    }

    #[test]
    fn hom_dimension_matches_enumeration(index in 0usize..64, s1 in any::<u64>(), s2 in any::<u64>()) {
        let binary: Vec<_> = corpus_algebras().into_iter().filter(|a| a.field().p() == 2).collect();
        let a = &binary[index % binary.len()];
        let (m, n) = (random_module(a, 3, s1), random_module(a, 3, s2));
        let h = hom_space(&m, &n).unwrap();
        prop_assert_eq!(1u64 << h.dim(), brute_hom_count(&m, &n));
    }

    #[test]
    fn ext_is_additive_and_balanced(index in 0usize..64, s in any::<[u64; 3]>()) {
        let a = algebra(index);
        let (m, n1, n2) = (random_module(&a, 4, s[0]), random_module(&a, 4, s[1]), random_module(&a, 4, s[2]));
        let sum = direct_sum(&a, &[&n1, &n2]).unwrap().module;
        let (e1, e2, es) = (ext_dims(&m, &n1, 3).unwrap(), ext_dims(&m, &n2, 3).unwrap(), ext_dims(&m, &sum, 3).unwrap());
        let added: Vec<usize> = e1.dims.iter().zip(&e2.dims).map(|(x, y)| x + y).collect();
        prop_assert_eq!(&es.dims, &added);
        prop_assert_eq!(e1.dims[0], hom_space(&m, &n1).unwrap().dim());
        prop_assert_eq!(e1.dims, ext_dims_injective(&m, &n1, 3).unwrap().dims);
    }

    #[test]
    fn tor_is_balanced(pick in 0usize..64, seed in any::<u64>()) {
        let corpus = corpus_bimodules();
        let c = &corpus[pick % corpus.len()].bimodule;
        let m = random_module(c.right_algebra(), 4, seed);
        let via_m = tor_dims_res(c.right(), &mut FreeResolution::new(&m), 3, false).unwrap();
        let via_c = tor_dims_res(&m, &mut FreeResolution::new(c.right()), 3, false).unwrap();
        prop_assert_eq!(via_m.dims, via_c.dims);
    }

    #[test]
    fn tensor_with_free_modules(index in 0usize..64, k in 0usize..4) {
        let a = algebra(index);
        let c = Bimodule::regular(a.clone());
        let t = tensor_over(&c, &LeftModule::free(a.clone(), k)).unwrap();
        prop_assert_eq!(t.module.dim(), k * a.dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn auslander_class_is_closed_under_sums_and_summands(s1 in any::<u64>(), s2 in any::<u64>()) {
        // not Gorenstein, so the classes are proper and both outcomes occur
        let r = sdcheck_core::corpus::corpus_algebra("F2[x,y]/(x2,xy,y2)").unwrap();
        let c = dualizing(&r).unwrap();
        let ctx = FoxbyContext::new(&c, 3);
        let (m, n) = (random_module(&r, 3, s1), random_module(&r, 3, s2));
        let sum = direct_sum(&r, &[&m, &n]).unwrap().module;
        let both = ctx.auslander(&m).unwrap().is_member() && ctx.auslander(&n).unwrap().is_member();
        prop_assert_eq!(ctx.auslander(&sum).unwrap().is_member(), both);
        let both = ctx.bass(&m).unwrap().is_member() && ctx.bass(&n).unwrap().is_member();
        prop_assert_eq!(ctx.bass(&sum).unwrap().is_member(), both);
    }
}

