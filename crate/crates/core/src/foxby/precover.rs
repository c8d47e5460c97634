//! `P_C`-precovers and `I_C`-preenvelopes with factorization certificates.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::homology::InjectiveCoresolution;
use crate::linalg;
use crate::matrix::Matrix;
use crate::modrep::{
    dual, generator_surjection, hom_from_bimodule, hom_map, hom_space, module_generators, tensor_map,
    tensor_over, Bimodule, LeftModule,
};

use super::maps::{mu_map, nu_map};

/// `φ` together with the factorizations `φ f_t = ψ_t` (precover) or `f_t φ = ψ_t`
/// (preenvelope) for a basis `ψ_t` of test maps.
#[derive(Clone, Debug, Serialize)]
pub struct PrecoverCertificate {
    /// `φ` as a `target x source` matrix
    pub map: Matrix,
    /// the module of the class at the other end of `φ`
    #[serde(skip)]
    pub class_module: LeftModule,
    pub tests: usize,
    /// `f_t` for every test map, empty if some test map does not factor
    pub factorizations: Vec<Matrix>,
    pub all_factor: bool,
    /// `φ` has a one-sided inverse (a section for a precover, a retraction for a preenvelope)
    pub split: bool,
}

/// Coefficients `x` with `Σ_u x_u images[u] = target` for every target.
fn solve_in_span(f: crate::PrimeField, images: &[Matrix], targets: &[Matrix]) -> Option<Vec<Vec<u32>>> {
    if targets.is_empty() {
        return Some(Vec::new());
    }
    let size = targets[0].rows() * targets[0].cols();
    if images.is_empty() {
        return targets.iter().all(|t| t.is_zero()).then(|| vec![Vec::new(); targets.len()]);
    }
    let a = Matrix::from_columns(f, size, &images.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    let b = Matrix::from_columns(f, size, &targets.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    linalg::solve(&a, &b).ok().flatten().map(|x| x.columns())
}

fn combine(f: crate::PrimeField, rows: usize, cols: usize, basis: &[Matrix], x: &[u32]) -> Matrix {
    let mut acc = Matrix::zeros(f, rows, cols);
    for (b, &c) in basis.iter().zip(x) {
        acc.add_scaled_assign(c, b);
    }
    acc
}

/// `β : C ⊗_R R^k → n` through a free cover `α : R^k ↠ Hom_S(C, n)`: `β = ν_n ∘ (C⊗α)`.
pub fn precover_map(c: &Bimodule, n: &LeftModule) -> Result<(LeftModule, Matrix)> {
    let nu = nu_map(c, n)?;
    let h = &nu.hom.module;
    let r = c.right_algebra();
    let gens = module_generators(h, Some(&r.radical().basis));
    let alpha = generator_surjection(h, &gens);
    let free = tensor_over(c, &LeftModule::free(r.clone(), gens.len()))?;
    let c_alpha = tensor_map(c.dim(), &alpha, &free.quotient, &nu.tensor.quotient);
    Ok((free.module, nu.map.matrix.mul(&c_alpha)))
}

/// A `P_C`-precover of `n`, tested against a basis of `Hom_S(C⊗R, n)`. Maps out of finite
/// sums of copies of `C⊗R` factor componentwise and maps out of summands extend through
/// the projection, so this basis suffices.
pub fn pc_precover(c: &Bimodule, n: &LeftModule) -> Result<PrecoverCertificate> {
    let f = n.field();
    let (source, beta) = precover_map(c, n)?;
    let unit = tensor_over(c, &LeftModule::regular(c.right_algebra().clone()))?.module;
    let tests = hom_space(&unit, n)?;
    let lifts = hom_space(&unit, &source)?;
    let images: Vec<Matrix> = lifts.basis.iter().map(|g| beta.mul(g)).collect();
    let factorizations = match solve_in_span(f, &images, &tests.basis) {
        Some(xs) => xs
            .iter()
            .map(|x| combine(f, source.dim(), unit.dim(), &lifts.basis, x))
            .collect(),
        None => Vec::new(),
    };
    let all_factor = factorizations.len() == tests.dim()
        && factorizations
            .iter()
            .zip(&tests.basis)
            .all(|(ft, psi)| beta.mul(ft) == *psi);
    let sections = hom_space(n, &source)?;
    let images: Vec<Matrix> = sections.basis.iter().map(|s| beta.mul(s)).collect();
    let split = solve_in_span(f, &images, &[Matrix::identity(f, n.dim())]).is_some();
    Ok(PrecoverCertificate {
        map: beta,
        class_module: source,
        tests: tests.dim(),
        factorizations,
        all_factor,
        split,
    })
}

/// `D(S_S)` as a left `S`-module: the injective cogenerator.
pub fn injective_cogenerator(s: &Arc<crate::Algebra>) -> LeftModule {
    dual(&LeftModule::regular(Arc::new(s.opposite())))
        .rebase(s.clone())
        .expect("double opposite")
}

/// `φ = Hom(C, η) ∘ μ_m : m → Hom_S(C, I)` for an injective hull-like embedding
/// `η : C⊗m ↪ I`, tested against a basis of `Hom_R(m, Hom_S(C, E))` with `E` the
/// injective cogenerator.
pub fn ic_preenvelope(c: &Bimodule, m: &LeftModule) -> Result<PrecoverCertificate> {
    let f = m.field();
    let (u, phi) = preenvelope_map(c, m)?;
    let e = injective_cogenerator(c.left_algebra());
    let v = hom_from_bimodule(c, &e)?.module;
    let tests = hom_space(m, &v)?;
    let exts = hom_space(&u, &v)?;
    let images: Vec<Matrix> = exts.basis.iter().map(|g| g.mul(&phi)).collect();
    let factorizations = match solve_in_span(f, &images, &tests.basis) {
        Some(xs) => xs
            .iter()
            .map(|x| combine(f, v.dim(), u.dim(), &exts.basis, x))
            .collect(),
        None => Vec::new(),
    };
    let all_factor = factorizations.len() == tests.dim()
        && factorizations
            .iter()
            .zip(&tests.basis)
            .all(|(ft, psi)| ft.mul(&phi) == *psi);
    let retractions = hom_space(&u, m)?;
    let images: Vec<Matrix> = retractions.basis.iter().map(|r| r.mul(&phi)).collect();
    let split = solve_in_span(f, &images, &[Matrix::identity(f, m.dim())]).is_some();
    Ok(PrecoverCertificate {
        map: phi,
        class_module: u,
        tests: tests.dim(),
        factorizations,
        all_factor,
        split,
    })
}

/// `Hom_S(C, I^0)` and `Hom(C, η) ∘ μ_m` for the first term `I^0` of the injective
/// coresolution of `C⊗m`.
pub fn preenvelope_map(c: &Bimodule, m: &LeftModule) -> Result<(LeftModule, Matrix)> {
    let mu = mu_map(c, m)?;
    let mut cores = InjectiveCoresolution::new(&mu.tensor.module);
    let eta = cores.coaugmentation();
    let u = hom_from_bimodule(c, &cores.term(0))?;
    let phi = hom_map(&eta, &mu.hom.space, &u.space).mul(&mu.map.matrix);
    Ok((u.module, phi))
}
