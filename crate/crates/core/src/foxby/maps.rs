//! Homothety and evaluation maps.

use crate::error::{Error, Result};
use crate::linalg::CanonicalQuotient;
use crate::matrix::Matrix;
use crate::modrep::{
    hom_from_bimodule, hom_map, hom_space, same_algebra, tensor_map, tensor_over, tensor_quotient,
    Bimodule, HomModule, HomSpace, LeftModule, ModuleMap, TensorProduct,
};

/// `γ_S : S → Hom_{R^op}(C, C)` (over `S^op`) and `γ_R : R → Hom_S(C, C)`.
#[derive(Clone, Debug)]
pub struct Homotheties {
    pub gamma_s: ModuleMap,
    pub gamma_r: ModuleMap,
}

pub fn homothety_maps(c: &Bimodule) -> Result<Homotheties> {
    let end_s = hom_from_bimodule(c, c.left())?;
    let cols = end_s
        .space
        .coords_many(c.right().actions())
        .expect("right multiplications are left linear");
    let gamma_r = ModuleMap::new(LeftModule::regular(c.right_algebra().clone()), end_s.module, cols)?;

    let flip = c.flip();
    let end_r = hom_from_bimodule(&flip, flip.left())?;
    let cols = end_r
        .space
        .coords_many(c.left().actions())
        .expect("left multiplications are right linear");
    let gamma_s = ModuleMap::new(LeftModule::regular(flip.right_algebra().clone()), end_r.module, cols)?;
    Ok(Homotheties { gamma_s, gamma_r })
}

/// `μ_m : m → Hom_S(C, C⊗m)`, `x ↦ (c ↦ c⊗x)`, with the intermediate objects.
#[derive(Clone, Debug)]
pub struct MuMap {
    pub map: ModuleMap,
    pub tensor: TensorProduct,
    pub hom: HomModule,
}

pub fn mu_map(c: &Bimodule, m: &LeftModule) -> Result<MuMap> {
    let tensor = tensor_over(c, m)?;
    let hom = hom_from_bimodule(c, &tensor.module)?;
    let md = m.dim();
    let images: Vec<Matrix> = (0..md)
        .map(|x| {
            let idx: Vec<usize> = (0..c.dim()).map(|a| a * md + x).collect();
            tensor.quotient.projection.select_columns(&idx)
        })
        .collect();
    let matrix = hom.space.coords_many(&images).expect("c ↦ c⊗x is S-linear");
    let map = ModuleMap::new(m.clone(), hom.module.clone(), matrix)?;
    Ok(MuMap { map, tensor, hom })
}

/// `ν_n : C ⊗ Hom_S(C, n) → n`, `c⊗f ↦ f(c)`, with the intermediate objects.
#[derive(Clone, Debug)]
pub struct NuMap {
    pub map: ModuleMap,
    pub hom: HomModule,
    pub tensor: TensorProduct,
}

pub fn nu_map(c: &Bimodule, n: &LeftModule) -> Result<NuMap> {
    let hom = hom_from_bimodule(c, n)?;
    let tensor = tensor_over(c, &hom.module)?;
    let h = hom.space.dim();
    // column a*h + l is f_l(e_a)
    let mut full = Matrix::zeros(n.field(), n.dim(), c.dim() * h);
    for (l, f) in hom.space.basis.iter().enumerate() {
        for a in 0..c.dim() {
            full.set_block(0, a * h + l, &f.select_columns(&[a]));
        }
    }
    let matrix = full.mul(&tensor.quotient.section);
    let map = ModuleMap::new(tensor.module.clone(), n.clone(), matrix)?;
    Ok(NuMap { map, hom, tensor })
}

/// Checks `ν_{C⊗m} ∘ (C⊗μ_m) = id` and `Hom(C, ν_n) ∘ μ_{Hom(C,n)} = id` exactly.
pub fn left_right_inverses(c: &Bimodule, m: &LeftModule, n: &LeftModule) -> Result<(bool, bool)> {
    let mu = mu_map(c, m)?;
    let nu_t = nu_map(c, &mu.tensor.module)?;
    let c_mu = tensor_map(c.dim(), &mu.map.matrix, &mu.tensor.quotient, &nu_t.tensor.quotient);
    let first = nu_t.map.matrix.mul(&c_mu).is_identity();

    let nu = nu_map(c, n)?;
    let mu_h = mu_map(c, &nu.hom.module)?;
    let hom_nu = hom_map(&nu.map.matrix, &mu_h.hom.space, &nu.hom.space);
    let second = hom_nu.mul(&mu_h.map.matrix).is_identity();
    Ok((first, second))
}

/// A linear map between two spaces built from functors, with both dimensions.
#[derive(Clone, Debug)]
pub struct EvaluationMap {
    pub matrix: Matrix,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl EvaluationMap {
    pub fn is_iso(&self) -> bool {
        self.source_dim == self.target_dim && crate::linalg::rank(&self.matrix) == self.source_dim
    }
}

/// `Hom_S(m, N)` as a right `R`-module (a left module over `R^op`), `ψ·r = P_r ψ`.
pub fn hom_right_module(m: &LeftModule, nb: &Bimodule) -> Result<(LeftModule, HomSpace)> {
    let space = hom_space(m, nb.left())?;
    let action = nb
        .right()
        .actions()
        .iter()
        .map(|p| {
            let moved: Vec<Matrix> = space.basis.iter().map(|b| p.mul(b)).collect();
            space.coords_many(&moved).expect("right action preserves S-linearity")
        })
        .collect();
    let module = LeftModule::new_unchecked(nb.right().algebra().clone(), space.dim(), action);
    Ok((module, space))
}

/// `Hom_{R^op}(m, N)` as a left `S`-module, `s·φ = L_s φ`, for a right `R`-module `m`.
pub fn hom_left_module(m: &LeftModule, nb: &Bimodule) -> Result<(LeftModule, HomSpace)> {
    let space = hom_space(m, nb.right())?;
    let action = nb
        .left()
        .actions()
        .iter()
        .map(|l| {
            let moved: Vec<Matrix> = space.basis.iter().map(|b| l.mul(b)).collect();
            space.coords_many(&moved).expect("left action preserves R-linearity")
        })
        .collect();
    let module = LeftModule::new_unchecked(nb.left_algebra().clone(), space.dim(), action);
    Ok((module, space))
}

/// Tensor evaluation `ω : Hom_S(m, N) ⊗_R F → Hom_S(m, N ⊗_R F)`, `ψ⊗f ↦ (x ↦ ψ(x)⊗f)`.
pub fn omega_map(m: &LeftModule, nb: &Bimodule, f: &LeftModule) -> Result<EvaluationMap> {
    if !same_algebra(m.algebra(), nb.left_algebra()) {
        return Err(Error::AlgebraMismatch("m and N must share the left algebra".into()));
    }
    let (hmod, hspace) = hom_right_module(m, nb)?;
    let q1: CanonicalQuotient = tensor_quotient(&hmod, f)?;
    let t = tensor_over(nb, f)?;
    let g = hom_space(m, &t.module)?;
    let fd = f.dim();
    let mut images = Vec::with_capacity(hspace.dim() * fd);
    for psi in &hspace.basis {
        for j in 0..fd {
            let mut e = vec![0; fd];
            e[j] = 1;
            let lifted = psi.kron(&Matrix::column_vector(f.field(), &e));
            images.push(t.quotient.projection.mul(&lifted));
        }
    }
    let full = g.coords_many(&images).expect("ω lands in the S-linear maps");
    Ok(EvaluationMap {
        matrix: full.mul(&q1.section),
        source_dim: q1.dim(),
        target_dim: g.dim(),
    })
}

/// Hom evaluation `θ : m ⊗_R Hom_S(N, I) → Hom_S(Hom_{R^op}(m, N), I)`,
/// `x⊗φ ↦ (ϕ ↦ φ(ϕ(x)))`, for a right `R`-module `m`.
pub fn theta_map(m: &LeftModule, nb: &Bimodule, i: &LeftModule) -> Result<EvaluationMap> {
    let hphi = hom_from_bimodule(nb, i)?;
    let q1 = tensor_quotient(m, &hphi.module)?;
    let (hmod, hspace) = hom_left_module(m, nb)?;
    let g = hom_space(&hmod, i)?;
    let h = hphi.space.dim();
    let mut images = Vec::with_capacity(m.dim() * h);
    for x in 0..m.dim() {
        for phi in &hphi.space.basis {
            let cols: Vec<Vec<u32>> = hspace.basis.iter().map(|v| phi.mul_vec(&v.column(x))).collect();
            images.push(Matrix::from_columns(i.field(), i.dim(), &cols));
        }
    }
    let full = g.coords_many(&images).expect("θ lands in the S-linear maps");
    Ok(EvaluationMap {
        matrix: full.mul(&q1.section),
        source_dim: q1.dim(),
        target_dim: g.dim(),
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{square_zero_local_ring, truncated_polynomial_ring};
    use crate::field::PrimeField;
    use crate::modrep::{dual, dual_bimodule, random_module, simple_module};

    fn dual_numbers() -> Arc<crate::Algebra> {
        Arc::new(truncated_polynomial_ring(PrimeField::new(2).unwrap(), 2).unwrap())
    }

    #[test]
    fn homotheties_of_regular_bimodule_are_iso() {
        let a = dual_numbers();
        let h = homothety_maps(&Bimodule::regular(a)).unwrap();
        assert!(h.gamma_r.is_iso());
        assert!(h.gamma_s.is_iso());
    }

    #[test]
    fn mu_and_nu_on_regular_and_zero() {
        let a = dual_numbers();
        let c = Bimodule::regular(a.clone());
        assert!(mu_map(&c, &LeftModule::regular(a.clone())).unwrap().map.is_iso());
        assert!(nu_map(&c, &LeftModule::regular(a.clone())).unwrap().map.is_iso());
        let z = LeftModule::zero(a.clone());
        assert_eq!(mu_map(&c, &z).unwrap().map.matrix.shape(), (0, 0));
        assert_eq!(nu_map(&c, &z).unwrap().map.matrix.shape(), (0, 0));
    }

    #[test]
    fn observation_identities_on_random_modules() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(2).unwrap(), 2).unwrap());
        let omega = dual_bimodule(&Bimodule::regular(a.clone()));
        for seed in 0..5 {
            let m = random_module(&a, 4, seed);
            let n = random_module(&a, 4, seed + 100);
            assert_eq!(left_right_inverses(&omega, &m, &n).unwrap(), (true, true));
        }
    }

    #[test]
    fn evaluations_are_iso_on_projectives() {
        let a = dual_numbers();
        let c = Bimodule::regular(a.clone());
        let k = simple_module(&a);
        let w = omega_map(&LeftModule::regular(a.clone()), &c, &k).unwrap();
        assert!(w.is_iso());
        let w = omega_map(&k, &c, &LeftModule::regular(a.clone())).unwrap();
        assert!(w.is_iso());
        let r_op = c.right().clone();
        let t = theta_map(&r_op, &c, &dual(&r_op).rebase(a.clone()).unwrap()).unwrap();
        assert!(t.is_iso());
        let t = theta_map(&r_op, &c, &LeftModule::zero(a)).unwrap();
        assert_eq!((t.source_dim, t.target_dim), (0, 0));
    }
}
