//! The built-in example corpus: small algebras and bimodules over `F_2`, `F_3` and `F_5`.

use std::sync::Arc;

use crate::algebra::{
    cyclic_group_table, direct_product, group_ring, matrix_ring, square_zero_local_ring, tensor_algebra,
    triangular_ring, truncated_polynomial_ring, Algebra,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::foxby::{base_change_bimodule, injective_cogenerator, tensor_embedding};
use crate::matrix::Matrix;
use crate::modrep::{dual_bimodule, Bimodule, LeftModule};

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).expect("corpus primes are prime")
}

/// The corpus algebras, all of dimension at most 9.
pub fn corpus_algebras() -> Vec<Arc<Algebra>> {
    let (f2, f3, f5) = (field(2), field(3), field(5));
    let built = [
        matrix_ring(f2, 1),
        matrix_ring(f3, 1),
        matrix_ring(f5, 1),
        matrix_ring(f2, 2),
        matrix_ring(f3, 2),
        truncated_polynomial_ring(f2, 2),
        truncated_polynomial_ring(f3, 3),
        truncated_polynomial_ring(f5, 2),
        square_zero_local_ring(f2, 2),
        triangular_ring(f2, 1),
        direct_product(&matrix_ring(f2, 1).unwrap(), &matrix_ring(f2, 1).unwrap()),
        group_ring(f2, &cyclic_group_table(2)),
        group_ring(f3, &cyclic_group_table(3)),
    ];
    built
        .into_iter()
        .map(|a| Arc::new(a.expect("corpus algebras are well formed")))
        .collect()
}

pub fn corpus_algebra(name: &str) -> Option<Arc<Algebra>> {
    corpus_algebras().into_iter().find(|a| a.name() == name)
}

/// The row space `F_p^n` as an `(F_p, M_n(F_p))`-bimodule.
pub fn morita(p: u32, n: usize) -> Result<Bimodule> {
    let f = PrimeField::new(p)?;
    let s = Arc::new(matrix_ring(f, 1)?);
    let r = Arc::new(matrix_ring(f, n)?);
    // v·E_ab moves coordinate a to coordinate b
    let right = (0..n * n)
        .map(|ab| {
            let mut m = Matrix::zeros(f, n, n);
            m.set(ab % n, ab / n, 1);
            m
        })
        .collect();
    Bimodule::new(s, r, n, vec![Matrix::identity(f, n)], right)
}

/// `D(R)` as an `(R, R)`-bimodule.
pub fn dualizing(r: &Arc<Algebra>) -> Result<Bimodule> {
    let d = dual_bimodule(&Bimodule::regular(r.clone()));
    let left = d.left().clone().rebase(r.clone())?;
    let right = d.right().clone().rebase(Arc::new(r.opposite()))?;
    Bimodule::from_modules(left, right, r.clone())
}

/// `D(Q) ⊗_Q M_n(Q)` for a commutative `Q`.
pub fn base_change_matrix(q: &Arc<Algebra>, n: usize) -> Result<Bimodule> {
    let mn = matrix_ring(q.field(), n)?;
    let r = Arc::new(tensor_algebra(q, &mn)?);
    base_change_bimodule(&injective_cogenerator(q), &r, &tensor_embedding(q, &mn))
}

/// `R ⊕ R` as an `(R, R)`-bimodule: never semidualizing.
pub fn rsquared(r: &Arc<Algebra>) -> Bimodule {
    let reg = Bimodule::regular(r.clone());
    Bimodule::direct_sum(&[&reg, &reg]).expect("same algebras")
}

/// A named bimodule with the verdict the theory predicts.
#[derive(Clone, Debug)]
pub struct CorpusBimodule {
    pub name: String,
    pub bimodule: Bimodule,
    /// expected to be faithfully semidualizing
    pub faithfully_semidualizing: bool,
}

/// The regular bimodule of every corpus algebra, the Morita row spaces, dualizing modules of
/// the commutative local algebras, and one base change.
pub fn corpus_bimodules() -> Vec<CorpusBimodule> {
    let mut out: Vec<CorpusBimodule> = corpus_algebras()
        .into_iter()
        .map(|a| CorpusBimodule {
            name: format!("regular({})", a.name()),
            bimodule: Bimodule::regular(a),
            faithfully_semidualizing: true,
        })
        .collect();
    for p in [2, 3] {
        out.push(CorpusBimodule {
            name: format!("morita({p},2)"),
            bimodule: morita(p, 2).expect("morita bimodule"),
            faithfully_semidualizing: true,
        });
    }
    for name in ["F2[x,y]/(x2,xy,y2)", "F3[x]/(x3)", "F2[x]/(x2)"] {
        let r = corpus_algebra(name).expect("corpus algebra");
        out.push(CorpusBimodule {
            name: format!("dualizing({name})"),
            bimodule: dualizing(&r).expect("dualizing bimodule"),
            faithfully_semidualizing: true,
        });
    }
    let q = corpus_algebra("F2[x]/(x2)").expect("corpus algebra");
    out.push(CorpusBimodule {
        name: "base_change(D(F2[x]/(x2)),M2)".into(),
        bimodule: base_change_matrix(&q, 2).expect("base change"),
        faithfully_semidualizing: true,
    });
    out
}

pub fn corpus_bimodule(name: &str) -> Option<CorpusBimodule> {
    corpus_bimodules().into_iter().find(|b| b.name == name)
}

/// The residue module `A/J` restricted to one simple summand, for local algebras `k`.
pub fn residue_field(a: &Arc<Algebra>) -> Result<LeftModule> {
    let rad = &a.radical().basis;
    if rad.cols() + 1 != a.dim() {
        return Err(Error::Invalid(format!("{} is not local with residue field F_p", a.name())));
    }
    let reg = LeftModule::regular(a.clone());
    Ok(reg.quotient(&reg.radical_part(rad)).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid() {
        let algs = corpus_algebras();
        assert_eq!(algs.len(), 13);
        for a in &algs {
            assert_eq!(a.validate(), Ok(()), "{}", a.name());
            assert!(a.dim() <= 9);
        }
        let mut names: Vec<&str> = algs.iter().map(|a| a.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), algs.len());
        for b in corpus_bimodules() {
            assert_eq!(b.bimodule.validate(), Ok(()), "{}", b.name);
        }
        assert_eq!(rsquared(&algs[3]).dim(), 8);
    }

    #[test]
    fn morita_row_space_shape() {
        let c = morita(3, 2).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.right_algebra().dim(), 4);
    }

    #[test]
    fn residue_fields() {
        let a = corpus_algebra("F2[x,y]/(x2,xy,y2)").unwrap();
        assert_eq!(residue_field(&a).unwrap().dim(), 1);
        assert!(residue_field(&corpus_algebra("M2(F2)").unwrap()).is_err());
    }
}
