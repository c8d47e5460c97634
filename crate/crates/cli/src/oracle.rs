//! Brute-force oracles over algebras with at most 32 elements: every subspace is enumerated
//! as a bitmask over the elements, with no linear algebra beyond addition and scaling.

use std::collections::BTreeSet;
use std::sync::Arc;

use anyhow::{bail, Result};
use sdcheck_core::modrep::{hom_space, Bimodule, LeftModule};
use sdcheck_core::{Algebra, Matrix};

/// Largest number of elements an oracle will enumerate.
pub const MAX_ELEMENTS: u64 = 32;

/// The elements of `F_p^n`, indexed by their base-`p` encoding.
#[derive(Clone, Debug)]
pub struct ElementSpace {
    pub p: u32,
    pub n: usize,
    pub size: usize,
}

impl ElementSpace {
    pub fn new(p: u32, n: usize) -> Result<Self> {
        let size = (p as u64).checked_pow(n as u32).filter(|&s| s <= MAX_ELEMENTS);
        match size {
            Some(size) => Ok(ElementSpace { p, n, size: size as usize }),
            None => bail!("F_{p}^{n} is too large to enumerate"),
        }
    }

    pub fn encode(&self, v: &[u32]) -> usize {
        v.iter().rev().fold(0, |acc, &x| acc * self.p as usize + x as usize)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let d = (idx % self.p as usize) as u32;
                idx /= self.p as usize;
                d
            })
            .collect()
    }

    fn add_scaled(&self, x: usize, c: u32, y: usize) -> usize {
        let (a, b) = (self.decode(x), self.decode(y));
        let v: Vec<u32> = a.iter().zip(&b).map(|(s, t)| (s + c * t) % self.p).collect();
        self.encode(&v)
    }

    pub fn elements(&self, mask: u64) -> Vec<usize> {
        (0..self.size).filter(|i| mask >> i & 1 == 1).collect()
    }

    /// Smallest subspace containing `mask` and `v`.
    pub fn join(&self, mask: u64, v: usize) -> u64 {
        let mut out = mask;
        for s in self.elements(mask) {
            for c in 0..self.p {
                out |= 1 << self.add_scaled(s, c, v);
            }
        }
        out
    }

    pub fn span(&self, vectors: &[Vec<u32>]) -> u64 {
        vectors.iter().fold(1, |m, v| self.join(m, self.encode(v)))
    }

    /// Every subspace, by breadth-first joining of single vectors.
    pub fn subspaces(&self) -> Vec<u64> {
        let mut seen = BTreeSet::from([1u64]);
        let mut frontier = vec![1u64];
        while let Some(s) = frontier.pop() {
            for v in 0..self.size {
                if s >> v & 1 == 0 {
                    let t = self.join(s, v);
                    if seen.insert(t) {
                        frontier.push(t);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Independent columns spanning the subspace `mask`.
    pub fn basis(&self, mask: u64) -> Vec<Vec<u32>> {
        let mut span = 1u64;
        let mut out = Vec::new();
        for v in self.elements(mask) {
            if span >> v & 1 == 0 {
                span = self.join(span, v);
                out.push(self.decode(v));
            }
        }
        out
    }
}

/// Subspaces of `A` closed under left (and, if `two_sided`, right) multiplication.
pub fn ideals(a: &Algebra, two_sided: bool) -> Result<Vec<u64>> {
    let sp = ElementSpace::new(a.field().p(), a.dim())?;
    let basis: Vec<Vec<u32>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    Ok(sp
        .subspaces()
        .into_iter()
        .filter(|&mask| {
            sp.elements(mask).into_iter().all(|x| {
                let x = sp.decode(x);
                basis.iter().all(|e| {
                    mask >> sp.encode(&a.mul(e, &x)) & 1 == 1
                        && (!two_sided || mask >> sp.encode(&a.mul(&x, e)) & 1 == 1)
                })
            })
        })
        .collect())
}

/// Whether the ideal `mask` has some power equal to zero.
fn is_nilpotent(a: &Algebra, sp: &ElementSpace, mask: u64) -> bool {
    let ideal = sp.elements(mask);
    let mut power = mask;
    for _ in 0..=a.dim() {
        if power == 1 {
            return true;
        }
        let mut next = 1u64;
        for &x in &sp.elements(power) {
            for &y in &ideal {
                next = sp.join(next, sp.encode(&a.mul(&sp.decode(x), &sp.decode(y))));
            }
        }
        if next == power {
            return false;
        }
        power = next;
    }
    power == 1
}

/// The largest nilpotent two-sided ideal, checked to contain every nilpotent ideal.
pub fn brute_radical(a: &Algebra) -> Result<u64> {
    let sp = ElementSpace::new(a.field().p(), a.dim())?;
    let nilpotent: Vec<u64> = ideals(a, true)?
        .into_iter()
        .filter(|&m| is_nilpotent(a, &sp, m))
        .collect();
    let largest = *nilpotent.iter().max_by_key(|m| m.count_ones()).expect("zero ideal is nilpotent");
    if nilpotent.iter().any(|&m| m & !largest != 0) {
        bail!("nilpotent ideals of {} have no largest element", a.name());
    }
    Ok(largest)
}

/// The span of the columns of `basis`, as an element mask.
pub fn column_span(a: &Algebra, basis: &Matrix) -> Result<u64> {
    let sp = ElementSpace::new(a.field().p(), a.dim())?;
    Ok(sp.span(&basis.columns()))
}

/// Faithfulness of a left module by cyclic modules: `Hom(m, A/L) != 0` for every proper left
/// ideal `L`. `None` when the algebra is too large to enumerate.
pub fn faithful_by_cyclics(m: &LeftModule) -> Result<Option<bool>> {
    let a = m.algebra();
    let Ok(sp) = ElementSpace::new(a.field().p(), a.dim()) else {
        return Ok(None);
    };
    let whole = (1u64 << sp.size) - 1;
    let reg = LeftModule::regular(a.clone());
    for l in ideals(a, false)? {
        if l == whole {
            continue;
        }
        let basis = Matrix::from_columns(a.field(), a.dim(), &sp.basis(l));
        let (cyclic, _) = reg.quotient(&basis);
        if hom_space(m, &cyclic)?.dim() == 0 {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Both sides of the cyclic-module faithfulness oracle for `C`.
pub fn faithful_oracle(c: &Bimodule) -> Result<(Option<bool>, Option<bool>)> {
    Ok((faithful_by_cyclics(c.left())?, faithful_by_cyclics(c.right())?))
}

/// `eA` for an idempotent `e` of a commutative algebra, as an `(A, A)`-bimodule.
pub fn corner_bimodule(a: &Arc<Algebra>, e: &[u32]) -> Result<Bimodule> {
    if !a.is_commutative() || a.mul(e, e) != e {
        bail!("corner bimodules need an idempotent of a commutative algebra");
    }
    let f = a.field();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    let mut current = Matrix::zeros(f, a.dim(), 0);
    for i in 0..a.dim() {
        let v = a.mul(e, &a.basis_vector(i));
        let mut trial = cols.clone();
        trial.push(v);
        let m = Matrix::from_columns(f, a.dim(), &trial);
        if sdcheck_core::linalg::rank(&m) > current.cols() {
            cols = trial;
            current = m;
        }
    }
    let (left, _) = LeftModule::regular(a.clone()).submodule(&current);
    let (right, _) = LeftModule::regular(Arc::new(a.opposite())).submodule(&current);
    Ok(Bimodule::from_modules(left, right, a.clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sdcheck_core::corpus::corpus_algebra;

    #[test]
    fn subspace_counts() {
        // Gaussian binomials: F_2^3 has 1 + 7 + 7 + 1 subspaces, F_3^2 has 1 + 4 + 1
        assert_eq!(ElementSpace::new(2, 3).unwrap().subspaces().len(), 16);
        assert_eq!(ElementSpace::new(3, 2).unwrap().subspaces().len(), 6);
        assert!(ElementSpace::new(3, 4).is_err());
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = corpus_algebra("F2[x]/(x2)").unwrap();
        let j = brute_radical(&a).unwrap();
        assert_eq!(j.count_ones(), 2);
        assert_eq!(j, column_span(&a, &a.radical().basis).unwrap());
    }

    #[test]
    fn corner_of_product_is_not_faithful() {
        let a = corpus_algebra("F2xF2").unwrap();
        let c = corner_bimodule(&a, &[1, 0]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(faithful_oracle(&c).unwrap(), (Some(false), Some(false)));
        let reg = Bimodule::regular(a);
        assert_eq!(faithful_oracle(&reg).unwrap(), (Some(true), Some(true)));
    }
}
