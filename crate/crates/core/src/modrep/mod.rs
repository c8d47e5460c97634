//! Modules and bimodules given by action matrices, with Hom, tensor and duality.
//!
//! A right `R`-module is stored as a left module over `R^op`: the matrix for `r`
//! is `x ↦ x·r`, so composition follows the opposite multiplication.

mod functor;
mod iso;
mod projective;
mod random;

pub use functor::{
    dual, dual_bimodule, hom_basis, hom_from_bimodule, hom_map, hom_space, tensor_map,
    tensor_over, tensor_quotient, HomModule, HomSpace, TensorProduct,
};
pub use iso::{iso_test, IsoVerdict};
pub use projective::{generator_surjection, is_flat, is_injective, is_projective, module_generators};
pub use random::{
    find_idempotents, random_injective, random_invertible, random_module, random_module_rng,
    random_projective, random_ses, simple_module,
};

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{self, CanonicalQuotient, Echelon, SpanCoords};
use crate::matrix::Matrix;

/// Whether two algebra handles carry the same structure constants.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}

/// A finite-dimensional left module: one `dim x dim` matrix per algebra basis element.
#[derive(Clone)]
pub struct LeftModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

/// First failing representation law found by [`LeftModule::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleViolation {
    Unit,
    Product { i: usize, j: usize },
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleViolation::Unit => write!(f, "the unit does not act as the identity"),
            ModuleViolation::Product { i, j } => {
                write!(f, "action(e{i}) action(e{j}) != action(e{i} e{j})")
            }
        }
    }
}

impl LeftModule {
    /// Checks shapes only; see [`LeftModule::validate`] for the module laws.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(bad) = action
            .iter()
            .position(|m| m.shape() != (dim, dim) || m.field() != algebra.field())
        {
            return Err(Error::DimensionMismatch(format!(
                "action matrix {bad} is not a {dim}x{dim} matrix over F_{}",
                algebra.field().p()
            )));
        }
        Ok(LeftModule {
            algebra,
            dim,
            action,
        })
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Self {
        debug_assert!(action.iter().all(|m| m.shape() == (dim, dim)));
        LeftModule {
            algebra,
            dim,
            action,
        }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        LeftModule::new_unchecked(algebra, 0, action)
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let action = algebra.left_regular();
        let n = algebra.dim();
        LeftModule::new_unchecked(algebra, n, action)
    }

    /// `A^k` with coordinates `l*n + b` for summand `l` and basis element `b`.
    pub fn free(algebra: Arc<Algebra>, k: usize) -> Self {
        let f = algebra.field();
        let n = algebra.dim();
        let action = algebra
            .left_regular()
            .iter()
            .map(|l| Matrix::identity(f, k).kron(l))
            .collect();
        LeftModule::new_unchecked(algebra, k * n, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }
    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of `x` acting, for `x` in algebra coordinates.
    pub fn act(&self, x: &[u32]) -> Matrix {
        if self.dim == 0 {
            return Matrix::zeros(self.field(), 0, 0);
        }
        Algebra::combine(&self.action, x)
    }

    /// Action matrices of the algebra generators.
    pub fn generator_actions(&self) -> Vec<&Matrix> {
        self.algebra
            .generators()
            .into_iter()
            .map(|g| &self.action[g])
            .collect()
    }

    pub fn validate(&self) -> std::result::Result<(), ModuleViolation> {
        let a = &self.algebra;
        if !self.act(a.one()).is_identity() {
            return Err(ModuleViolation::Unit);
        }
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let prod = a.mul(&a.basis_vector(i), &a.basis_vector(j));
                if self.action[i].mul(&self.action[j]) != self.act(&prod) {
                    return Err(ModuleViolation::Product { i, j });
                }
            }
        }
        Ok(())
    }

    /// The same module over another handle of a structurally equal algebra.
    pub fn rebase(self, algebra: Arc<Algebra>) -> Result<Self> {
        if !same_algebra(&self.algebra, &algebra) {
            return Err(Error::AlgebraMismatch(format!(
                "{} and {} differ",
                self.algebra.name(),
                algebra.name()
            )));
        }
        Ok(LeftModule { algebra, ..self })
    }

    /// Conjugate by an invertible change of basis: actions become `g M g^-1`.
    pub fn change_basis(&self, g: &Matrix, g_inv: &Matrix) -> LeftModule {
        let action = self.action.iter().map(|m| g.mul(m).mul(g_inv)).collect();
        LeftModule::new_unchecked(self.algebra.clone(), self.dim, action)
    }

    /// Basis (columns) of the smallest submodule containing the given vectors.
    pub fn span_closure(&self, vectors: &[Vec<u32>]) -> Matrix {
        let f = self.field();
        let mut ech = Echelon::new(f, self.dim);
        let mut cols = Vec::new();
        let mut frontier = Vec::new();
        for v in vectors {
            if ech.insert(v) {
                cols.push(v.clone());
                frontier.push(v.clone());
            }
        }
        let gens = self.generator_actions();
        while let Some(v) = frontier.pop() {
            for g in &gens {
                let w = g.mul_vec(&v);
                if ech.insert(&w) {
                    cols.push(w.clone());
                    frontier.push(w);
                }
            }
        }
        Matrix::from_columns(f, self.dim, &cols)
    }

    /// Whether the column span of `basis` is stable under the action.
    pub fn is_submodule(&self, basis: &Matrix) -> bool {
        let mut ech = Echelon::new(self.field(), self.dim);
        for c in basis.columns() {
            ech.insert(&c);
        }
        self.generator_actions()
            .iter()
            .all(|g| g.mul(basis).columns().iter().all(|c| ech.contains(c)))
    }

    /// Submodule on independent stable columns `basis`, with the inclusion matrix.
    pub fn submodule(&self, basis: &Matrix) -> (LeftModule, Matrix) {
        let f = self.field();
        if basis.cols() == 0 {
            return (LeftModule::zero(self.algebra.clone()), Matrix::zeros(f, self.dim, 0));
        }
        let sc = SpanCoords::new(basis.clone());
        let action = self.action.iter().map(|m| sc.restrict(m)).collect();
        (
            LeftModule::new_unchecked(self.algebra.clone(), basis.cols(), action),
            basis.clone(),
        )
    }

    /// Quotient by the stable span of `rel` with the canonical complement, and the projection.
    pub fn quotient(&self, rel: &Matrix) -> (LeftModule, Matrix) {
        let q = CanonicalQuotient::new(self.field(), self.dim, rel);
        let action = self
            .action
            .iter()
            .map(|m| q.projection.mul(m).mul(&q.section))
            .collect();
        (
            LeftModule::new_unchecked(self.algebra.clone(), q.dim(), action),
            q.projection,
        )
    }

    /// `J·M` for a radical basis given as algebra-coordinate columns.
    pub fn radical_part(&self, radical: &Matrix) -> Matrix {
        let f = self.field();
        let mut blocks = Vec::new();
        for r in radical.columns() {
            blocks.push(self.act(&r));
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        linalg::column_basis(&Matrix::hstack(f, self.dim, &refs))
    }
}

impl fmt::Debug for LeftModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftModule(dim {} over {})", self.dim, self.algebra.name())
    }
}

/// A homomorphism given by a `target.dim x source.dim` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: LeftModule,
    pub target: LeftModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Checks shapes, the common algebra, and that the matrix intertwines the actions.
    pub fn new(source: LeftModule, target: LeftModule, matrix: Matrix) -> Result<Self> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch("map between modules over different algebras".into()));
        }
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {:?}, expected {}x{}",
                matrix.shape(),
                target.dim(),
                source.dim()
            )));
        }
        let map = ModuleMap {
            source,
            target,
            matrix,
        };
        if !map.is_homomorphism() {
            return Err(Error::Invalid("matrix does not intertwine the actions".into()));
        }
        Ok(map)
    }

    pub fn identity(m: &LeftModule) -> Self {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(m.field(), m.dim()),
        }
    }

    pub fn is_homomorphism(&self) -> bool {
        (0..self.source.algebra().dim()).all(|i| {
            self.target.action(i).mul(&self.matrix) == self.matrix.mul(self.source.action(i))
        })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// `self ∘ first`
    pub fn after(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        }
    }
}

/// `0 → sub →(inc) mid →(proj) quo → 0`
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    pub sub: LeftModule,
    pub mid: LeftModule,
    pub quo: LeftModule,
    pub inc: Matrix,
    pub proj: Matrix,
}

impl ShortExactSeq {
    pub fn is_exact(&self) -> bool {
        let ri = linalg::rank(&self.inc);
        let rq = linalg::rank(&self.proj);
        ri == self.sub.dim()
            && rq == self.quo.dim()
            && self.proj.mul(&self.inc).is_zero()
            && ri + rq == self.mid.dim()
    }

    pub fn maps_are_homomorphisms(&self) -> bool {
        let i = ModuleMap {
            source: self.sub.clone(),
            target: self.mid.clone(),
            matrix: self.inc.clone(),
        };
        let q = ModuleMap {
            source: self.mid.clone(),
            target: self.quo.clone(),
            matrix: self.proj.clone(),
        };
        i.is_homomorphism() && q.is_homomorphism()
    }
}

/// `0 → U → m → m/U → 0` for the smallest submodule `U` containing `vectors` (columns).
pub fn submodule_closure(m: &LeftModule, vectors: &Matrix) -> ShortExactSeq {
    let basis = m.span_closure(&vectors.columns());
    let (sub, inc) = m.submodule(&basis);
    let (quo, proj) = m.quotient(&basis);
    ShortExactSeq {
        sub,
        mid: m.clone(),
        quo,
        inc,
        proj,
    }
}

/// A direct sum with its biproduct injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: LeftModule,
    pub injections: Vec<Matrix>,
    pub projections: Vec<Matrix>,
}

pub fn direct_sum(algebra: &Arc<Algebra>, ms: &[&LeftModule]) -> Result<DirectSum> {
    if let Some(bad) = ms.iter().find(|m| !same_algebra(m.algebra(), algebra)) {
        return Err(Error::AlgebraMismatch(format!(
            "summand over {} in a sum over {}",
            bad.algebra().name(),
            algebra.name()
        )));
    }
    let f = algebra.field();
    let total: usize = ms.iter().map(|m| m.dim()).sum();
    let action = (0..algebra.dim())
        .map(|i| {
            let blocks: Vec<&Matrix> = ms.iter().map(|m| m.action(i)).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for m in ms {
        let mut inj = Matrix::zeros(f, total, m.dim());
        inj.set_block(offset, 0, &Matrix::identity(f, m.dim()));
        projections.push(inj.transpose());
        injections.push(inj);
        offset += m.dim();
    }
    Ok(DirectSum {
        module: LeftModule::new_unchecked(algebra.clone(), total, action),
        injections,
        projections,
    })
}

/// An `(S, R)`-bimodule: a left `S`-module and a left `R^op`-module on the same space
/// whose actions commute.
#[derive(Clone)]
pub struct Bimodule {
    left: LeftModule,
    right: LeftModule,
    right_algebra: Arc<Algebra>,
}

/// First failing law found by [`Bimodule::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleViolation {
    Left(ModuleViolation),
    Right(ModuleViolation),
    Commute { s: usize, r: usize },
}

impl fmt::Display for BimoduleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BimoduleViolation::Left(v) => write!(f, "left action: {v}"),
            BimoduleViolation::Right(v) => write!(f, "right action: {v}"),
            BimoduleViolation::Commute { s, r } => {
                write!(f, "left action of e{s} does not commute with right action of e{r}")
            }
        }
    }
}

impl Bimodule {
    /// `right_action[r]` is the matrix of `x ↦ x·e_r`.
    pub fn new(
        left_algebra: Arc<Algebra>,
        right_algebra: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self> {
        if left_algebra.field() != right_algebra.field() {
            return Err(Error::FieldMismatch(
                left_algebra.field().p(),
                right_algebra.field().p(),
            ));
        }
        let op = Arc::new(right_algebra.opposite());
        Ok(Bimodule {
            left: LeftModule::new(left_algebra, dim, left_action)?,
            right: LeftModule::new(op, dim, right_action)?,
            right_algebra,
        })
    }

    /// Assemble from a left `S`-module and a left `R^op`-module on the same space.
    pub fn from_modules(left: LeftModule, right: LeftModule, right_algebra: Arc<Algebra>) -> Result<Self> {
        if left.dim() != right.dim() {
            return Err(Error::DimensionMismatch("left and right actions on different spaces".into()));
        }
        if !right.algebra().same_structure(&right_algebra.opposite()) {
            return Err(Error::AlgebraMismatch("right action is not over the opposite algebra".into()));
        }
        Ok(Bimodule {
            left,
            right,
            right_algebra,
        })
    }

    /// `A` as an `(A, A)`-bimodule.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let n = algebra.dim();
        let right = (0..n)
            .map(|r| algebra.right_mult(&algebra.basis_vector(r)))
            .collect();
        Bimodule::new(algebra.clone(), algebra.clone(), n, algebra.left_regular(), right)
            .expect("regular bimodule shapes")
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        self.left.algebra()
    }
    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right_algebra
    }
    /// The left `S`-module structure.
    pub fn left(&self) -> &LeftModule {
        &self.left
    }
    /// The right structure as a left `R^op`-module.
    pub fn right(&self) -> &LeftModule {
        &self.right
    }
    pub fn dim(&self) -> usize {
        self.left.dim()
    }
    pub fn field(&self) -> PrimeField {
        self.left.field()
    }
    pub fn left_action(&self, s: usize) -> &Matrix {
        self.left.action(s)
    }
    pub fn right_action(&self, r: usize) -> &Matrix {
        self.right.action(r)
    }

    pub fn validate(&self) -> std::result::Result<(), BimoduleViolation> {
        self.left.validate().map_err(BimoduleViolation::Left)?;
        self.right.validate().map_err(BimoduleViolation::Right)?;
        for s in 0..self.left_algebra().dim() {
            for r in 0..self.right_algebra.dim() {
                let (l, p) = (self.left.action(s), self.right.action(r));
                if l.mul(p) != p.mul(l) {
                    return Err(BimoduleViolation::Commute { s, r });
                }
            }
        }
        Ok(())
    }

    /// The same space as an `(R^op, S^op)`-bimodule.
    pub fn flip(&self) -> Bimodule {
        let s = self.left_algebra();
        let s_op = Arc::new(s.opposite());
        let right = LeftModule::new_unchecked(s.clone(), self.dim(), self.left.action.clone());
        Bimodule {
            left: self.right.clone(),
            right,
            right_algebra: s_op,
        }
    }

    pub fn direct_sum(parts: &[&Bimodule]) -> Result<Bimodule> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Invalid("empty bimodule sum".into()))?;
        let lefts: Vec<&LeftModule> = parts.iter().map(|c| &c.left).collect();
        let rights: Vec<&LeftModule> = parts.iter().map(|c| &c.right).collect();
        Ok(Bimodule {
            left: direct_sum(first.left_algebra(), &lefts)?.module,
            right: direct_sum(first.right.algebra(), &rights)?.module,
            right_algebra: first.right_algebra.clone(),
        })
    }
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bimodule(dim {} over ({}, {}))",
            self.dim(),
            self.left_algebra().name(),
            self.right_algebra.name()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{square_zero_local_ring, truncated_polynomial_ring};

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(truncated_polynomial_ring(PrimeField::new(2).unwrap(), 2).unwrap())
    }

    #[test]
    fn validate_examples() {
        let a = dual_numbers();
        assert_eq!(LeftModule::regular(a.clone()).validate(), Ok(()));
        let f = a.field();
        let kk = LeftModule::new(a.clone(), 2, vec![Matrix::identity(f, 2), Matrix::zeros(f, 2, 2)]).unwrap();
        assert_eq!(kk.validate(), Ok(()));
        let bad = LeftModule::new(a.clone(), 1, vec![Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1)]).unwrap();
        assert_eq!(bad.validate(), Err(ModuleViolation::Unit));
        assert!(LeftModule::new(a, 1, vec![Matrix::identity(f, 1)]).is_err());
    }

    #[test]
    fn closure_of_x_in_dual_numbers() {
        let a = dual_numbers();
        let r = LeftModule::regular(a.clone());
        let ses = submodule_closure(&r, &Matrix::column_vector(a.field(), &[0, 1]));
        assert_eq!(ses.sub.dim(), 1);
        assert_eq!(ses.quo.dim(), 1);
        assert!(ses.is_exact());
        assert!(ses.maps_are_homomorphisms());
        assert_eq!(ses.sub.validate(), Ok(()));
        assert_eq!(ses.quo.validate(), Ok(()));
        // x acts by zero on both ends
        assert!(ses.sub.action(1).is_zero());
        assert!(ses.quo.action(1).is_zero());

        let all = submodule_closure(&r, &Matrix::identity(a.field(), 2));
        assert_eq!((all.sub.dim(), all.quo.dim()), (2, 0));
        let none = submodule_closure(&r, &Matrix::zeros(a.field(), 2, 0));
        assert_eq!((none.sub.dim(), none.quo.dim()), (0, 2));
    }

    #[test]
    fn biproduct_laws() {
        let a = dual_numbers();
        let r = LeftModule::regular(a.clone());
        let empty = direct_sum(&a, &[]).unwrap();
        assert_eq!(empty.module.dim(), 0);
        let s = direct_sum(&a, &[&r, &r]).unwrap();
        assert_eq!(s.module.dim(), 4);
        let f = a.field();
        let mut total = Matrix::zeros(f, 4, 4);
        for (i, p) in s.injections.iter().zip(&s.projections) {
            assert!(p.mul(i).is_identity());
            total = total.add(&i.mul(p));
        }
        assert!(total.is_identity());
        assert_eq!(s.module.validate(), Ok(()));
    }

    #[test]
    fn regular_bimodule_commutes() {
        let a = Arc::new(square_zero_local_ring(PrimeField::new(3).unwrap(), 2).unwrap());
        let c = Bimodule::regular(a);
        assert_eq!(c.validate(), Ok(()));
        assert_eq!(c.flip().validate(), Ok(()));
        let cc = Bimodule::direct_sum(&[&c, &c]).unwrap();
        assert_eq!(cc.dim(), 6);
        assert_eq!(cc.validate(), Ok(()));
    }
}
