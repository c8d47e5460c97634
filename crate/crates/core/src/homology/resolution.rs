//! Lazily extended free resolutions.
//!
//! Syzygies are kept as subspaces of the ambient free module `A^r`, whose action is
//! block diagonal, so the action matrices of large syzygies are never formed.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::{self, Echelon};
use crate::matrix::Matrix;
use crate::modrep::{generator_surjection, iso_test, module_generators, LeftModule};

use super::complex::ChainComplex;

/// Syzygies larger than this are not compared for periodicity.
pub const PERIODICITY_DIM_CAP: usize = 48;

/// `x ↦ blockdiag(a, …, a) x` on `A^r`, blocks of size `a.rows()`.
pub(crate) fn free_act(a: &Matrix, v: &[u32]) -> Vec<u32> {
    let n = a.rows();
    let mut out = Vec::with_capacity(v.len());
    for block in v.chunks(n) {
        out.extend(a.mul_vec(block));
    }
    out
}

/// Full matrix of the map `A^k → A^r` sending the `l`-th generator to `gens[l]`:
/// column `l*n + b` is `e_b · gens[l]`.
pub(crate) fn free_map_full(regular: &[Matrix], rows: usize, gens: &Matrix) -> Matrix {
    let mut cols = Vec::with_capacity(gens.cols() * regular.len());
    for g in gens.columns() {
        for l in regular {
            cols.push(free_act(l, &g));
        }
    }
    Matrix::from_columns(gens.field(), rows, &cols)
}

/// `… → A^{r_1} → A^{r_0} → m → 0`, computed one degree at a time.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    module: LeftModule,
    regular: Vec<Matrix>,
    radical: Matrix,
    ranks: Vec<usize>,
    augmentation: Matrix,
    /// `gens[i]`: images of the generators of `F_{i+1}` in `F_i`, an `(r_i n) x r_{i+1}` matrix
    gens: Vec<Matrix>,
    /// kernel of the last computed map, inside the top free module
    top_kernel: Matrix,
    finished: bool,
    periodicity: Option<(usize, usize)>,
    periodicity_checked: usize,
    syzygy_cache: Vec<Option<LeftModule>>,
}

impl FreeResolution {
    pub fn new(m: &LeftModule) -> Self {
        let a = m.algebra();
        let radical = a.radical().basis.clone();
        let gens = module_generators(m, Some(&radical));
        let augmentation = generator_surjection(m, &gens);
        let top_kernel = linalg::kernel(&augmentation);
        let mut res = FreeResolution {
            module: m.clone(),
            regular: a.left_regular(),
            radical,
            ranks: vec![gens.len()],
            augmentation,
            gens: Vec::new(),
            finished: false,
            top_kernel,
            periodicity: None,
            periodicity_checked: 0,
            syzygy_cache: Vec::new(),
        };
        res.finished = res.top_kernel.cols() == 0;
        res
    }

    pub fn module(&self) -> &LeftModule {
        &self.module
    }
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.module.algebra()
    }
    fn n(&self) -> usize {
        self.algebra().dim()
    }

    /// Highest degree computed so far.
    pub fn computed(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `Some(L)` once `F_L` is known to be the last nonzero term (`L = 0` for `m = 0`).
    pub fn length(&self) -> Option<usize> {
        self.finished.then(|| self.computed())
    }

    /// Computes one more degree; returns false when the resolution has ended.
    pub fn step(&mut self) -> bool {
        if self.finished {
            return false;
        }
        let top = self.computed();
        let ambient = self.ranks[top] * self.n();
        let chosen = self.choose_generators(ambient);
        let g = Matrix::from_columns(self.module.field(), ambient, &chosen);
        let full = free_map_full(&self.regular, ambient, &g);
        debug_assert_eq!(linalg::rank(&full), self.top_kernel.cols());
        self.top_kernel = linalg::kernel(&full);
        self.ranks.push(chosen.len());
        self.gens.push(g);
        self.finished = self.top_kernel.cols() == 0;
        true
    }

    /// Ensures degrees `0..=len` are known (or the resolution ended earlier).
    pub fn extend_to(&mut self, len: usize) {
        while self.computed() < len && self.step() {}
    }

    fn choose_generators(&self, ambient: usize) -> Vec<Vec<u32>> {
        let f = self.module.field();
        let k = &self.top_kernel;
        let mut ech = Echelon::new(f, ambient);
        let basis = k.columns();
        for j in self.radical.columns() {
            let act = Algebra::combine(&self.regular, &j);
            for v in &basis {
                ech.insert(&free_act(&act, v));
            }
        }
        let gens: Vec<&Matrix> = self
            .algebra()
            .generators()
            .into_iter()
            .map(|g| &self.regular[g])
            .collect();
        let mut chosen = Vec::new();
        for v in &basis {
            if ech.dim() == basis.len() {
                break;
            }
            if !ech.insert(v) {
                continue;
            }
            chosen.push(v.clone());
            let mut frontier = vec![v.clone()];
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = free_act(g, &x);
                    if ech.insert(&y) {
                        frontier.push(y);
                    }
                }
            }
        }
        chosen
    }

    /// `r_i`, zero past the end (extends as needed).
    pub fn rank(&mut self, i: usize) -> usize {
        self.extend_to(i);
        self.ranks.get(i).copied().unwrap_or(0)
    }

    /// Ranks known so far.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `F_0 → m` as a full `dim m x r_0 n` matrix.
    pub fn augmentation(&self) -> &Matrix {
        &self.augmentation
    }

    /// Generator images of `d_i : F_i → F_{i-1}` (`i >= 1`), an `(r_{i-1} n) x r_i` matrix.
    pub fn generator_images(&mut self, i: usize) -> Matrix {
        assert!(i >= 1);
        self.extend_to(i);
        match self.gens.get(i - 1) {
            Some(g) => g.clone(),
            None => {
                let rows = self.rank(i - 1) * self.n();
                Matrix::zeros(self.module.field(), rows, 0)
            }
        }
    }

    /// Full matrix of `d_i : F_i → F_{i-1}`.
    pub fn differential(&mut self, i: usize) -> Matrix {
        let g = self.generator_images(i);
        let rows = self.rank(i - 1) * self.n();
        free_map_full(&self.regular, rows, &g)
    }

    pub fn free_module(&mut self, i: usize) -> LeftModule {
        let r = self.rank(i);
        LeftModule::free(self.algebra().clone(), r)
    }

    /// Dimension of `Ω^i`, with `Ω^0 = m`.
    pub fn syzygy_dim(&mut self, i: usize) -> usize {
        let mut d = self.module.dim();
        for t in 0..i {
            d = self.rank(t) * self.n() - d;
        }
        d
    }

    /// `Ω^i` as a module: `m` for `i = 0`, otherwise the kernel of `F_{i-1} → F_{i-2}` (or of
    /// the augmentation).
    pub fn syzygy(&mut self, i: usize) -> LeftModule {
        if i == 0 {
            return self.module.clone();
        }
        if let Some(Some(m)) = self.syzygy_cache.get(i) {
            return m.clone();
        }
        let map = if i == 1 {
            self.extend_to(0);
            self.augmentation.clone()
        } else {
            self.differential(i - 1)
        };
        let k = linalg::kernel(&map);
        let free = self.free_module(i - 1);
        let (m, _) = free.submodule(&k);
        if self.syzygy_cache.len() <= i {
            self.syzygy_cache.resize(i + 1, None);
        }
        self.syzygy_cache[i] = Some(m.clone());
        m
    }

    /// First pair `i < j <= upto` with `Ω^i ≅ Ω^j` proven by [`iso_test`], comparing only
    /// syzygies of dimension at most [`PERIODICITY_DIM_CAP`].
    pub fn periodicity(&mut self, upto: usize) -> Option<(usize, usize)> {
        if let Some(p) = self.periodicity {
            return (p.1 <= upto).then_some(p);
        }
        let start = self.periodicity_checked + 1;
        for j in start..=upto {
            self.periodicity_checked = j;
            let dj = self.syzygy_dim(j);
            if dj == 0 || dj > PERIODICITY_DIM_CAP {
                continue;
            }
            for i in 0..j {
                if self.syzygy_dim(i) != dj {
                    continue;
                }
                let (a, b) = (self.syzygy(i), self.syzygy(j));
                if matches!(iso_test(&a, &b), Ok(v) if v.is_yes()) {
                    self.periodicity = Some((i, j));
                    return self.periodicity;
                }
            }
        }
        None
    }

    /// The augmented complex `F_len → … → F_0 → m → 0`, with `m` in degree `-1`.
    pub fn augmented_complex(&mut self, len: usize) -> ChainComplex {
        let f = self.module.field();
        let n = self.n();
        let mut dims = vec![self.module.dim()];
        let mut diffs = vec![self.augmentation.clone()];
        dims.push(self.rank(0) * n);
        for i in 1..=len {
            dims.push(self.rank(i) * n);
            diffs.push(self.differential(i));
        }
        ChainComplex::new(f, -1, dims, diffs).expect("resolution shapes")
    }
}

/// Augmented free resolution of `m` through degree `length`.
pub fn free_resolution(m: &LeftModule, length: usize) -> ChainComplex {
    FreeResolution::new(m).augmented_complex(length)
}
