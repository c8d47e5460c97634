//! Exact elimination over `F_p`: rank, kernels, solving, and subspace bookkeeping.
//!
//! Everything here is deterministic. Over `F_2` rows are bit-packed into `u64`
//! words, which is what makes resolutions of a few thousand dimensions cheap.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

/// Reduced row echelon form of a matrix: the nonzero rows and their pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub pivots: Vec<usize>,
    /// `rank x cols`, reduced (each pivot column is a unit vector).
    pub rows: Matrix,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn pack_gf2(m: &Matrix) -> (Vec<Vec<u64>>, usize) {
    let words = m.cols().div_ceil(64);
    let rows = (0..m.rows())
        .map(|i| {
            let mut w = vec![0u64; words];
            for (j, &x) in m.row(i).iter().enumerate() {
                if x & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    (rows, words)
}

#[inline]
fn bit(row: &[u64], j: usize) -> bool {
    (row[j / 64] >> (j % 64)) & 1 == 1
}

/// Bit-packed elimination; returns pivot columns and leaves the first `rank` rows reduced.
fn eliminate_gf2(rows: &mut [Vec<u64>], cols: usize, reduced: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| bit(&rows[i], c)) else {
            continue;
        };
        rows.swap(r, piv);
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().expect("row");
        let w0 = c / 64;
        for other in rest.iter_mut() {
            if bit(other, c) {
                for (o, &q) in other[w0..].iter_mut().zip(&prow[w0..]) {
                    *o ^= q;
                }
            }
        }
        if reduced {
            for other in head.iter_mut() {
                if bit(other, c) {
                    for (o, &q) in other[w0..].iter_mut().zip(&prow[w0..]) {
                        *o ^= q;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn eliminate_generic(
    field: PrimeField,
    rows: &mut [Vec<u32>],
    cols: usize,
    reduced: bool,
) -> Vec<usize> {
    let p = field.p() as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][c]);
        if inv != 1 {
            for x in rows[r][c..].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().expect("row");
        let mut clear = |other: &mut Vec<u32>| {
            let factor = other[c] as u64;
            if factor != 0 {
                let neg = p - factor;
                for (o, &q) in other[c..].iter_mut().zip(&prow[c..]) {
                    if q != 0 {
                        *o = ((*o as u64 + neg * q as u64) % p) as u32;
                    }
                }
            }
        };
        rest.iter_mut().for_each(&mut clear);
        if reduced {
            head.iter_mut().for_each(&mut clear);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form.
pub fn rref(m: &Matrix) -> Rref {
    let field = m.field();
    let cols = m.cols();
    if field.p() == 2 {
        let (mut rows, _) = pack_gf2(m);
        let pivots = eliminate_gf2(&mut rows, cols, true);
        let mut out = Matrix::zeros(field, pivots.len(), cols);
        for (i, row) in rows.iter().take(pivots.len()).enumerate() {
            for j in 0..cols {
                if bit(row, j) {
                    out.set(i, j, 1);
                }
            }
        }
        Rref { pivots, rows: out }
    } else {
        let mut rows: Vec<Vec<u32>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let pivots = eliminate_generic(field, &mut rows, cols, true);
        let data: Vec<u32> = rows.into_iter().take(pivots.len()).flatten().collect();
        Rref {
            rows: Matrix::from_flat(field, pivots.len(), cols, data).expect("shape"),
            pivots,
        }
    }
}

/// Rank over `F_p`.
pub fn rank(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    // eliminate along the shorter side
    let m = if m.rows() > m.cols() * 2 {
        m.transpose()
    } else {
        m.clone()
    };
    if m.field().p() == 2 {
        let (mut rows, _) = pack_gf2(&m);
        eliminate_gf2(&mut rows, m.cols(), false).len()
    } else {
        let mut rows: Vec<Vec<u32>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        eliminate_generic(m.field(), &mut rows, m.cols(), false).len()
    }
}

/// Kernel basis of `m` as the columns of a `cols x (cols - rank)` matrix.
///
/// Basis vectors are indexed by the free (non-pivot) columns in increasing order,
/// each with a `1` in its own free coordinate.
pub fn kernel(m: &Matrix) -> Matrix {
    let field = m.field();
    let n = m.cols();
    let r = rref(m);
    let mut is_pivot = vec![false; n];
    for &c in &r.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut k = Matrix::zeros(field, n, free.len());
    for (t, &fcol) in free.iter().enumerate() {
        k.set(fcol, t, 1);
        for (row, &pc) in r.pivots.iter().enumerate() {
            let v = r.rows.get(row, fcol);
            if v != 0 {
                k.set(pc, t, field.neg(v));
            }
        }
    }
    k
}

/// Some `x` with `a * x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: a has {} rows, b has {}",
            a.rows(),
            b.rows()
        )));
    }
    let field = a.field();
    let aug = Matrix::hstack(field, a.rows(), &[a, b]);
    let r = rref(&aug);
    if r.pivots.iter().any(|&c| c >= a.cols()) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(field, a.cols(), b.cols());
    for (row, &pc) in r.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(pc, j, r.rows.get(row, a.cols() + j));
        }
    }
    Ok(Some(x))
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let id = Matrix::identity(m.field(), m.rows());
    match solve(m, &id) {
        Ok(Some(x)) if rank(m) == m.rows() => Some(x),
        _ => None,
    }
}

/// Column space basis: the pivot columns of `m` (a subset of its columns).
pub fn column_basis(m: &Matrix) -> Matrix {
    let r = rref(m);
    m.select_columns(&r.pivots)
}

/// Incremental echelon basis of a subspace of `F_p^n`, used for greedy span building.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    n: usize,
    repr: EchelonRows,
}

#[derive(Clone, Debug)]
enum EchelonRows {
    Gf2 { rows: Vec<(usize, Vec<u64>)> },
    Generic { rows: Vec<(usize, Vec<u32>)> },
}

impl Echelon {
    pub fn new(field: PrimeField, n: usize) -> Self {
        let repr = if field.p() == 2 {
            EchelonRows::Gf2 { rows: Vec::new() }
        } else {
            EchelonRows::Generic { rows: Vec::new() }
        };
        Echelon { field, n, repr }
    }

    pub fn dim(&self) -> usize {
        match &self.repr {
            EchelonRows::Gf2 { rows } => rows.len(),
            EchelonRows::Generic { rows } => rows.len(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Reduces `v` against the stored rows; `None` if it lies in the span.
    fn reduce(&self, v: &[u32]) -> Option<EchelonRow> {
        assert_eq!(v.len(), self.n);
        match &self.repr {
            EchelonRows::Gf2 { rows } => {
                let mut w = vec![0u64; self.n.div_ceil(64)];
                for (j, &x) in v.iter().enumerate() {
                    if x & 1 == 1 {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                for (pc, r) in rows {
                    if bit(&w, *pc) {
                        for (a, &b) in w.iter_mut().zip(r) {
                            *a ^= b;
                        }
                    }
                }
                let lead = w
                    .iter()
                    .enumerate()
                    .find(|(_, &x)| x != 0)
                    .map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)?;
                Some(EchelonRow::Gf2(lead, w))
            }
            EchelonRows::Generic { rows } => {
                let f = self.field;
                let p = f.p() as u64;
                let mut w = v.to_vec();
                for (pc, r) in rows {
                    let c = w[*pc] as u64;
                    if c != 0 {
                        let neg = p - c;
                        for (a, &b) in w.iter_mut().zip(r) {
                            if b != 0 {
                                *a = ((*a as u64 + neg * b as u64) % p) as u32;
                            }
                        }
                    }
                }
                let lead = w.iter().position(|&x| x != 0)?;
                let inv = f.inv(w[lead]);
                w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                Some(EchelonRow::Generic(lead, w))
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).is_none()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let Some(row) = self.reduce(v) else {
            return false;
        };
        match (&mut self.repr, row) {
            (EchelonRows::Gf2 { rows }, EchelonRow::Gf2(lead, w)) => {
                // keep rows fully reduced at their pivots
                for (_, r) in rows.iter_mut() {
                    if bit(r, lead) {
                        for (a, &b) in r.iter_mut().zip(&w) {
                            *a ^= b;
                        }
                    }
                }
                rows.push((lead, w));
            }
            (EchelonRows::Generic { rows }, EchelonRow::Generic(lead, w)) => {
                let f = self.field;
                let p = f.p() as u64;
                for (_, r) in rows.iter_mut() {
                    let c = r[lead] as u64;
                    if c != 0 {
                        let neg = p - c;
                        for (a, &b) in r.iter_mut().zip(&w) {
                            if b != 0 {
                                *a = ((*a as u64 + neg * b as u64) % p) as u32;
                            }
                        }
                    }
                }
                rows.push((lead, w));
            }
            _ => unreachable!(),
        }
        true
    }

    /// Number of vectors of `vs` that would be independent modulo the current span.
    pub fn gain(&self, vs: &[Vec<u32>]) -> usize {
        let mut probe = self.clone();
        vs.iter().filter(|v| probe.insert(v)).count()
    }
}

enum EchelonRow {
    Gf2(usize, Vec<u64>),
    Generic(usize, Vec<u32>),
}

/// Coordinates with respect to a fixed basis (the columns of `basis`).
///
/// Picks `h` rows of the basis forming an invertible block and inverts it once,
/// so coordinates of a vector known to lie in the span cost one small product.
#[derive(Clone, Debug)]
pub struct SpanCoords {
    basis: Matrix,
    rows: Vec<usize>,
    inv: Matrix,
}

impl SpanCoords {
    /// Panics if the columns of `basis` are dependent.
    pub fn new(basis: Matrix) -> Self {
        let r = rref(&basis.transpose());
        assert_eq!(r.rank(), basis.cols(), "SpanCoords basis is not independent");
        let rows = r.pivots.clone();
        let inv = inverse(&basis.select_rows(&rows)).expect("pivot block invertible");
        SpanCoords { basis, rows, inv }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of the columns of `v`, assumed to lie in the span.
    pub fn coords_unchecked(&self, v: &Matrix) -> Matrix {
        self.inv.mul(&v.select_rows(&self.rows))
    }

    /// Coordinates, or `None` if some column leaves the span.
    pub fn coords(&self, v: &Matrix) -> Option<Matrix> {
        let c = self.coords_unchecked(v);
        if self.basis.mul(&c) == *v {
            Some(c)
        } else {
            None
        }
    }

    /// Coordinates of `op * basis` (operator restricted to an invariant subspace).
    pub fn restrict(&self, op: &Matrix) -> Matrix {
        let top = op.select_rows(&self.rows).mul(&self.basis);
        self.inv.mul(&top)
    }
}

/// A quotient `Z / B` of subspaces `B ⊆ Z ⊆ F_p^n` with a chosen complement.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Columns: a basis of `B` followed by complement vectors lifting a basis of `Z/B`.
    coords: SpanCoords,
    sub_dim: usize,
}

impl Subquotient {
    /// `z` spans `Z` (columns), `b` spans `B`; `B ⊆ Z` is the caller's contract.
    pub fn new(z: &Matrix, b: &Matrix) -> Self {
        let field = z.field();
        let n = z.rows();
        let bb = column_basis(b);
        let mut ech = Echelon::new(field, n);
        let mut cols: Vec<Vec<u32>> = Vec::new();
        for j in 0..bb.cols() {
            let c = bb.column(j);
            ech.insert(&c);
            cols.push(c);
        }
        let sub_dim = cols.len();
        for j in 0..z.cols() {
            let c = z.column(j);
            if ech.insert(&c) {
                cols.push(c);
            }
        }
        Subquotient {
            coords: SpanCoords::new(Matrix::from_columns(field, n, &cols)),
            sub_dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.dim() - self.sub_dim
    }

    /// Lifts of the quotient basis as columns.
    pub fn lifts(&self) -> Matrix {
        let idx: Vec<usize> = (self.sub_dim..self.coords.dim()).collect();
        self.coords.basis().select_columns(&idx)
    }

    /// Quotient coordinates of vectors in `Z` (columns).
    pub fn project(&self, v: &Matrix) -> Matrix {
        let c = self.coords.coords_unchecked(v);
        let idx: Vec<usize> = (self.sub_dim..self.coords.dim()).collect();
        c.select_rows(&idx)
    }

    /// Matrix of an operator preserving `B` and `Z`, induced on `Z/B`.
    pub fn induced(&self, op: &Matrix) -> Matrix {
        self.project(&op.mul(&self.lifts()))
    }
}

/// Quotient of `F_p^n` by the column span of `rel`, using the canonical complement:
/// the standard basis vectors at the non-pivot positions of the reduced relation rows.
#[derive(Clone, Debug)]
pub struct CanonicalQuotient {
    /// `q x n`
    pub projection: Matrix,
    /// `n x q`, standard basis vectors
    pub section: Matrix,
}

impl CanonicalQuotient {
    pub fn new(field: PrimeField, n: usize, rel: &Matrix) -> Self {
        assert_eq!(rel.rows(), n);
        let r = rref(&rel.transpose());
        let mut pivot_row = vec![None; n];
        for (i, &c) in r.pivots.iter().enumerate() {
            pivot_row[c] = Some(i);
        }
        let free: Vec<usize> = (0..n).filter(|&j| pivot_row[j].is_none()).collect();
        let q = free.len();
        let mut projection = Matrix::zeros(field, q, n);
        let mut section = Matrix::zeros(field, n, q);
        for (t, &j) in free.iter().enumerate() {
            section.set(j, t, 1);
        }
        for (j, pr) in pivot_row.iter().enumerate() {
            match pr {
                None => {
                    let t = free.binary_search(&j).expect("free");
                    projection.set(t, j, 1);
                }
                Some(i) => {
                    for (t, &fcol) in free.iter().enumerate() {
                        let v = r.rows.get(*i, fcol);
                        if v != 0 {
                            projection.set(t, j, field.neg(v));
                        }
                    }
                }
            }
        }
        CanonicalQuotient {
            projection,
            section,
        }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Brute-force image size of `m` acting on all vectors of `F_p^cols`.
    fn brute_image_size(m: &Matrix) -> usize {
        let p = m.field().p() as usize;
        let n = m.cols();
        let mut seen = std::collections::HashSet::new();
        for code in 0..p.pow(n as u32) {
            let mut v = vec![0u32; n];
            let mut c = code;
            for x in v.iter_mut() {
                *x = (c % p) as u32;
                c /= p;
            }
            seen.insert(m.mul_vec(&v));
        }
        seen.len()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(f(2), 2)), 2);
        assert_eq!(rank(&Matrix::zeros(f(3), 2, 1)), 0);
        let ones = Matrix::from_rows(f(2), &[[1, 1], [1, 1]]);
        // image has 2 elements, so rank 1
        assert_eq!(brute_image_size(&ones), 2);
        assert_eq!(rank(&ones), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(f(5), 3)).cols(), 0);
        assert_eq!(kernel(&Matrix::zeros(f(2), 1, 2)).cols(), 2);
        let k = kernel(&Matrix::from_rows(f(2), &[[1, 1], [1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 1]);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_rows(f(7), &[[3, 1], [4, 0]]);
        let x = solve(&Matrix::identity(f(7), 2), &b).unwrap().unwrap();
        assert_eq!(x, b);
        let none = solve(&Matrix::zeros(f(7), 2, 2), &Matrix::from_rows(f(7), &[[1], [0]]));
        assert_eq!(none.unwrap(), None);
        let a = Matrix::from_rows(f(2), &[[1, 1], [0, 1]]);
        let x = solve(&a, &Matrix::from_rows(f(2), &[[0], [1]])).unwrap().unwrap();
        assert_eq!(x.column(0), vec![1, 1]);
        assert!(solve(&a, &Matrix::zeros(f(2), 3, 1)).is_err());
    }

    #[test]
    fn echelon_and_coords() {
        let field = f(3);
        let mut e = Echelon::new(field, 3);
        assert!(e.insert(&[1, 2, 0]));
        assert!(!e.insert(&[2, 1, 0]));
        assert!(e.insert(&[0, 0, 1]));
        assert!(e.contains(&[1, 2, 2]));
        assert_eq!(e.dim(), 2);

        let basis = Matrix::from_rows(field, &[[1, 0], [2, 0], [0, 1]]);
        let sc = SpanCoords::new(basis);
        let v = Matrix::from_rows(field, &[[2], [1], [1]]);
        assert_eq!(sc.coords(&v).unwrap().column(0), vec![2, 1]);
        assert!(sc.coords(&Matrix::from_rows(field, &[[1], [0], [0]])).is_none());
    }

    #[test]
    fn canonical_quotient_kills_relations() {
        let field = f(5);
        let rel = Matrix::from_rows(field, &[[1], [2], [0]]);
        let q = CanonicalQuotient::new(field, 3, &rel);
        assert_eq!(q.dim(), 2);
        assert!(q.projection.mul(&rel).is_zero());
        assert!(q.projection.mul(&q.section).is_identity());
    }
}
