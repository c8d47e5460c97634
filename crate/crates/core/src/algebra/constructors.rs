//! Standard algebras: matrix rings, triangular rings, group rings and small
//! commutative local rings. Every basis ordering is documented on the builder.

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;

fn empty_table(n: usize) -> Vec<u32> {
    vec![0; n * n * n]
}

/// `M_n(F_p)` on the matrix-unit basis `E_ab` at index `a*n + b`.
pub fn matrix_ring(field: PrimeField, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Invalid("matrix ring of size 0".into()));
    }
    let d = n * n;
    let mut table = empty_table(d);
    for a in 0..n {
        for b in 0..n {
            for d2 in 0..n {
                // E_ab E_bd = E_ad
                let i = a * n + b;
                let j = b * n + d2;
                let k = a * n + d2;
                table[(i * d + j) * d + k] = 1;
            }
        }
    }
    let mut one = vec![0; d];
    for a in 0..n {
        one[a * n + a] = 1;
    }
    let name = if n == 1 {
        format!("F{}", field.p())
    } else {
        format!("M{}(F{})", n, field.p())
    };
    Algebra::new(field, d, table, one, name)
}

/// The triangular ring `[[Q, F], [0, Q]]` with `Q = F_p` and `F = F_p^f_dim`.
///
/// Basis: `e1` (index 0), the `F` coordinates (indices `1..=f_dim`), `e2` (last).
pub fn triangular_ring(field: PrimeField, f_dim: usize) -> Result<Algebra> {
    let d = f_dim + 2;
    let e1 = 0;
    let e2 = d - 1;
    let mut table = empty_table(d);
    let mut set = |i: usize, j: usize, k: usize| table[(i * d + j) * d + k] = 1;
    set(e1, e1, e1);
    set(e2, e2, e2);
    for t in 1..=f_dim {
        set(e1, t, t);
        set(t, e2, t);
    }
    let mut one = vec![0; d];
    one[e1] = 1;
    one[e2] = 1;
    Algebra::new(field, d, table, one, format!("T{}(F{})", f_dim, field.p()))
}

/// Multiplication table of the cyclic group of order `n`: `g^a g^b = g^(a+b)`.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// The group ring `F_p[G]` on the group-element basis. `table[a][b]` is the index of `ab`.
pub fn group_ring(field: PrimeField, table: &[Vec<usize>]) -> Result<Algebra> {
    let n = table.len();
    if n == 0 {
        return Err(Error::InvalidGroup("empty group".into()));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::InvalidGroup("table is not an n x n table of indices".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidGroup(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
            return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
        }
    }
    let mut t = empty_table(n);
    for a in 0..n {
        for b in 0..n {
            t[(a * n + b) * n + table[a][b]] = 1;
        }
    }
    let mut one = vec![0; n];
    one[identity] = 1;
    Algebra::new(field, n, t, one, format!("F{}[G{}]", field.p(), n))
}

/// `F_p[x]/(x^k)` on the basis `1, x, ..., x^(k-1)`.
pub fn truncated_polynomial_ring(field: PrimeField, k: usize) -> Result<Algebra> {
    if k == 0 {
        return Err(Error::Invalid("F_p[x]/(x^0) is the zero ring".into()));
    }
    let mut table = empty_table(k);
    for i in 0..k {
        for j in 0..k {
            if i + j < k {
                table[(i * k + j) * k + i + j] = 1;
            }
        }
    }
    let mut one = vec![0; k];
    one[0] = 1;
    Algebra::new(field, k, table, one, format!("F{}[x]/(x{})", field.p(), k))
}

/// `F_p[x_1..x_d] / (x_1..x_d)^2` on the basis `1, x_1, ..., x_d`.
///
/// For `d = 2` this is `F_p[x,y]/(x², xy, y²)`, a local ring that is not Gorenstein.
pub fn square_zero_local_ring(field: PrimeField, d: usize) -> Result<Algebra> {
    let n = d + 1;
    // 1 * x_i = x_i * 1 = x_i, products of variables vanish
    let mut t = empty_table(n);
    for i in 0..n {
        t[i * n + i] = 1;
        t[(i * n) * n + i] = 1;
    }
    let mut one = vec![0; n];
    one[0] = 1;
    let name = match d {
        1 => format!("F{}[x]/(x2)", field.p()),
        2 => format!("F{}[x,y]/(x2,xy,y2)", field.p()),
        _ => format!("F{}[x1..x{}]/m2", field.p(), d),
    };
    Algebra::new(field, n, t, one, name)
}

/// `A ⊗_{F_p} B` on the basis `a_i ⊗ b_j` at index `i*dim B + j`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().p(), b.field().p()));
    }
    let f = a.field();
    let (n, m) = (a.dim(), b.dim());
    let d = n * m;
    let mut table = empty_table(d);
    for i in 0..n {
        for k in 0..n {
            for s in 0..n {
                let x = a.constant(i, k, s);
                if x == 0 {
                    continue;
                }
                for j in 0..m {
                    for l in 0..m {
                        for t in 0..m {
                            let y = b.constant(j, l, t);
                            if y != 0 {
                                let idx = ((i * m + j) * d + k * m + l) * d + s * m + t;
                                table[idx] = f.add(table[idx], f.mul(x, y));
                            }
                        }
                    }
                }
            }
        }
    }
    let one = (0..d).map(|ij| f.mul(a.one()[ij / m], b.one()[ij % m])).collect();
    Algebra::new(f, d, table, one, format!("{}⊗{}", a.name(), b.name()))
}

/// `A × B` on the basis of `A` followed by the basis of `B`.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().p(), b.field().p()));
    }
    let (n, m) = (a.dim(), b.dim());
    let d = n + m;
    let mut table = empty_table(d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                table[(i * d + j) * d + k] = a.constant(i, j, k);
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                table[((n + i) * d + n + j) * d + n + k] = b.constant(i, j, k);
            }
        }
    }
    let one = a.one().iter().chain(b.one()).copied().collect();
    Algebra::new(a.field(), d, table, one, format!("{}x{}", a.name(), b.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn constructors_validate() {
        for p in [2, 3, 5] {
            let field = f(p);
            for n in 1..=3 {
                assert_eq!(matrix_ring(field, n).unwrap().validate(), Ok(()));
                assert_eq!(truncated_polynomial_ring(field, n).unwrap().validate(), Ok(()));
                assert_eq!(square_zero_local_ring(field, n).unwrap().validate(), Ok(()));
            }
            for fd in 0..=3 {
                assert_eq!(triangular_ring(field, fd).unwrap().validate(), Ok(()));
            }
            for n in 1..=4 {
                assert_eq!(group_ring(field, &cyclic_group_table(n)).unwrap().validate(), Ok(()));
            }
        }
    }

    #[test]
    fn matrix_ring_examples() {
        let f2 = matrix_ring(f(2), 1).unwrap();
        assert_eq!(f2.dim(), 1);
        let m2 = matrix_ring(f(2), 2).unwrap();
        assert_eq!(m2.dim(), 4);
        assert!(!m2.is_commutative());
        let m3 = matrix_ring(f(3), 2).unwrap();
        // E11 * E12 = E12
        assert_eq!(m3.mul(&m3.basis_vector(0), &m3.basis_vector(1)), m3.basis_vector(1));
    }

    #[test]
    fn triangular_examples() {
        let t0 = triangular_ring(f(2), 0).unwrap();
        assert_eq!(t0.dim(), 2);
        assert!(t0.is_commutative());
        let t1 = triangular_ring(f(2), 1).unwrap();
        assert_eq!(t1.dim(), 3);
        assert!(!t1.is_commutative());
        assert_eq!(triangular_ring(f(3), 2).unwrap().dim(), 4);
    }

    #[test]
    fn group_ring_examples() {
        let trivial = group_ring(f(5), &cyclic_group_table(1)).unwrap();
        assert_eq!(trivial.dim(), 1);
        let c2 = group_ring(f(2), &cyclic_group_table(2)).unwrap();
        assert!(c2.is_commutative());
        // (g - 1)^2 = g^2 - 2g + 1 = 0 in characteristic 2
        let g_minus_1 = vec![1, 1];
        assert_eq!(c2.mul(&g_minus_1, &g_minus_1), vec![0, 0]);
        let bad = vec![vec![0, 0], vec![1, 1]];
        assert!(group_ring(f(2), &bad).is_err());
        let s3 = s3_table();
        let fs3 = group_ring(f(3), &s3).unwrap();
        assert!(!fs3.is_commutative());
        assert_eq!(fs3.validate(), Ok(()));
    }

    fn s3_table() -> Vec<Vec<usize>> {
        // permutations of {0,1,2} in lexicographic order
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |q: [usize; 3]| perms.iter().position(|&r| r == q).unwrap();
        perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect()
    }
}
