//! Dense exact linear algebra over ℤ and ℤ/p.

mod modp;
mod snf;

pub use modp::ModpMatrix;
pub(crate) use modp::inv_mod;
pub use snf::{smith_normal_form, SnfDecomposition};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimensions");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &x[j]).sum())
            .collect())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    /// Reduce entries mod `p` into a dense ℤ/p matrix.
    pub fn to_modp(&self, p: u64) -> ModpMatrix {
        let pb = BigInt::from(p);
        let mut m = ModpMatrix::zeros(self.rows, self.cols, p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let r = self[(i, j)].mod_floor(&pb);
                m.set(i, j, u64::try_from(r).expect("residue fits in u64"));
            }
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Basis of the full kernel lattice `{x : A·x = 0}`.
///
/// The vectors are columns of a unimodular matrix, so the lattice they span
/// is saturated.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank()..a.cols()).map(|j| snf.v().column(j)).collect()
}

/// Invariant factors of `ℤ^rows / column span`, one per row, `0` for free summands.
pub fn cokernel_invariants(a: &IntMatrix) -> Vec<BigInt> {
    let snf = smith_normal_form(a);
    let mut out: Vec<BigInt> = snf.invariant_factors().to_vec();
    out.resize(a.rows(), BigInt::zero());
    out
}

/// Rank of `a` over the field with `p` elements.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> Result<usize, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    Ok(a.to_modp(p).rank())
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Order of an element in a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(k) => write!(f, "{k}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Least `k ≥ 1` with `k·x` in the column span of `a`.
pub fn element_order_in_cokernel(a: &IntMatrix, x: &[BigInt]) -> Result<ElementOrder, LinalgError> {
    if x.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.rows(),
            got: x.len(),
        });
    }
    let snf = smith_normal_form(a);
    let y = snf.u().mul_vec(x)?;
    let mut order = BigInt::one();
    for (i, yi) in y.iter().enumerate() {
        let d = snf.invariant_factors().get(i).cloned().unwrap_or_default();
        if d.is_zero() {
            if !yi.is_zero() {
                return Ok(ElementOrder::Infinite);
            }
            continue;
        }
        let g = d.gcd(yi);
        order = order.lcm(&(&d / g));
    }
    Ok(ElementOrder::Finite(order))
}

/// Coordinates of `x` in the lattice spanned by the linearly independent
/// columns of `basis`, or `None` when `x` is not in that lattice.
pub fn lattice_coordinates(basis: &IntMatrix, x: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if x.len() != basis.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.rows(),
            got: x.len(),
        });
    }
    let snf = smith_normal_form(basis);
    let r = snf.rank();
    assert_eq!(r, basis.cols(), "lattice basis columns must be independent");
    // basis = U⁻¹ D V⁻¹, so basis·c = x  ⇔  D (V⁻¹ c) = U x
    let ux = snf.u().mul_vec(x)?;
    if ux[r..].iter().any(|t| !t.is_zero()) {
        return Ok(None);
    }
    let mut z = Vec::with_capacity(r);
    for (i, t) in ux[..r].iter().enumerate() {
        let d = &snf.invariant_factors()[i];
        let (q, rem) = t.div_rem(d);
        if !rem.is_zero() {
            return Ok(None);
        }
        z.push(q);
    }
    Ok(Some(snf.v().mul_vec(&z)?))
}

/// Whether two sets of integer vectors span the same lattice.
pub fn same_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>], dim: usize) -> bool {
    let all_in = |from: &[Vec<BigInt>], to: &[Vec<BigInt>]| {
        let span = IntMatrix::from_columns(dim, to);
        let hnf = lattice_basis(&span);
        from.iter().all(|x| {
            lattice_coordinates(&hnf, x)
                .expect("dimensions agree")
                .is_some()
        })
    };
    all_in(a, b) && all_in(b, a)
}

/// A basis (as matrix columns) for the lattice spanned by the columns of `a`.
pub fn lattice_basis(a: &IntMatrix) -> IntMatrix {
    // columns of A·V beyond the rank are zero; the first `rank` columns form a basis
    let snf = smith_normal_form(a);
    let av = a.mul(snf.v());
    let cols: Vec<Vec<BigInt>> = (0..snf.rank()).map(|j| av.column(j)).collect();
    IntMatrix::from_columns(a.rows(), &cols)
}

pub(crate) fn abs_cmp(a: &BigInt, b: &BigInt) -> std::cmp::Ordering {
    a.abs().cmp(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        let k = integer_kernel(&m(&[vec![8, 3]]));
        assert_eq!(k.len(), 1);
        assert!(k[0] == bi(&[3, -8]) || k[0] == bi(&[-3, 8]));
        assert!(integer_kernel(&IntMatrix::identity(3)).is_empty());
        assert_eq!(integer_kernel(&m(&[vec![0, 0]])).len(), 2);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel_invariants(&m(&[vec![4]])), bi(&[4]));
        assert_eq!(cokernel_invariants(&IntMatrix::identity(3)), bi(&[1, 1, 1]));
        assert_eq!(cokernel_invariants(&m(&[vec![2, 0], vec![0, 0]])), bi(&[2, 0]));
    }

    #[test]
    fn rank_examples() {
        let a = m(&[vec![8, 3]]);
        assert_eq!(rank_mod_p(&a, 2), Ok(1));
        assert_eq!(rank_mod_p(&a, 3), Ok(1));
        assert_eq!(rank_mod_p(&IntMatrix::zeros(3, 4), 5), Ok(0));
        assert_eq!(rank_mod_p(&a, 1), Err(LinalgError::NotPrime(1)));
        assert_eq!(rank_mod_p(&a, 4), Err(LinalgError::NotPrime(4)));
    }

    #[test]
    fn order_examples() {
        let four = m(&[vec![4]]);
        assert_eq!(
            element_order_in_cokernel(&four, &bi(&[1])),
            Ok(ElementOrder::Finite(4.into()))
        );
        assert_eq!(
            element_order_in_cokernel(&four, &bi(&[8])),
            Ok(ElementOrder::Finite(1.into()))
        );
        assert_eq!(
            element_order_in_cokernel(&IntMatrix::zeros(1, 1), &bi(&[1])),
            Ok(ElementOrder::Infinite)
        );
        assert_eq!(
            element_order_in_cokernel(&four, &bi(&[1, 2])),
            Err(LinalgError::DimensionMismatch { expected: 1, got: 2 })
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[vec![2, 1], vec![7, 4]]).determinant(), BigInt::from(1));
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).determinant(),
            BigInt::from(-3)
        );
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).determinant(), BigInt::from(0));
    }

    #[test]
    fn lattice_membership() {
        let basis = IntMatrix::from_columns(2, &[bi(&[2, 0]), bi(&[0, 3])]);
        assert_eq!(
            lattice_coordinates(&basis, &bi(&[4, 9])).unwrap(),
            Some(bi(&[2, 3]))
        );
        assert_eq!(lattice_coordinates(&basis, &bi(&[1, 0])).unwrap(), None);
        assert!(same_lattice(
            &[bi(&[1, 1]), bi(&[0, 1])],
            &[bi(&[1, 0]), bi(&[0, 1]), bi(&[5, 5])],
            2
        ));
        assert!(!same_lattice(&[bi(&[2, 0]), bi(&[0, 1])], &[bi(&[1, 0]), bi(&[0, 1])], 2));
    }
}
