//! GF(2) linear algebra on tuples of polynomials, coordinatised by monomial.

use std::collections::HashMap;

use num_traits::Zero;

use crate::intlinalg::ModpMatrix;
use crate::poly::{Monomial, Polynomial};

use super::Mod2Error;

/// Cap on enumerated affine solution sets (2^cap elements).
pub const MAX_KERNEL_DIM: usize = 16;

struct RowIndex(HashMap<(usize, Monomial), usize>);

impl RowIndex {
    fn build<'a>(tuples: impl Iterator<Item = &'a [Polynomial]>) -> Self {
        let mut map = HashMap::new();
        for t in tuples {
            for (k, p) in t.iter().enumerate() {
                for m in p.monomials() {
                    let n = map.len();
                    map.entry((k, m.clone())).or_insert(n);
                }
            }
        }
        RowIndex(map)
    }

    fn vector(&self, t: &[Polynomial]) -> Vec<u64> {
        let mut v = vec![0u64; self.0.len()];
        for (k, p) in t.iter().enumerate() {
            for (m, c) in p.terms() {
                if !c.is_zero() {
                    v[self.0[&(k, m.clone())]] ^= 1;
                }
            }
        }
        v
    }
}

fn matrix(columns: &[Vec<Polynomial>], extra: &[&[Polynomial]]) -> (RowIndex, ModpMatrix) {
    let rows = RowIndex::build(columns.iter().map(Vec::as_slice).chain(extra.iter().copied()));
    let cols: Vec<Vec<u64>> = columns.iter().map(|c| rows.vector(c)).collect();
    let m = ModpMatrix::from_columns(rows.0.len(), &cols, 2);
    (rows, m)
}

/// Rank over GF(2) of a family of polynomials.
pub fn rank(polys: &[Polynomial]) -> usize {
    let cols: Vec<Vec<Polynomial>> = polys.iter().map(|p| vec![p.clone()]).collect();
    matrix(&cols, &[]).1.rank()
}

/// All coefficient vectors `x` with `Σ x_j columns[j] = rhs` (componentwise in each tuple slot).
pub fn solve_all(columns: &[Vec<Polynomial>], rhs: &[Polynomial]) -> Result<Vec<Vec<u64>>, Mod2Error> {
    let (rows, m) = matrix(columns, &[rhs]);
    let b = rows.vector(rhs);
    if columns.is_empty() {
        return Ok(if b.iter().all(|&x| x == 0) { vec![Vec::new()] } else { Vec::new() });
    }
    let Some((particular, kernel)) = m.solve(&b) else {
        return Ok(Vec::new());
    };
    if kernel.len() > MAX_KERNEL_DIM {
        return Err(Mod2Error::TooManyCandidates(kernel.len()));
    }
    let mut out = Vec::with_capacity(1 << kernel.len());
    for mask in 0u64..(1 << kernel.len()) {
        let mut x = particular.clone();
        for (k, v) in kernel.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for (a, b) in x.iter_mut().zip(v) {
                    *a ^= b;
                }
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// `Σ x_j · basis[j]`.
pub fn combine(basis: &[Polynomial], x: &[u64], zero: Polynomial) -> Polynomial {
    basis
        .iter()
        .zip(x)
        .filter(|(_, &c)| c == 1)
        .fold(zero, |acc, (p, _)| &acc + p)
}
