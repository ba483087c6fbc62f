use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{abs_cmp, IntMatrix};

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    u: IntMatrix,
    d: IntMatrix,
    v: IntMatrix,
    factors: Vec<BigInt>,
    rank: usize,
}

impl SnfDecomposition {
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    /// Diagonal entries `d_i`, `min(rows, cols)` of them, zeros last.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.rank
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
    }

    /// Smallest nonzero |entry| in the trailing block from `(t, t)`, ties to lowest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if abs_cmp(x, &self.a[b]).is_ge() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Clear row and column `t` except the pivot; returns false if a remainder appeared.
    fn clear_cross(&mut self, t: usize) -> bool {
        let p = self.a[(t, t)].clone();
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&p);
            self.add_row(i, t, &-q);
            if !self.a[(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&p);
            self.add_col(j, t, &-q);
            if !self.a[(t, j)].is_zero() {
                clean = false;
            }
        }
        clean
    }
}

/// Smith normal form with transforms; the result is checked by re-multiplying.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            if !w.clear_cross(t) {
                // a smaller remainder exists in row/column t; re-pivot
                let (pi, pj) = w.pivot_in_cross(t);
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = w.a[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !(&w.a[(i, j)] % &p).is_zero())
            });
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.a.negate_row(t);
            w.u.negate_row(t);
        }
        t += 1;
    }
    let rank = t;
    let factors: Vec<BigInt> = (0..m.min(n)).map(|i| w.a[(i, i)].clone()).collect();
    let out = SnfDecomposition {
        u: w.u,
        d: w.a,
        v: w.v,
        factors,
        rank,
    };
    certify(a, &out);
    out
}

impl Work {
    /// Smallest nonzero entry in row `t` or column `t` (including the pivot).
    fn pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let consider = |best: &mut (usize, usize), pos: (usize, usize)| {
            let x = &self.a[pos];
            if !x.is_zero() && (self.a[*best].is_zero() || abs_cmp(x, &self.a[*best]).is_lt()) {
                *best = pos;
            }
        };
        for i in t..self.a.rows() {
            consider(&mut best, (i, t));
        }
        for j in t..self.a.cols() {
            consider(&mut best, (t, j));
        }
        best
    }
}

fn certify(a: &IntMatrix, s: &SnfDecomposition) {
    assert_eq!(s.u.mul(a).mul(&s.v), s.d, "SNF certificate U·A·V = D failed");
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j {
                assert!(s.d[(i, j)].is_zero(), "SNF result not diagonal");
            }
        }
    }
    for w in s.factors.windows(2) {
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        };
        assert!(ok, "SNF divisibility chain broken");
    }
    assert!(s.factors.iter().all(|d| !d.is_negative()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        let snf = smith_normal_form(&IntMatrix::from_rows(rows));
        snf.invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(factors(&[vec![8, 3]]), vec![1]);
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
    }

    #[test]
    fn empty_shapes() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(s.rank(), 0);
        assert_eq!(s.v().rows(), 3);
        let s = smith_normal_form(&IntMatrix::zeros(2, 0));
        assert_eq!(s.u().rows(), 2);
    }
}
