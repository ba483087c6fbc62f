/// Dense matrix over ℤ/p for a prime `p` small enough that `p²` fits in `u64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModpMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        assert!((2..(1 << 32)).contains(&p), "modulus out of range");
        ModpMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<u64>], p: u64) -> Self {
        let mut m = Self::zeros(rows, columns.len(), p);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
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

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.p;
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat; p is prime
        pow_mod(a, self.p - 2, self.p)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn echelon(&self) -> (ModpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.inv(m.get(r, c));
            for j in c..m.cols {
                let x = m.get(r, j) * inv % p;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let x = (m.get(i, j) + p - f * m.get(r, j) % p) % p;
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the null space `{x : M·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let (e, pivots) = self.echelon();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u64; self.cols];
                x[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = (p - e.get(r, f)) % p;
                }
                x
            })
            .collect()
    }

    /// Every solution of `M·x = b`, as a particular solution plus a kernel basis.
    pub fn solve(&self, b: &[u64]) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = ModpMatrix::zeros(self.rows, self.cols + 1, self.p);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let (e, pivots) = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = e.get(r, self.cols);
        }
        Some((x, self.kernel()))
    }

    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0u64, |acc, j| (acc + self.get(i, j) * x[j]) % self.p)
            })
            .collect()
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = ModpMatrix::from_columns(2, &[vec![1, 1], vec![1, 1], vec![0, 1]], 2);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k, vec![vec![1, 1, 0]]);
        assert_eq!(m.mul_vec(&k[0]), vec![0, 0]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = ModpMatrix::from_columns(2, &[vec![1, 0], vec![1, 0]], 3);
        let (x, ker) = m.solve(&[2, 0]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![2, 0]);
        assert_eq!(ker.len(), 1);
        assert!(m.solve(&[0, 1]).is_none());
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }
}
