use super::{Monomial, Ring};

/// All monomials of one weighted degree, largest first in lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        // monomials are strictly decreasing in lex order
        self.monomials
            .binary_search_by(|probe| m.exps.cmp(&probe.exps))
            .ok()
    }
}

/// Enumerate every monomial of weighted degree `degree` for the given weights.
///
/// Weights must be positive.
pub fn monomial_basis(degree: u32, weights: &[u32]) -> GradedBasis {
    assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
    let mut out = Vec::new();
    let mut exps = vec![0u32; weights.len()];
    fill(degree, weights, 0, &mut exps, &mut out);
    GradedBasis {
        degree,
        monomials: out
            .into_iter()
            .map(|exps| Monomial { exps, degree })
            .collect(),
    }
}

fn fill(rest: u32, weights: &[u32], i: usize, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == weights.len() {
        if rest == 0 {
            out.push(exps.clone());
        }
        return;
    }
    let w = weights[i];
    for e in (0..=rest / w).rev() {
        exps[i] = e;
        fill(rest - e * w, weights, i + 1, exps, out);
    }
    exps[i] = 0;
}

impl Ring {
    /// Monomial basis of the weighted-degree-`d` piece of this ring.
    pub fn graded_basis(&self, d: u32) -> GradedBasis {
        monomial_basis(d, self.vars().weights())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count: number of ways to write `d` as Σ e_i w_i.
    fn count(d: u32, weights: &[u32]) -> usize {
        match weights.split_first() {
            None => usize::from(d == 0),
            Some((&w, rest)) => (0..=d / w).map(|e| count(d - e * w, rest)).sum(),
        }
    }

    #[test]
    fn partitions_of_four() {
        let b = monomial_basis(4, &[1, 2, 3, 4]);
        assert_eq!(b.len(), 5);
        let exps: Vec<&[u32]> = b.monomials.iter().map(|m| m.exps()).collect();
        assert_eq!(
            exps,
            vec![
                &[4, 0, 0, 0][..],
                &[2, 1, 0, 0],
                &[1, 0, 1, 0],
                &[0, 2, 0, 0],
                &[0, 0, 0, 1]
            ]
        );
    }

    #[test]
    fn trivial_degrees() {
        let b = monomial_basis(0, &[2, 2, 2]);
        assert_eq!(b.len(), 1);
        assert!(b.monomials[0].is_one());
        assert!(monomial_basis(1, &[2, 2, 2]).is_empty());
    }

    #[test]
    fn positions_round_trip() {
        let b = monomial_basis(9, &[2, 3, 5, 8, 9, 12]);
        for (i, m) in b.monomials.iter().enumerate() {
            assert_eq!(b.position(m), Some(i));
        }
    }

    proptest::proptest! {
        #[test]
        fn sizes_match_recursive_count(d in 0u32..30, ws in proptest::collection::vec(1u32..6, 1..5)) {
            let b = monomial_basis(d, &ws);
            proptest::prop_assert_eq!(b.len(), count(d, &ws));
            let mut seen = std::collections::HashSet::new();
            for m in &b.monomials {
                let deg: u32 = m.exps().iter().zip(&ws).map(|(e, w)| e * w).sum();
                proptest::prop_assert_eq!(deg, d);
                proptest::prop_assert!(seen.insert(m.exps().to_vec()));
            }
        }
    }
}
