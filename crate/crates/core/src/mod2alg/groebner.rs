//! Buchberger's algorithm over GF(2) for homogeneous ideals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{Monomial, Polynomial};

/// Evidence that a basis is a reduced Gröbner basis of the relation ideal:
/// every S-polynomial and every input relation reduces to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerCertificate {
    pub s_pairs_checked: usize,
    pub relations_checked: usize,
}

/// A polynomial that failed to reduce to zero during certification.
#[derive(Debug, Clone)]
pub struct CertificateWitness {
    pub what: &'static str,
    pub remainder: Polynomial,
}

impl fmt::Display for CertificateWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} leaves remainder {}", self.what, self.remainder)
    }
}

fn lead(p: &Polynomial) -> &Monomial {
    p.leading().expect("basis elements are nonzero").0
}

/// Full reduction of `p` modulo `basis` (leading coefficients must be 1).
pub fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut rest = p.clone();
    let mut rem = p.ring().zero();
    while let Some((m, c)) = rest.leading() {
        let m = m.clone();
        let c = c.clone();
        match basis.iter().find(|g| lead(g).divides(&m)) {
            Some(g) => {
                let q = lead(g).quotient_of(&m).expect("divides");
                rest = &rest - &g.mul_term(&q, &c);
            }
            None => {
                let t = p.ring().term(c.clone(), m.clone());
                rest = &rest - &t;
                rem = &rem + &t;
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let one = BigInt::one();
    let l = lead(f).lcm(lead(g), f.ring());
    let a = lead(f).quotient_of(&l).expect("lcm");
    let b = lead(g).quotient_of(&l).expect("lcm");
    &f.mul_term(&a, &one) - &g.mul_term(&b, &one)
}

/// Reduced Gröbner basis of the ideal generated by `relations` (GF(2) coefficients).
pub fn reduced_basis(relations: &[Polynomial]) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = Vec::new();
    for r in relations {
        let r = reduce(r, &g);
        if !r.is_zero() {
            g.push(r);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        if lead(&g[i]).is_coprime(lead(&g[j])) {
            continue;
        }
        let s = reduce(&s_polynomial(&g[i], &g[j]), &g);
        if !s.is_zero() {
            let k = g.len();
            g.push(s);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, q)| {
            j != i && lead(q).divides(lead(p)) && (lead(q) != lead(p) || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    // inter-reduce tails
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (lm, lc) = minimal[i].leading().expect("nonzero");
        let head = minimal[i].ring().term(lc.clone(), lm.clone());
        let tail = reduce(&(&minimal[i] - &head), &others);
        out.push(&head + &tail);
    }
    out.sort_by(|a, b| lead(a).cmp(lead(b)));
    out
}

/// Check every S-pair and every relation reduces to zero modulo `gb`.
pub fn certify(gb: &[Polynomial], relations: &[Polynomial]) -> Result<GroebnerCertificate, CertificateWitness> {
    let mut s_pairs = 0;
    for j in 0..gb.len() {
        for i in 0..j {
            s_pairs += 1;
            let r = reduce(&s_polynomial(&gb[i], &gb[j]), gb);
            if !r.is_zero() {
                return Err(CertificateWitness {
                    what: "S-polynomial",
                    remainder: r,
                });
            }
        }
    }
    for rel in relations {
        let r = reduce(rel, gb);
        if !r.is_zero() {
            return Err(CertificateWitness {
                what: "relation",
                remainder: r,
            });
        }
    }
    Ok(GroebnerCertificate {
        s_pairs_checked: s_pairs,
        relations_checked: relations.len(),
    })
}
