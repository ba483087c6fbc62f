use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::poly::{CoeffRing, Polynomial, Ring};
use crate::report::VerificationReport;

use super::linear::{self, combine};
use super::{AlgebraLibrary, Mod2Error, PresentedAlgebra, SquareRule, SteenrodAction};

pub const MAX_K: u32 = 3;

/// `ℤ[p1, W3]/(2·W3, W3^n)`: pure `p1`-powers keep integer coefficients, anything
/// divisible by `W3` is 2-torsion, and `W3^n` is truncated away.
#[derive(Debug, Clone)]
pub struct TorsionQuotient {
    ring: Ring,
    truncation: u32,
}

impl TorsionQuotient {
    pub fn new(truncation: u32) -> Self {
        TorsionQuotient {
            ring: Ring::with_vars(CoeffRing::Integer, [("p1", 4), ("W3", 3)]),
            truncation,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let mut out = self.ring.zero();
        for (m, c) in p.terms() {
            let w = m.exp(1);
            if w >= self.truncation {
                continue;
            }
            let c: BigInt = if w > 0 { c.mod_floor(&BigInt::from(2)) } else { c.clone() };
            if !c.is_zero() {
                out = &out + &self.ring.term(c, m.clone());
            }
        }
        out
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, Mod2Error> {
        Ok(self.normal_form(&self.ring.parse(text)?))
    }
}

/// `w2^(2^(k+1)−1)·w3`, the claimed image of `x_{2,k}` modulo `w3^3`.
pub fn claimed_image(alg: &PresentedAlgebra, k: u32) -> Result<Polynomial, Mod2Error> {
    alg.parse(&format!("wp2^{}*wp3", (1u32 << (k + 1)) - 1))
}

fn elements(alg: &PresentedAlgebra, d: u32) -> Vec<Polynomial> {
    alg.basis(d).iter().map(|m| alg.monomial_element(m)).collect()
}

/// Images of `x_{2,k}` and `y_{2,k}` in the cohomology of `BPU(2)`.
pub fn verify_bpu2_images(k_max: u32) -> Result<VerificationReport, Mod2Error> {
    if k_max > MAX_K {
        return Err(Mod2Error::OutOfRange(format!("k_max = {k_max} exceeds {MAX_K}")));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("bpu2");
    let lib = AlgebraLibrary::builtin();
    let free = lib.get("bso3")?;
    let trunc = std::sync::Arc::new(free.quotient("bso3_mod_w3cubed", &["wp3^3"])?);
    let action = SteenrodAction::new(trunc.clone(), SquareRule::StiefelWhitney);

    // (a) Sq^1 x_{2,0} = x1^2 and Sq^1 x_{2,k} = x_{2,k−1}^2 pin down each image
    let mut previous = trunc.parse("wp3")?;
    for k in 0..=k_max {
        let claimed = claimed_image(&trunc, k)?;
        let d = (1u32 << (k + 2)) + 1;
        let target = trunc.normal_form(&previous.pow(2));
        let basis = elements(&trunc, d);
        let cols = basis
            .iter()
            .map(|b| Ok(vec![action.sq(1, b)?]))
            .collect::<Result<Vec<_>, Mod2Error>>()?;
        let sols = linear::solve_all(&cols, std::slice::from_ref(&target))?;
        let xs: Vec<Polynomial> = sols.iter().map(|x| combine(&basis, x, trunc.ring().zero())).collect();
        let nonzero = basis.len();
        report.check(
            format!("chi_x2{k}_unique"),
            xs.len() == 1 && xs[0] == claimed,
            format!(
                "degree {d} mod wp3^3 has {nonzero} basis element(s); the only s with Sq^1(s) = {target} is {}",
                xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ),
            claimed.to_string(),
        );
        previous = claimed;
    }

    // (b) wp3^i · x^j ≠ 0 for i, j ≤ 4; the product is computed modulo wp3^(i+j+2),
    // which every representative claimed + wp3^3·r agrees on
    for k in 0..=k_max {
        let rep = free.parse(&format!("wp2^{}*wp3", (1u32 << (k + 1)) - 1))?;
        let mut zero_at = Vec::new();
        let mut stable = true;
        for i in 0..=4u32 {
            for j in 0..=4u32 {
                let q = free.quotient("trunc", &[format!("wp3^{}", i + j + 2)])?;
                let base = q.normal_form(&(&free.parse(&format!("wp3^{i}"))? * &rep.pow(j)));
                if base.is_zero() {
                    zero_at.push(format!("({i},{j})"));
                }
                let dr = rep.homogeneous_degree().expect("homogeneous");
                if dr >= 9 {
                    for r in elements(&free, dr - 9) {
                        let other = &rep + &(&free.parse("wp3^3")? * &r);
                        let alt = q.normal_form(&(&free.parse(&format!("wp3^{i}"))? * &other.pow(j)));
                        stable &= alt == base;
                    }
                }
            }
        }
        report.check(
            format!("nonvanishing_x2{k}"),
            zero_at.is_empty() && stable,
            format!(
                "wp3^i·(wp2^{}·wp3)^j is nonzero mod wp3^(i+j+2) for 0 ≤ i, j ≤ 4, independent of the wp3^3 ambiguity",
                (1u32 << (k + 1)) - 1
            ),
            zero_at.join(" "),
        );
    }

    // (c) integral classes p1^(2^k−1)·W3^2 in ℤ[p1,W3]/(2W3)
    for k in 0..=k_max + 1 {
        let e = (1u32 << k) - 1;
        let mut zero_at = Vec::new();
        for i in 0..=4u32 {
            for j in 0..=4u32 {
                let q = TorsionQuotient::new(i + 2 * j + 4);
                let p = q.normal_form(&(&q.ring().parse(&format!("W3^{i}"))? * &q.ring().parse(&format!("p1^{e}*W3^2"))?.pow(j)));
                if p.is_zero() {
                    zero_at.push(format!("({i},{j})"));
                }
            }
        }
        // unique torsion element mod W3^6 lifting ρ = x_{2,k−1}^2
        let q = TorsionQuotient::new(6);
        let d = 4 * e + 6;
        let target = free
            .quotient("mod_w3_6", &["wp3^6"])?
            .parse(&format!("wp2^{}*wp3^2", 2 * e))?;
        let mut torsion = Vec::new();
        for b in 1..6u32 {
            if d >= 3 * b && (d - 3 * b).is_multiple_of(4) {
                torsion.push(((d - 3 * b) / 4, b));
            }
        }
        let images: Vec<Vec<Polynomial>> = torsion
            .iter()
            .map(|&(a, b)| Ok(vec![free.parse(&format!("wp2^{}*wp3^{b}", 2 * a))?]))
            .collect::<Result<_, Mod2Error>>()?;
        let sols = linear::solve_all(&images, &[target])?;
        let lifts: Vec<String> = sols
            .iter()
            .map(|x| {
                let terms: Vec<String> = torsion
                    .iter()
                    .zip(x)
                    .filter(|(_, &c)| c == 1)
                    .map(|((a, b), _)| q.ring().parse(&format!("p1^{a}*W3^{b}")).expect("valid").to_string())
                    .collect();
                terms.join(" + ")
            })
            .collect();
        let want = q.parse(&format!("p1^{e}*W3^2"))?.to_string();
        report.check(
            format!("integral_y2{k}"),
            zero_at.is_empty() && lifts == [want.clone()],
            format!(
                "W3^i·(p1^{e}·W3^2)^j ≠ 0 mod W3^(i+2j+4) for 0 ≤ i, j ≤ 4; unique torsion lift of wp2^{}·wp3^2 mod W3^6 is {}",
                2 * e,
                lifts.join(" | ")
            ),
            zero_at.join(" "),
        );
    }

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_quotient_reduces() {
        let q = TorsionQuotient::new(6);
        assert_eq!(q.parse("2*W3 + 3*p1").unwrap().to_string(), "3*p1");
        assert!(q.parse("W3^6").unwrap().is_zero());
        assert_eq!(q.parse("3*p1*W3").unwrap().to_string(), "p1*W3");
    }

    #[test]
    fn low_k_images() {
        let lib = AlgebraLibrary::builtin();
        let t = lib.get("bso3").unwrap().quotient("t", &["wp3^3"]).unwrap();
        assert_eq!(claimed_image(&t, 0).unwrap().to_string(), "wp3*wp2");
        assert_eq!(claimed_image(&t, 1).unwrap().to_string(), "wp3*wp2^3");
        assert_eq!(t.dimension(5), 1);
    }

    #[test]
    fn suite_passes() {
        let r = verify_bpu2_images(3).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(matches!(verify_bpu2_images(4), Err(Mod2Error::OutOfRange(_))));
    }
}
