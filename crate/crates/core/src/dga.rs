//! The differential graded algebra `(W, D)` over GF(2) with its chain map `λ`
//! and chain homotopy `P`.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::mod2alg::{linear, products_in_degree, AlgebraLibrary, AlgebraMap, Mod2Error, PresentedAlgebra, SteenrodAction};
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::report::VerificationReport;
use crate::series::rational_series;

/// Generators of `ker D` as a subalgebra.
pub const KER_D_GENERATORS: [&str; 6] = ["x2", "x8", "x12", "x3", "x5^2", "x3^2*x9 + x5^3"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slots {
    x2: usize,
    x3: usize,
    x5: usize,
    x8: usize,
    x9: usize,
    x12: usize,
}

/// `W = ℤ/2[x2,x3,x5,x8,x9,x12]/(x2x3, x2x5, x2x9, x9² + x3²x12 + x5²x8 + x3³x9 + x3x5³)`.
#[derive(Debug, Clone)]
pub struct WAlgebra {
    alg: Arc<PresentedAlgebra>,
    slots: Slots,
}

impl WAlgebra {
    pub fn new() -> Result<Self, Mod2Error> {
        Self::from_algebra(AlgebraLibrary::builtin().get("w")?)
    }

    pub fn from_algebra(alg: Arc<PresentedAlgebra>) -> Result<Self, Mod2Error> {
        let slots = Slots {
            x2: alg.index_of("x2")?,
            x3: alg.index_of("x3")?,
            x5: alg.index_of("x5")?,
            x8: alg.index_of("x8")?,
            x9: alg.index_of("x9")?,
            x12: alg.index_of("x12")?,
        };
        Ok(WAlgebra { alg, slots })
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.alg
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, Mod2Error> {
        self.alg.parse(text)
    }

    pub fn zero(&self) -> Polynomial {
        self.alg.ring().zero()
    }

    fn mono(&self, x2: u32, x3: u32, x5: u32, x8: u32, x9: u32, x12: u32) -> Monomial {
        let s = self.slots;
        let mut e = vec![0; self.alg.ring().nvars()];
        e[s.x2] = x2;
        e[s.x3] = x3;
        e[s.x5] = x5;
        e[s.x8] = x8;
        e[s.x9] = x9;
        e[s.x12] = x12;
        self.alg.ring().monomial(e)
    }

    /// Normal-form monomials of degree `d` from the two families
    /// `x2^a x8^b x12^c` and `x3^i x5^j x9^ε x8^b x12^c` with `(i, j, ε) ≠ 0`.
    pub fn enumerate(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for m in monomial_basis(d, &[2, 8, 12]).monomials {
            let e = m.exps();
            out.push(self.mono(e[0], 0, 0, e[1], 0, e[2]));
        }
        for eps in 0..=1u32 {
            let rest = match d.checked_sub(9 * eps) {
                Some(r) => r,
                None => continue,
            };
            for m in monomial_basis(rest, &[3, 5, 8, 12]).monomials {
                let e = m.exps();
                if e[0] + e[1] + eps > 0 {
                    out.push(self.mono(0, e[0], e[1], e[2], eps, e[3]));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// `D` on a monomial, by the Leibniz rule from `D(x5) = x3²`, `D(x9) = x5²`.
    fn d_monomial(&self, m: &Monomial) -> Polynomial {
        let s = self.slots;
        let mut out = self.zero();
        for (slot, target) in [(s.x5, s.x3), (s.x9, s.x5)] {
            if m.exp(slot) % 2 == 1 {
                let mut e = m.exps().to_vec();
                e[slot] -= 1;
                e[target] += 2;
                out = &out + &self.alg.ring().term(1, self.alg.ring().monomial(e));
            }
        }
        out
    }

    /// The differential, reduced to normal form.
    pub fn differential(&self, p: &Polynomial) -> Polynomial {
        let mut out = self.zero();
        for m in self.alg.normal_form(p).monomials() {
            out = &out + &self.d_monomial(m);
        }
        self.alg.normal_form(&out)
    }

    fn lambda_monomial(&self, m: &Monomial) -> bool {
        let s = self.slots;
        m.exp(s.x5) == 0 && m.exp(s.x9) == 0 && (m.exp(s.x3) == 0 || (m.exp(s.x3) == 1 && m.exp(s.x2) == 0))
    }

    /// Identity on `x2^a x8^b x12^c` and `x3 x8^b x12^c`, zero on other normal-form monomials.
    pub fn lambda(&self, p: &Polynomial) -> Polynomial {
        let mut out = self.zero();
        for m in self.alg.normal_form(p).monomials() {
            if self.lambda_monomial(m) {
                out = &out + &self.alg.monomial_element(m);
            }
        }
        out
    }

    fn p_monomial(&self, m: &Monomial) -> Polynomial {
        let s = self.slots;
        let (i, j, k) = (m.exp(s.x3), m.exp(s.x5), m.exp(s.x9));
        let n = self.mono(m.exp(s.x2), 0, 0, m.exp(s.x8), 0, m.exp(s.x12));
        let ring = self.alg.ring();
        let term = |i, j, k| ring.term(1, n.mul(&self.mono(0, i, j, 0, k, 0)));
        if i >= 2 {
            term(i - 2, j + 1, k)
        } else if j != 0 && j % 2 == 0 && k % 2 == 0 {
            term(i, j - 2, k + 1)
        } else if j == 0 && k >= 2 && k % 2 == 0 {
            let tail = self.parse("x5*x12 + x8*x9 + x3*x5*x9").expect("valid element");
            &term(i, 0, k - 2) * &tail
        } else {
            self.zero()
        }
    }

    /// The chain homotopy `P`, applied monomialwise to the normal form.
    pub fn homotopy(&self, p: &Polynomial) -> Polynomial {
        let mut out = self.zero();
        for m in self.alg.normal_form(p).monomials() {
            out = &out + &self.p_monomial(m);
        }
        self.alg.normal_form(&out)
    }

    fn basis_elements(&self, d: u32) -> Vec<Polynomial> {
        self.alg.basis(d).iter().map(|m| self.alg.monomial_element(m)).collect()
    }

    /// Rank of `D` from degree `d` to `d + 1`.
    pub fn d_rank(&self, d: u32) -> usize {
        let images: Vec<Polynomial> = self.basis_elements(d).iter().map(|b| self.differential(b)).collect();
        linear::rank(&images)
    }

    pub fn kernel_dimension(&self, d: u32) -> usize {
        self.alg.dimension(d) - self.d_rank(d)
    }

    /// `dim ker D_d − dim im D_(d−1)`, after certifying `D² = 0` on degrees `d − 1` and `d`.
    pub fn homology_dimension(&self, d: u32) -> Result<usize, DgaError> {
        for e in d.saturating_sub(1)..=d {
            if let Some(m) = self.d_squared_failure(e) {
                return Err(DgaError::DSquaredNonzero(m));
            }
        }
        let im = if d == 0 { 0 } else { self.d_rank(d - 1) };
        Ok(self.kernel_dimension(d) - im)
    }

    fn d_squared_failure(&self, d: u32) -> Option<String> {
        self.basis_elements(d)
            .into_iter()
            .find(|b| !self.differential(&self.differential(b)).is_zero())
            .map(|b| b.to_string())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DgaError {
    #[error("D² ≠ 0 on {0}")]
    DSquaredNonzero(String),
    #[error(transparent)]
    Mod2(#[from] Mod2Error),
}

/// Coefficients of `(1 + t³)/((1 − t²)(1 − t⁸)(1 − t¹²))`, the Poincaré series of
/// `ℤ/2[x2, x8, x12] ⊗ E[x3]` as an abstract tensor product.
pub fn tensor_series(max: u32) -> Vec<i64> {
    rational_series(&[1, 0, 0, 1], &[2, 8, 12], max as usize)
}

/// Poincaré series of `ℤ/2[x2, x8, x12] ⊕ ℤ/2[x8, x12]·x3`, the span of `λ`'s image:
/// `1/((1 − t²)(1 − t⁸)(1 − t¹²)) + t³/((1 − t⁸)(1 − t¹²))`.
pub fn homology_series(max: u32) -> Vec<i64> {
    let a = rational_series(&[1], &[2, 8, 12], max as usize);
    let b = rational_series(&[0, 0, 0, 1], &[8, 12], max as usize);
    a.iter().zip(&b).map(|(x, y)| x + y).collect()
}

fn first_failures<T: Send>(max: u32, f: impl Fn(u32) -> Option<T> + Sync) -> Vec<T> {
    let mut v: Vec<(u32, T)> = (0..=max).into_par_iter().filter_map(|d| f(d).map(|t| (d, t))).collect();
    v.sort_by_key(|(d, _)| *d);
    v.into_iter().map(|(_, t)| t).collect()
}

/// Every claim about `(W, D)` through `max_degree`.
pub fn verify_dga(max_degree: u32) -> Result<VerificationReport, DgaError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("dga");
    let lib = AlgebraLibrary::builtin();
    let w = WAlgebra::from_algebra(lib.get("w")?)?;
    let alg = w.algebra().clone();

    let enum_bad = first_failures(max_degree, |d| {
        let a: BTreeSet<Monomial> = w.enumerate(d).into_iter().collect();
        let b: BTreeSet<Monomial> = alg.basis(d).into_iter().collect();
        (a != b).then(|| format!("d={d}: {} vs {}", a.len(), b.len()))
    });
    report.check(
        "normal_form_families",
        enum_bad.is_empty(),
        format!("the two monomial families are exactly the Gröbner normal forms through degree {max_degree}"),
        enum_bad.join("; "),
    );

    let toda = lib.get("toda")?;
    let dim_bad = first_failures(max_degree, |d| {
        let (a, b) = (alg.dimension(d), toda.dimension(d));
        (a != b).then(|| format!("d={d}: {a} vs {b}"))
    });
    report.check(
        "toda_dimensions",
        dim_bad.is_empty(),
        format!("dim W_d equals the Toda ring's dimension for d ≤ {max_degree}"),
        dim_bad.join("; "),
    );

    let dd_bad = first_failures(max_degree + 1, |d| w.d_squared_failure(d));
    report.check(
        "d_squared_zero",
        dd_bad.is_empty(),
        format!("D² = 0 on every normal-form monomial through degree {}", max_degree + 1),
        dd_bad.join("; "),
    );

    let homotopy_bad = first_failures(max_degree, |d| {
        w.basis_elements(d).into_iter().find_map(|m| {
            let lhs = &w.homotopy(&w.differential(&m)) + &w.differential(&w.homotopy(&m));
            let rhs = &w.lambda(&m) + &m;
            (lhs != rhs).then(|| format!("{m}: PD+DP = {lhs}, λ+id = {rhs}"))
        })
    });
    report.check(
        "homotopy",
        homotopy_bad.is_empty(),
        format!("PD+DP=λ+id verified through degree {max_degree}"),
        homotopy_bad.join("; "),
    );

    let chain_bad = first_failures(max_degree, |d| {
        w.basis_elements(d).into_iter().find_map(|m| {
            let a = w.differential(&w.lambda(&m));
            let b = w.lambda(&w.differential(&m));
            (a != b).then(|| format!("{m}: Dλ = {a}, λD = {b}"))
        })
    });
    report.check(
        "lambda_chain_map",
        chain_bad.is_empty(),
        format!("Dλ = λD through degree {max_degree}"),
        chain_bad.join("; "),
    );
    report.finding(
        "lambda_x2_x3_family",
        "λ fixes x3·x8^b·x12^c only; the family x2^a·x8^b·x12^c·x3 with a ≥ 1 is zero in W because x2·x3 = 0",
        "a = 0",
    );

    let homology: Vec<usize> = (0..=max_degree)
        .into_par_iter()
        .map(|d| {
            let im = if d == 0 { 0 } else { w.d_rank(d - 1) };
            w.kernel_dimension(d) - im
        })
        .collect();
    let compare = |series: &[i64]| -> Vec<String> {
        homology
            .iter()
            .zip(series)
            .enumerate()
            .filter(|(_, (h, s))| **h as i64 != **s)
            .map(|(d, (h, s))| format!("d={d}: {h} vs {s}"))
            .collect()
    };
    let h_bad = compare(&homology_series(max_degree));
    report.check(
        "homology_series",
        h_bad.is_empty() && dd_bad.is_empty(),
        format!(
            "dim H_d(W, D) equals the coefficient of t^d in 1/((1−t²)(1−t⁸)(1−t¹²)) + t³/((1−t⁸)(1−t¹²)) through degree {max_degree}"
        ),
        if h_bad.is_empty() {
            homology.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        } else {
            h_bad.join("; ")
        },
    );
    let tensor_bad = compare(&tensor_series(max_degree));
    if !tensor_bad.is_empty() {
        report.finding(
            "homology_tensor_series",
            "(1+t³)/((1−t²)(1−t⁸)(1−t¹²)) counts the classes x2^a·x3 with a ≥ 1, which vanish in W since x2·x3 = 0; \
             the homology is ℤ/2[x2, x8, x12] ⊕ ℤ/2[x8, x12]·x3",
            tensor_bad.join("; "),
        );
    }

    let gens = KER_D_GENERATORS
        .iter()
        .map(|g| alg.parse(g))
        .collect::<Result<Vec<_>, _>>()?;
    let ker_bad = first_failures(max_degree, |d| {
        let span = products_in_degree(&alg, &gens, d);
        let cycles = span.iter().all(|p| w.differential(p).is_zero());
        let (r, k) = (linear::rank(&span), w.kernel_dimension(d));
        (!cycles || r != k).then(|| format!("d={d}: subalgebra {r}, ker D {k}, all cycles {cycles}"))
    });
    report.check(
        "ker_d_generators",
        ker_bad.is_empty(),
        format!(
            "ker D equals the subalgebra generated by {} through degree {max_degree}",
            KER_D_GENERATORS.join(", ")
        ),
        ker_bad.join("; "),
    );

    let f = lib.map("w", "toda")?;
    let sq = lib.action("toda")?;
    let bockstein_bad = bockstein_failures(&w, f, &sq, max_degree)?;
    report.check(
        "bockstein_correspondence",
        bockstein_bad.is_empty(),
        format!("F∘D = Sq¹∘F for F: W → Toda ring on every normal-form monomial through degree {max_degree}"),
        bockstein_bad.join("; "),
    );

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn bockstein_failures(w: &WAlgebra, f: &AlgebraMap, sq: &SteenrodAction, max: u32) -> Result<Vec<String>, Mod2Error> {
    let per_degree: Vec<Result<Option<String>, Mod2Error>> = (0..=max)
        .into_par_iter()
        .map(|d| {
            for m in w.basis_elements(d) {
                let a = f.apply(&w.differential(&m))?;
                let b = sq.sq(1, &f.apply(&m)?)?;
                if a != b {
                    return Ok(Some(format!("{m}: F(Dm) = {a}, Sq¹F(m) = {b}")));
                }
            }
            Ok(None)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_degree {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> WAlgebra {
        WAlgebra::new().unwrap()
    }

    #[test]
    fn differential_examples() {
        let w = w();
        let d = |s: &str| w.differential(&w.parse(s).unwrap()).to_string();
        assert_eq!(d("x5"), "x3^2");
        assert_eq!(d("x5^2"), "0");
        assert_eq!(w.differential(&w.parse("x5*x9").unwrap()), w.parse("x3^2*x9 + x5^3").unwrap());
        assert_eq!(d("x2*x8"), "0");
    }

    #[test]
    fn lambda_and_homotopy_examples() {
        let w = w();
        let p = |s: &str| w.parse(s).unwrap();
        assert_eq!(w.lambda(&p("x2^3*x8")), p("x2^3*x8"));
        assert_eq!(w.lambda(&p("x8*x12*x3")), p("x8*x12*x3"));
        assert!(w.lambda(&p("x5^2")).is_zero());
        assert_eq!(w.homotopy(&p("x3^2")), p("x5"));
        assert_eq!(w.homotopy(&p("x5^2")), p("x9"));
        assert!(w.homotopy(&p("x2*x8")).is_zero());
        let m = p("x3^2");
        assert!(w.differential(&m).is_zero());
        assert_eq!(w.differential(&w.homotopy(&m)), m);
    }

    #[test]
    fn homology_examples() {
        let w = w();
        assert_eq!(w.homology_dimension(1).unwrap(), 0);
        assert_eq!(w.homology_dimension(3).unwrap(), 1);
        // W_5 is spanned by x5 alone and D(x5) = x3²; x2·x3 is zero in W
        assert_eq!(w.homology_dimension(5).unwrap(), 0);
        assert_eq!(w.homology_dimension(11).unwrap(), 1);
        assert_eq!(&tensor_series(6), &[1, 0, 1, 1, 1, 1, 1]);
        assert_eq!(&homology_series(6), &[1, 0, 1, 1, 1, 0, 1]);
    }

    #[test]
    fn suite_passes_to_twenty() {
        let r = verify_dga(20).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
