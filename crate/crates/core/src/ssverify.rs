//! Point evaluations of the `d₃ = ∇(−)·x₁` differential in the Serre spectral
//! sequence for `BPU(n)`, and the Chern-class pullback along the diagonal
//! `BU(2) → BU(4)`.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::intlinalg::ModpMatrix;
use crate::mod2alg::verify_bpu2_images;
use crate::poly::{CoeffRing, Polynomial, Ring};
use crate::report::VerificationReport;
use crate::symfun::{AlphaGenerators, SymError, SymmetricContext};

/// `d₃(f·ξ) = ∇(f)·x₁·ξ`: the σ-polynomial coefficient of `x₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D3Image {
    pub coefficient: Polynomial,
}

impl fmt::Display for D3Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "({})·x1", self.coefficient)
        }
    }
}

pub fn d3_image(ctx: &SymmetricContext, f: &Polynomial) -> Result<D3Image, SymError> {
    if !f.is_zero() && f.homogeneous_degree().is_none() {
        return Err(SymError::Inhomogeneous);
    }
    Ok(D3Image {
        coefficient: ctx.nabla_sigma(f)?,
    })
}

/// `∇(σ₁) = n`, the order of `H³(BPU(n); ℤ)`.
pub fn h3_order(n: usize) -> Result<BigInt, SymError> {
    let ctx = SymmetricContext::new(n);
    let img = ctx.nabla_sigma(&ctx.sigma(1)?)?;
    Ok(img.coeff(&ctx.sigma_ring().unit_monomial()))
}

fn modp_columns(ctx: &SymmetricContext, d: u32, p: u64, order: &[usize]) -> (ModpMatrix, Vec<Vec<u64>>) {
    let a = ctx.nabla_matrix(d, p).to_modp(p);
    let cols: Vec<Vec<u64>> = order
        .iter()
        .map(|&j| (0..a.rows()).map(|i| a.get(i, j)).collect())
        .collect();
    (ModpMatrix::from_columns(a.rows(), &cols, p), cols)
}

fn span_rank(rows: usize, vectors: &[Vec<u64>], p: u64) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ModpMatrix::from_columns(rows, vectors, p).rank()
}

/// `dim(ker ∇_d / (im ∇_(d+1) ∩ ker ∇_d))` over `ℤ/p`, with the σ-monomials
/// of each degree taken in the given orders.
fn quotient_dimension(ctx: &SymmetricContext, d: u32, p: u64, order_d: &[usize], order_up: &[usize]) -> usize {
    let (a, _) = modp_columns(ctx, d, p, order_d);
    // kernel vectors back in the unpermuted coordinates of degree d
    let kernel: Vec<Vec<u64>> = a
        .kernel()
        .into_iter()
        .map(|x| {
            let mut v = vec![0; x.len()];
            for (k, &j) in order_d.iter().enumerate() {
                v[j] = x[k];
            }
            v
        })
        .collect();
    let (_, images) = modp_columns(ctx, d + 1, p, order_up);
    let rows = ctx.basis(d).len();
    let both: Vec<Vec<u64>> = kernel.iter().chain(&images).cloned().collect();
    let meet = kernel.len() + span_rank(rows, &images, p) - span_rank(rows, &both, p);
    kernel.len() - meet
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn reversed(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// `E₄^{9,4} = 0`: the mod-2 kernel of `∇` on `Λ₄²` is spanned by `σ₁²`, which
/// is `∇(σ₁σ₂)` mod 2.
pub fn verify_e4_9_4() -> Result<VerificationReport, SymError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("spectral");
    let ctx = SymmetricContext::new(4);
    let b2 = ctx.basis(2);
    let b3 = ctx.basis(3);

    let kernel = ctx.kernel_basis(2, 2)?;
    let s1sq = ctx.sigma_ring().parse("s1^2")?.reduce_coefficients(2)?;
    report.check(
        "e4_9_4_kernel",
        kernel == [s1sq.clone()],
        "ker ∇ on Λ₄² mod 2 is spanned by σ₁²",
        kernel.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    );

    let img = ctx.nabla_sigma(&ctx.sigma_ring().parse("s1*s2")?)?;
    report.check(
        "e4_9_4_boundary",
        img.to_string() == "3*s1^2 + 4*s2" && img.reduce_coefficients(2)? == s1sq,
        "∇(σ₁σ₂) = 4σ₂ + 3σ₁² ≡ σ₁² mod 2",
        img.to_string(),
    );

    let q = quotient_dimension(&ctx, 2, 2, &identity(b2.len()), &identity(b3.len()));
    let q_rev = quotient_dimension(&ctx, 2, 2, &reversed(b2.len()), &reversed(b3.len()));
    report.check(
        "e4_9_4_vanishes",
        q == 0 && q_rev == 0,
        "ker d₃^{9,4} = im d₃^{6,6}, so E₄^{9,4} = 0 (stable under reversed basis order)",
        format!("{q},{q_rev}"),
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// `E₄^{11,2} = 0`: `∇(σ₁²) = 8σ₁ ≡ −σ₁ mod 3` spans the rank-one target.
pub fn verify_e4_11_2() -> Result<VerificationReport, SymError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("spectral");
    let ctx = SymmetricContext::new(4);
    let img = ctx.nabla_sigma(&ctx.sigma_ring().parse("s1^2")?)?.reduce_coefficients(3)?;
    let minus_s1 = ctx.sigma_ring().parse("-s1")?.reduce_coefficients(3)?;
    report.check(
        "e4_11_2_boundary",
        img == minus_s1,
        "∇(σ₁²) = 8σ₁ ≡ 2σ₁ ≡ −σ₁ mod 3",
        img.to_string(),
    );
    let target = ctx.basis(1).len();
    report.check("e4_11_2_target", target == 1, "the target ℤ/3{x₁x₃,₀c₁} has rank 1", target.to_string());
    let (a, _) = modp_columns(&ctx, 2, 3, &identity(ctx.basis(2).len()));
    let (a_rev, _) = modp_columns(&ctx, 2, 3, &reversed(ctx.basis(2).len()));
    let q = target - a.rank();
    let q_rev = target - a_rev.rank();
    report.check(
        "e4_11_2_vanishes",
        q == 0 && q_rev == 0,
        "∇ from Λ₄² onto Λ₄¹ mod 3 is surjective, so E₄^{11,2} = 0 (stable under reversed basis order)",
        format!("{q},{q_rev}"),
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The ring `ℤ[c₁', c₂']` of the pullback.
pub fn pullback_ring() -> Ring {
    Ring::with_vars(CoeffRing::Integer, [("c1p", 1), ("c2p", 2)])
}

/// Degree components `1..=4` of `(1 + c₁' + c₂')²`.
pub fn whitney_square(ring: &Ring) -> Result<Vec<Polynomial>, SymError> {
    let total = ring.parse("1 + c1p + c2p")?.pow(2);
    Ok((1..=4).map(|d| total.component(d)).collect())
}

/// `σ_k ↦` the degree-`k` component of `(1 + c₁' + c₂')²`.
pub fn pullback(f: &Polynomial) -> Result<Polynomial, SymError> {
    let ring = pullback_ring();
    Ok(f.substitute_all(&ring, &whitney_square(&ring)?)?)
}

pub fn verify_chern_pullbacks() -> Result<VerificationReport, SymError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("spectral");
    let ring = pullback_ring();
    let comps = whitney_square(&ring)?;
    let expected = ["2*c1p", "c1p^2 + 2*c2p", "2*c1p*c2p", "c2p^2"];
    for (k, (c, e)) in comps.iter().zip(expected).enumerate() {
        report.check(
            format!("whitney_c{}", k + 1),
            *c == ring.parse(e)?,
            format!("Δ*(c{}) = {e}", k + 1),
            c.to_string(),
        );
    }
    let total = comps.iter().fold(ring.one(), |acc, c| &acc + c);
    report.check(
        "whitney_total",
        total == ring.parse("1 + c1p + c2p")?.pow(2),
        "the components sum back to (1 + c1' + c2')²",
        total.to_string(),
    );
    let displayed = ring.parse("2*c2p*c1p^2")?;
    if displayed != comps[1] {
        report.finding(
            "delta_c2_display",
            "the display Δ*(c2) = 2c2'c1'² has degree 4 and differs from the Whitney component c1'² + 2c2' in degree 2",
            format!("{} vs {}", displayed, comps[1]),
        );
    }

    let ctx = SymmetricContext::new(4);
    let alphas = AlphaGenerators::new(&ctx);
    let a4 = pullback(&alphas.a4)?;
    let want = ring.parse("c1p^2 - 4*c2p")?.pow(2);
    report.check("pullback_alpha4", a4 == want, "Δ*(α₄) = (c1'² − 4c2')²", a4.to_string());
    let two = BigInt::from(2);
    for (name, a) in [("alpha2", &alphas.a2), ("alpha3", &alphas.a3), ("alpha6", &alphas.a6)] {
        let img = pullback(a)?;
        report.check(
            format!("pullback_{name}_even"),
            img.divisible_by(&two),
            format!("Δ*({name}) ≡ 0 mod 2"),
            img.to_string(),
        );
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// All spectral-sequence point checks for `n = 4`.
pub fn verify_spectral() -> Result<VerificationReport, SymError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("spectral");
    let ctx = SymmetricContext::new(4);

    let h = h3_order(4)?;
    report.check("h3_order", h == BigInt::from(4), "∇(σ₁) = 4, so H³(BPU(4); ℤ) = ℤ/4", h.to_string());
    let h2 = h3_order(2)?;
    report.check("h3_order_n2", h2 == BigInt::from(2), "∇(σ₁) = 2 for n = 2", h2.to_string());

    let mut bad = Vec::new();
    for k in 1..=4usize {
        let img = d3_image(&ctx, &ctx.sigma(k)?)?;
        let want = ctx.sigma(k - 1)?.scale((4 - k + 1) as u64);
        if img.coefficient != want {
            bad.push(format!("c{k}: {img}"));
        }
    }
    report.check("d3_chern", bad.is_empty(), "d₃(c_k) = (5 − k)c_(k−1)·x₁ for k = 1..4", bad.join("; "));

    let alphas = AlphaGenerators::new(&ctx);
    let cycles: Vec<String> = alphas
        .all()
        .iter()
        .map(|a| d3_image(&ctx, a).map(|i| i.to_string()))
        .collect::<Result<_, _>>()?;
    report.check(
        "d3_alpha_cycles",
        cycles.iter().all(|c| c == "0"),
        "d₃(α_i) = 0 for i = 2, 3, 4, 6",
        cycles.join(","),
    );

    report.extend(verify_e4_9_4()?);
    report.extend(verify_e4_11_2()?);
    report.extend(verify_chern_pullbacks()?);

    // the class x₁·y₂,₁ in ^UE₃^{13,0} is nonzero because its reduction is
    match verify_bpu2_images(0) {
        Ok(b) => {
            let c = b.get("integral_y21");
            report.check(
                "e3_13_0_nonvanishing",
                c.is_some_and(|c| c.status == crate::report::Status::Pass),
                "p1·W3² and its powers are nonzero in ℤ[p1, W3]/(2W3)",
                c.map(|c| c.witness.clone()).unwrap_or_default(),
            );
        }
        Err(e) => report.check("e3_13_0_nonvanishing", false, "bpu2 images", e.to_string()),
    }

    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// `∇(σ₁)` as a machine integer, for callers that only need the order.
pub fn h3_order_u64(n: usize) -> Option<u64> {
    h3_order(n).ok()?.to_u64()
}
