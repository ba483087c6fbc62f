use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{SymError, SymmetricContext};
use crate::intlinalg::{self, inv_mod, is_prime};
use crate::poly::{CoeffRing, Polynomial, Ring};
use crate::report::VerificationReport;

/// An element of `ℤ[η]/(nη)`: an integer constant plus `η`-powers with coefficients mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaPoly {
    modulus: u64,
    constant: BigInt,
    powers: BTreeMap<u32, u64>,
}

impl EtaPoly {
    pub fn zero(modulus: u64) -> Self {
        EtaPoly {
            modulus,
            constant: BigInt::zero(),
            powers: BTreeMap::new(),
        }
    }

    /// `c·η^k`, reduced.
    pub fn monomial(modulus: u64, c: impl Into<BigInt>, k: u32) -> Self {
        let mut out = Self::zero(modulus);
        out.add(k, c.into());
        out
    }

    fn add(&mut self, k: u32, c: BigInt) {
        if k == 0 {
            self.constant += c;
            return;
        }
        let r = c.mod_floor(&BigInt::from(self.modulus)).to_u64().expect("residue");
        let e = self.powers.entry(k).or_insert(0);
        *e = (*e + r) % self.modulus;
        if *e == 0 {
            self.powers.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.powers.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Coefficient of `η^k` (`k > 0`, as a residue mod n).
    pub fn coeff(&self, k: u32) -> u64 {
        self.powers.get(&k).copied().unwrap_or(0)
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    /// Push an element of `ℤ[η]` into `ℤ[η]/(nη)`.
    pub fn from_integral(p: &Polynomial, modulus: u64) -> Self {
        let mut out = Self::zero(modulus);
        for (m, c) in p.terms() {
            out.add(m.exp(0), c.clone());
        }
        out
    }
}

impl fmt::Display for EtaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .powers
            .iter()
            .rev()
            .map(|(&k, &c)| {
                let head = if c == 1 { String::new() } else { format!("{c}*") };
                if k == 1 {
                    format!("{head}eta")
                } else {
                    format!("{head}eta^{k}")
                }
            })
            .collect();
        if !self.constant.is_zero() {
            parts.push(self.constant.to_string());
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Θ(vᵢ) = i·η` into `ℤ[η]/(nη)`, where `n` is the context's variable count.
/// σ-polynomials are expanded into the v's first.
pub fn theta_map(ctx: &SymmetricContext, f: &Polynomial) -> Result<EtaPoly, SymError> {
    let v = if f.ring().vars() == ctx.sigma_ring().vars() {
        ctx.expand(f)?
    } else {
        f.clone()
    };
    let eta = Ring::with_vars(CoeffRing::Integer, [("eta", 1)]);
    let e = eta.var(0)?;
    let images: Vec<Polynomial> = (1..=ctx.n()).map(|i| e.scale(i as u64)).collect();
    let img = v.substitute_all(&eta, &images)?;
    Ok(EtaPoly::from_integral(&img, ctx.n() as u64))
}

/// `δ = ∏_{i≠j}(vᵢ − vⱼ)` in the context's v-ring.
pub fn delta(ctx: &SymmetricContext) -> Polynomial {
    let r = ctx.v_ring();
    let mut out = r.one();
    for i in 0..ctx.n() {
        for j in 0..ctx.n() {
            if i != j {
                let f = &r.var(i).expect("in range") - &r.var(j).expect("in range");
                out = &out * &f;
            }
        }
    }
    out
}

/// Lattice basis of `ker Θ` restricted to `K_pᵈ`, as σ-polynomials.
pub fn theta_restricted_kernel(p: u64, d: u32) -> Result<Vec<Polynomial>, SymError> {
    if !is_prime(p) {
        return Err(intlinalg::LinalgError::NotPrime(p).into());
    }
    let ctx = SymmetricContext::new(p as usize);
    let kernel = ctx.kernel_basis(d, 0)?;
    if d == 0 {
        // Θ(m·1) = m is nonzero for m ≠ 0
        return Ok(Vec::new());
    }
    let c: Vec<u64> = kernel
        .iter()
        .map(|b| theta_map(&ctx, b).map(|t| t.coeff(d)))
        .collect::<Result<_, _>>()?;
    let Some(j) = c.iter().position(|&x| x != 0) else {
        return Ok(kernel);
    };
    let inv = inv_mod(c[j], p);
    let mut out = Vec::with_capacity(kernel.len());
    for (i, b) in kernel.iter().enumerate() {
        if i == j {
            out.push(b.scale(p));
        } else {
            let k = c[i] * inv % p;
            out.push(b - &kernel[j].scale(k));
        }
    }
    Ok(out)
}

/// Checks on `δ` for an odd prime `p`: `Θ(δ) = −η^{p²−p}`, `∇δ = 0`, and `δ ∈ K_p \ ker Θ`.
pub fn vistoli_delta_check(p: u64) -> Result<VerificationReport, SymError> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(SymError::NotOddPrime(p));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("vistoli");
    let ctx = SymmetricContext::new(p as usize);
    let d = (p * p - p) as u32;
    let dv = delta(&ctx);

    let theta = theta_map(&ctx, &dv)?;
    let want = EtaPoly::monomial(p, p - 1, d);
    report.check(
        "theta_delta",
        theta == want,
        format!("Θ'_{p}(δ) = {theta}, expected {want} = −η^{d}"),
        theta.to_string(),
    );

    let nd = ctx.nabla(&dv)?;
    report.check("nabla_delta", nd.is_zero(), "∇(δ) = 0", nd.to_string());

    let ds = ctx.to_sigma(&dv)?;
    let x = ctx.coordinates(&ds, d)?;
    let in_kernel = intlinalg::lattice_coordinates(&ctx.kernel_matrix(d), &x)?.is_some();
    report.check(
        "delta_in_kernel",
        in_kernel,
        format!("δ lies in the kernel lattice K_{p} at degree {d}"),
        ds.to_string(),
    );

    let restricted: Vec<Vec<BigInt>> = theta_restricted_kernel(p, d)?
        .iter()
        .map(|b| ctx.coordinates(b, d))
        .collect::<Result<_, _>>()?;
    let dim = x.len();
    let outside = if restricted.is_empty() {
        true
    } else {
        let basis = intlinalg::lattice_basis(&intlinalg::IntMatrix::from_columns(dim, &restricted));
        intlinalg::lattice_coordinates(&basis, &x)?.is_none()
    };
    report.check(
        "delta_not_in_theta_kernel",
        outside,
        format!("δ is not in ker Θ'_{p}"),
        "",
    );
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
