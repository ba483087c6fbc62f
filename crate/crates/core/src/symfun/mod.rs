//! Symmetric polynomials, the divergence operator `∇ = Σ ∂/∂vᵢ`, and its
//! kernel and cokernel on the σ-basis.
//!
//! Degrees follow the v-degree convention: `deg vᵢ = 1`, `deg σᵢ = i`.

mod alpha;
mod theta;

pub use alpha::{certify_k4_presentation, coker_suite, hilbert_coefficients, AlphaGenerators};
pub use theta::{delta, theta_map, theta_restricted_kernel, vistoli_delta_check, EtaPoly};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::intlinalg::{self, ElementOrder, IntMatrix, LinalgError};
use crate::poly::{CoeffRing, GradedBasis, Monomial, PolyError, Polynomial, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("σ_{k} is undefined for {n} variables")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("polynomial does not live in the expected ring ({0})")]
    WrongRing(&'static str),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The v-ring `ℤ[v₁..vₙ]`, the σ-ring `ℤ[σ₁..σₙ]`, and the expansion between them.
#[derive(Debug, Clone)]
pub struct SymmetricContext {
    n: usize,
    v_ring: Ring,
    sigma_ring: Ring,
    /// `expansions[k]` is σ_k written in the v's, `k = 0..=n`.
    expansions: Vec<Polynomial>,
}

impl SymmetricContext {
    pub fn new(n: usize) -> Self {
        let v_ring = Ring::with_vars(
            CoeffRing::Integer,
            (1..=n).map(|i| (format!("v{i}"), 1)),
        );
        let sigma_ring = Ring::with_vars(
            CoeffRing::Integer,
            (1..=n).map(|i| (format!("s{i}"), i as u32)),
        );
        // σ_k via the product ∏(1 + vᵢ t): peel one variable at a time
        let mut e = vec![v_ring.one()];
        for i in 0..n {
            let vi = v_ring.var(i).expect("index in range");
            let mut next = e.clone();
            next.push(v_ring.zero());
            for k in 1..next.len() {
                next[k] = &next[k] + &(&e[k - 1] * &vi);
            }
            e = next;
        }
        SymmetricContext {
            n,
            v_ring,
            sigma_ring,
            expansions: e,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn v_ring(&self) -> &Ring {
        &self.v_ring
    }

    pub fn sigma_ring(&self) -> &Ring {
        &self.sigma_ring
    }

    /// σ_k as a σ-ring variable (σ₀ = 1).
    pub fn sigma(&self, k: usize) -> Result<Polynomial, SymError> {
        match k {
            0 => Ok(self.sigma_ring.one()),
            k if k <= self.n => Ok(self.sigma_ring.var(k - 1)?),
            k => Err(SymError::IndexOutOfRange { k, n: self.n }),
        }
    }

    /// σ_k expanded in the v-variables.
    pub fn elementary_symmetric(&self, k: usize) -> Result<Polynomial, SymError> {
        self.expansions
            .get(k)
            .cloned()
            .ok_or(SymError::IndexOutOfRange { k, n: self.n })
    }

    /// Rewrite a σ-polynomial in the v-variables.
    pub fn expand(&self, f: &Polynomial) -> Result<Polynomial, SymError> {
        self.expect_sigma(f)?;
        Ok(f.substitute_all(&self.v_ring, &self.expansions[1..])?)
    }

    /// Express a symmetric v-polynomial in the σ-basis.
    pub fn to_sigma(&self, f: &Polynomial) -> Result<Polynomial, SymError> {
        self.expect_v(f)?;
        let mut rest = f.clone();
        let mut out = self.sigma_ring.zero();
        while let Some((m, c)) = rest.leading() {
            // the lex-leading exponent of a symmetric polynomial is a partition
            let e = m.exps();
            if e.windows(2).any(|w| w[0] < w[1]) {
                return Err(SymError::NotSymmetric);
            }
            let mut sexp = vec![0u32; self.n];
            for k in 0..self.n {
                sexp[k] = e[k] - e.get(k + 1).copied().unwrap_or(0);
            }
            let term = self.sigma_ring.term(c.clone(), self.sigma_ring.monomial(sexp));
            rest = &rest - &self.expand(&term)?;
            out = &out + &term;
        }
        Ok(out)
    }

    /// `∇ = Σ ∂/∂vᵢ` on a v-polynomial.
    pub fn nabla(&self, f: &Polynomial) -> Result<Polynomial, SymError> {
        self.expect_v_ring(f)?;
        let mut out = f.ring().zero();
        for i in 0..self.n {
            out = &out + &f.partial_derivative(i)?;
        }
        Ok(out)
    }

    /// `∇` on a σ-polynomial, using the derivation rule `∇σ_k = (n−k+1)σ_{k−1}`.
    pub fn nabla_sigma(&self, f: &Polynomial) -> Result<Polynomial, SymError> {
        self.expect_sigma_ring(f)?;
        let ring = f.ring();
        let mut out = ring.zero();
        for k in 1..=self.n {
            let d = f.partial_derivative(k - 1)?;
            if d.is_zero() {
                continue;
            }
            let lower = if k == 1 { ring.one() } else { ring.var(k - 2)? };
            out = &out + &(&d * &lower.scale((self.n - k + 1) as u64));
        }
        Ok(out)
    }

    /// σ-monomial basis of `Λₙᵈ`.
    pub fn basis(&self, d: u32) -> GradedBasis {
        self.sigma_ring.graded_basis(d)
    }

    /// Coordinates of a homogeneous degree-`d` σ-polynomial in [`Self::basis`].
    pub fn coordinates(&self, f: &Polynomial, d: u32) -> Result<Vec<BigInt>, SymError> {
        self.expect_sigma(f)?;
        if !(f.is_zero() || f.homogeneous_degree() == Some(d)) {
            return Err(SymError::Inhomogeneous);
        }
        let b = self.basis(d);
        let mut x = vec![BigInt::zero(); b.len()];
        for (m, c) in f.terms() {
            let i = b.position(m).expect("homogeneous monomial is in the basis");
            x[i] = c.clone();
        }
        Ok(x)
    }

    /// The σ-polynomial with the given coordinates in `basis(d)`.
    pub fn from_coordinates(&self, ring: &Ring, d: u32, x: &[BigInt]) -> Polynomial {
        let b = self.basis(d);
        assert_eq!(b.len(), x.len(), "coordinate vector length");
        b.monomials
            .iter()
            .zip(x)
            .fold(ring.zero(), |acc, (m, c)| &acc + &ring.term(c.clone(), rebuild(ring, m)))
    }

    /// Matrix of `∇ : Λₙᵈ → Λₙᵈ⁻¹` in the σ-bases; `modulus` 0 means over ℤ,
    /// otherwise entries are reduced into `[0, modulus)`.
    pub fn nabla_matrix(&self, d: u32, modulus: u64) -> IntMatrix {
        let src = self.basis(d);
        let rows = if d == 0 { 0 } else { self.basis(d - 1).len() };
        let mut a = IntMatrix::zeros(rows, src.len());
        for (j, m) in src.monomials.iter().enumerate() {
            let f = self.sigma_ring.term(1, m.clone());
            let img = self.nabla_sigma(&f).expect("σ-ring input");
            if img.is_zero() {
                continue;
            }
            let col = self.coordinates(&img, d - 1).expect("∇ lowers degree by one");
            for (i, c) in col.into_iter().enumerate() {
                a[(i, j)] = if modulus == 0 {
                    c
                } else {
                    num_integer::Integer::mod_floor(&c, &BigInt::from(modulus))
                };
            }
        }
        a
    }

    /// Basis of `Kₙᵈ = ker ∇` in degree `d`: a lattice basis over ℤ
    /// (`modulus` 0) or a vector-space basis over ℤ/p.
    pub fn kernel_basis(&self, d: u32, modulus: u64) -> Result<Vec<Polynomial>, SymError> {
        let a = self.nabla_matrix(d, modulus);
        if modulus == 0 {
            let ring = &self.sigma_ring;
            return Ok(intlinalg::integer_kernel(&a)
                .into_iter()
                .map(|x| self.from_coordinates(ring, d, &x))
                .collect());
        }
        if !intlinalg::is_prime(modulus) {
            return Err(LinalgError::NotPrime(modulus).into());
        }
        let ring = self.sigma_ring.with_coeffs(CoeffRing::Modular(modulus));
        Ok(a.to_modp(modulus)
            .kernel()
            .into_iter()
            .map(|x| {
                let x: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
                self.from_coordinates(&ring, d, &x)
            })
            .collect())
    }

    /// Kernel lattice basis at degree `d` as matrix columns in σ-coordinates.
    pub fn kernel_matrix(&self, d: u32) -> IntMatrix {
        let a = self.nabla_matrix(d, 0);
        IntMatrix::from_columns(self.basis(d).len(), &intlinalg::integer_kernel(&a))
    }

    /// Order of `f` in `Λₙᵈ / ∇(Λₙᵈ⁺¹)`.
    pub fn coker_order(&self, f: &Polynomial) -> Result<ElementOrder, SymError> {
        self.expect_sigma(f)?;
        let d = match f.homogeneous_degree() {
            Some(d) => d,
            None if f.is_zero() => return Ok(ElementOrder::Finite(1.into())),
            None => return Err(SymError::Inhomogeneous),
        };
        let a = self.nabla_matrix(d + 1, 0);
        let x = self.coordinates(f, d)?;
        Ok(intlinalg::element_order_in_cokernel(&a, &x)?)
    }

    /// Mod-p kernel dimension computed independently of [`Self::kernel_basis`].
    pub fn kernel_dim_mod_p(&self, d: u32, p: u64) -> Result<usize, SymError> {
        let a = self.nabla_matrix(d, 0);
        Ok(a.cols() - intlinalg::rank_mod_p(&a, p)?)
    }

    fn expect_v_ring(&self, f: &Polynomial) -> Result<(), SymError> {
        if f.ring().vars() != self.v_ring.vars() {
            return Err(SymError::WrongRing("v-ring"));
        }
        Ok(())
    }

    fn expect_v(&self, f: &Polynomial) -> Result<(), SymError> {
        if *f.ring() != self.v_ring {
            return Err(SymError::WrongRing("integral v-ring"));
        }
        Ok(())
    }

    fn expect_sigma_ring(&self, f: &Polynomial) -> Result<(), SymError> {
        if f.ring().vars() != self.sigma_ring.vars() {
            return Err(SymError::WrongRing("σ-ring"));
        }
        Ok(())
    }

    fn expect_sigma(&self, f: &Polynomial) -> Result<(), SymError> {
        if *f.ring() != self.sigma_ring {
            return Err(SymError::WrongRing("integral σ-ring"));
        }
        Ok(())
    }
}

fn rebuild(ring: &Ring, m: &Monomial) -> Monomial {
    ring.monomial(m.exps().to_vec())
}
