//! Graded GF(2) algebras with Gröbner normal forms, certified maps,
//! Steenrod actions, and the mod-2 verification suites.

mod algebra;
pub mod bpu2;
mod format;
pub mod groebner;
pub mod linear;
mod map;
mod reduction;
mod solve;
mod steenrod;

pub use algebra::PresentedAlgebra;
pub use bpu2::{verify_bpu2_images, TorsionQuotient};
pub use format::AlgebraLibrary;
pub use groebner::GroebnerCertificate;
pub use map::{AlgebraMap, MapCertificate};
pub use reduction::{products_in_degree, verify_reduction_claims, RHO_IMAGE_GENERATORS, SQ1_KERNEL_GENERATORS};
pub use solve::{solve_sq, toda_hilbert_series, verify_steenrod_theorem, Detector, SQUARE_INDICES, TODA_GENERATORS};
pub use steenrod::{binomial_mod2, SquareRule, SteenrodAction};

use thiserror::Error;

use crate::intlinalg::LinalgError;
use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Mod2Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unknown algebra {0}")]
    UnknownAlgebra(String),
    #[error("algebra {0} must have GF(2) coefficients")]
    NotMod2(String),
    #[error("element does not belong to algebra {0}")]
    WrongAlgebra(String),
    #[error("inhomogeneous element {0}")]
    Inhomogeneous(String),
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("image of {generator} has degree {got}, expected {expected}")]
    DegreeMismatch { generator: String, expected: u32, got: u32 },
    #[error("map {map} is not well defined: relation {relation} maps to {image}")]
    NotWellDefined { map: String, relation: String, image: String },
    #[error("map {0} has not been certified")]
    Uncertified(String),
    #[error("Sq^{i}({generator}) is not determined by the square table")]
    Underdetermined { generator: String, i: u32 },
    #[error("Gröbner certificate failed: {0}")]
    GroebnerCertificate(String),
    #[error("solution space of dimension {0} is too large to enumerate")]
    TooManyCandidates(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}
