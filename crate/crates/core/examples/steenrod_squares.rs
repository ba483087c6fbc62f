//! Steenrod squares from the Wu formula, on Chern classes, and from a table of
//! values on generators extended by the Cartan formula.
//!
//! cargo run --example steenrod_squares

use std::sync::Arc;

use bpuverify::mod2alg::{AlgebraLibrary, PresentedAlgebra, SquareRule, SteenrodAction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Arc::new(PresentedAlgebra::free("bso", &[("w4", 4), ("w3", 3), ("w2", 2)]));
    let wu = SteenrodAction::new(w, SquareRule::StiefelWhitney);
    for (i, x) in [(1, "w2"), (2, "w3"), (2, "w4"), (3, "w4"), (4, "w2*w3")] {
        println!("Sq^{i}({x}) = {}", wu.sq_str(i, x)?);
    }

    let c = Arc::new(PresentedAlgebra::free("bu", &[("c2", 4), ("c1", 2)]));
    let chern = SteenrodAction::new(c, SquareRule::Chern);
    println!("Sq^2(c2) = {}", chern.sq_str(2, "c2")?);
    println!("Sq^4(c1*c2) = {}", chern.sq_str(4, "c1*c2")?);

    let lib = AlgebraLibrary::builtin();
    let toda = lib.action("toda")?;
    for (i, x) in [(1, "y5"), (2, "y3"), (4, "y8"), (8, "y12"), (6, "y9"), (3, "y2*y8")] {
        println!("Sq^{i}({x}) = {}", toda.sq_str(i, x)?);
    }
    Ok(())
}
