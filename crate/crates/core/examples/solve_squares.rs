//! Recover Steenrod squares on the Toda generators from their images under
//! certified maps to Chern and Stiefel–Whitney rings.
//!
//! cargo run --example solve_squares

use bpuverify::mod2alg::{solve_sq, verify_steenrod_theorem, AlgebraLibrary, Detector, SQUARE_INDICES, TODA_GENERATORS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lib = AlgebraLibrary::builtin();
    let targets = ["bu4", "bso6", "bso3"];
    let maps = targets.iter().map(|t| lib.map("toda", t)).collect::<Result<Vec<_>, _>>()?;
    let actions = targets.iter().map(|t| lib.action(t)).collect::<Result<Vec<_>, _>>()?;
    let detectors: Vec<Detector> = maps
        .iter()
        .zip(&actions)
        .map(|(&map, action)| Detector { map, action })
        .collect();
    for g in TODA_GENERATORS {
        for i in SQUARE_INDICES {
            let c = solve_sq(&detectors, g, i)?;
            let shown: Vec<String> = c.iter().map(ToString::to_string).collect();
            println!("Sq^{i}({g}) ∈ {{{}}}", shown.join(" | "));
        }
    }
    let r = verify_steenrod_theorem(24)?;
    println!("{} checks, passed: {}", r.checks.len(), r.passed());
    Ok(())
}
