//! The restriction Θ: vᵢ ↦ i·η into ℤ[η]/(pη) and the discriminant-type class δ.
//!
//! cargo run --example theta_restriction [p]

use bpuverify::symfun::{delta, theta_map, vistoli_delta_check, SymmetricContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let ctx = SymmetricContext::new(p as usize);
    for k in 1..=p as usize {
        let s = ctx.elementary_symmetric(k)?;
        println!("Θ(σ{k}) = {}", theta_map(&ctx, &s)?);
    }
    println!("Θ(δ) = {}", theta_map(&ctx, &delta(&ctx))?);
    print!("{}", vistoli_delta_check(p)?.to_text());
    Ok(())
}
