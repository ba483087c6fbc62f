//! The d3 differential as ∇(−)·x1 and the pullback of Chern classes along
//! the diagonal BU(2) → BU(4).
//!
//! cargo run --example spectral_checks

use bpuverify::ssverify::{d3_image, h3_order, pullback, pullback_ring, verify_spectral, whitney_square};
use bpuverify::symfun::{AlphaGenerators, SymmetricContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = SymmetricContext::new(4);
    for k in 1..=4 {
        println!("d3(c{k}) = {}", d3_image(&ctx, &ctx.sigma(k)?)?);
    }
    for n in 2..=5 {
        println!("|H^3(BPU({n}))| = {}", h3_order(n)?);
    }
    let ring = pullback_ring();
    for (k, c) in whitney_square(&ring)?.iter().enumerate() {
        println!("Δ*(c{}) = {c}", k + 1);
    }
    let a = AlphaGenerators::new(&ctx);
    println!("Δ*(α4) = {}", pullback(&a.a4)?);
    print!("{}", verify_spectral()?.to_text());
    Ok(())
}
