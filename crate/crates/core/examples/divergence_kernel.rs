//! The divergence ∇ = Σ ∂/∂vᵢ on symmetric polynomials in four variables, its
//! kernel generators α₂, α₃, α₄, α₆ and their relation.
//!
//! cargo run --example divergence_kernel [max_degree]

use bpuverify::symfun::{certify_k4_presentation, hilbert_coefficients, AlphaGenerators, SymmetricContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map_or(Ok(10), |s| s.parse())?;
    let ctx = SymmetricContext::new(4);
    let alphas = AlphaGenerators::new(&ctx);
    for (name, a) in ["α2", "α3", "α4", "α6"].iter().zip(alphas.all()) {
        println!("{name} = {a}   ∇ = {}", ctx.nabla_sigma(a)?);
    }
    println!("64α6 − α2³ − 27α3² + 48α2α4 = {}", alphas.relation());

    // the same ∇ computed on the expansion in v1..v4
    let s2 = ctx.elementary_symmetric(2)?;
    println!("∇σ2 in v's: {}  =  {}", ctx.nabla(&s2)?, ctx.to_sigma(&ctx.nabla(&s2)?)?);

    let series = hilbert_coefficients(max);
    for d in 0..=max {
        println!("rank K4^{d} = {}  (series {})", ctx.kernel_matrix(d).cols(), series[d as usize]);
    }
    print!("{}", certify_k4_presentation(max).to_text());
    Ok(())
}
