//! Orders of symmetric polynomials in the cokernel of ∇.
//!
//! cargo run --example cokernel_orders

use bpuverify::symfun::{coker_suite, AlphaGenerators, SymmetricContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = SymmetricContext::new(4);
    let a = AlphaGenerators::new(&ctx);
    let cases = [
        ("1", ctx.sigma_ring().one()),
        ("α4", a.a4.clone()),
        ("α6", a.a6.clone()),
        ("α4·α6", &a.a4 * &a.a6),
        ("σ1", ctx.sigma(1)?),
    ];
    for (name, f) in &cases {
        println!("order of {name} in coker ∇: {}", ctx.coker_order(f)?);
    }
    print!("{}", coker_suite().to_text());
    Ok(())
}
