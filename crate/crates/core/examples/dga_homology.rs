//! The differential graded algebra (W, D): differential, the chain homotopy P
//! between λ and the identity, and homology ranks.
//!
//! cargo run --example dga_homology [max_degree]

use bpuverify::dga::{homology_series, verify_dga, WAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map_or(Ok(24), |s| s.parse())?;
    let w = WAlgebra::new()?;
    for x in ["x5", "x9", "x5*x9", "x3^2*x9 + x5^3", "x2*x8"] {
        let p = w.parse(x)?;
        println!("D({x}) = {}   P({x}) = {}   λ({x}) = {}", w.differential(&p), w.homotopy(&p), w.lambda(&p));
    }
    let series = homology_series(max);
    for d in 0..=max {
        println!("H_{d} = {} (series {})", w.homology_dimension(d)?, series[d as usize]);
    }
    print!("{}", verify_dga(max)?.to_text());
    Ok(())
}
