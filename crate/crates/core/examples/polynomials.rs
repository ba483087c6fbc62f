//! Sparse polynomials with exact integer and modular coefficients.
//!
//! cargo run --example polynomials

use bpuverify::poly::{CoeffRing, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Ring::with_vars(CoeffRing::Integer, [("x", 1), ("y", 2)]);
    let f = r.parse("x^2 - 2*y")?;
    let g = r.parse("x^2 + 2*y")?;
    println!("f·g = {}", &f * &g);
    println!("f^3 = {}", f.pow(3));
    println!("∂f/∂x = {}", f.partial_derivative(0)?);

    // x ↦ 1 + t, y ↦ t^2
    let s = Ring::with_vars(CoeffRing::Integer, [("t", 1)]);
    let img = f.substitute_all(&s, &[s.parse("1 + t")?, s.parse("t^2")?])?;
    println!("f(1 + t, t^2) = {img}");

    let h = r.parse("3*x^4 + 4*x^2*y + 5*y^2")?;
    println!("{h} mod 2 = {}", h.reduce_coefficients(2)?);
    println!("degree-4 part of f·g + f = {}", (&(&f * &g) + &f).component(4));
    Ok(())
}
