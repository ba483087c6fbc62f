//! Graded GF(2) algebras given by generators and relations: Gröbner normal
//! forms, bases, dimensions, and certified maps between presentations.
//!
//! cargo run --example presented_algebra

use bpuverify::mod2alg::{toda_hilbert_series, AlgebraLibrary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lib = AlgebraLibrary::builtin();
    let toda = lib.get("toda")?;
    println!("relations:");
    for r in toda.relations() {
        println!("  {r}");
    }
    println!("Gröbner basis ({} S-pairs checked):", toda.certificate().s_pairs_checked);
    for g in toda.groebner_basis() {
        println!("  {g}");
    }
    println!("y9^2 ≡ {}", toda.parse("y9^2")?);

    let series = toda_hilbert_series(24);
    for d in 0..=24 {
        let basis: Vec<String> = toda.basis(d).iter().map(|m| toda.monomial_element(m).to_string()).collect();
        println!("d={d:2} dim {} (series {}): {}", basis.len(), series[d as usize], basis.join(", "));
    }

    // a small library in the text format, with a map checked for well-definedness
    let text = "algebra a\nu 1\nv 2\nrel u*v\nalgebra b\nt 1\nmap a -> b: u = t\nmap a -> b: v = 0\n";
    let small = AlgebraLibrary::parse(text)?;
    let f = small.map("a", "b")?;
    println!("F(u^3 + v) = {}", f.apply_str("u^3 + v")?);
    let bad = "algebra a\nu 1\nv 2\nrel u*v\nalgebra b\nt 1\nmap a -> b: u = t\nmap a -> b: v = t^2\n";
    println!("ill-defined map rejected: {}", AlgebraLibrary::parse(bad).unwrap_err());
    Ok(())
}
