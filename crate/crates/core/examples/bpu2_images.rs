//! Images of the K(ℤ,3) classes in the cohomology of BPU(2), and the torsion
//! quotient ℤ[p1, W3]/(2W3).
//!
//! cargo run --example bpu2_images

use bpuverify::mod2alg::{bpu2::claimed_image, verify_bpu2_images, AlgebraLibrary, TorsionQuotient};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lib = AlgebraLibrary::builtin();
    let trunc = lib.get("bso3")?.quotient("bso3_mod_w3cubed", &["wp3^3"])?;
    for k in 0..=3 {
        println!("x_(2,{k}) ↦ {}", claimed_image(&trunc, k)?);
    }
    let q = TorsionQuotient::new(6);
    println!("in ℤ[p1,W3]/(2W3, W3^6): (p1·W3^2)^2 + 3·p1^2·W3 = {}", q.parse("p1^2*W3^4 + 3*p1^2*W3")?);
    print!("{}", verify_bpu2_images(3)?.to_text());
    Ok(())
}
