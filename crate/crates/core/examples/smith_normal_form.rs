//! Smith normal form, integer kernels and element orders in a cokernel.
//!
//! cargo run --example smith_normal_form

use bpuverify::intlinalg::{cokernel_invariants, element_order_in_cokernel, integer_kernel, smith_normal_form, IntMatrix};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    let factors: Vec<String> = snf.invariant_factors().iter().map(ToString::to_string).collect();
    println!("invariant factors: {}", factors.join(", "));
    assert_eq!(snf.u().mul(&a).mul(snf.v()), *snf.d());

    let b = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
    for v in integer_kernel(&b) {
        println!("kernel vector: {v:?}");
    }

    let c = IntMatrix::from_rows(&[vec![4, 0], vec![0, 6]]);
    println!("coker invariants: {:?}", cokernel_invariants(&c));
    let x = [BigInt::from(2), BigInt::from(3)];
    println!("order of (2, 3): {}", element_order_in_cokernel(&c, &x)?);
    Ok(())
}
