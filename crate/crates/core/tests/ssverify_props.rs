use bpuverify::poly::Polynomial;
use bpuverify::ssverify::{d3_image, h3_order, pullback, verify_chern_pullbacks, verify_e4_11_2, verify_e4_9_4};
use bpuverify::symfun::{AlphaGenerators, SymmetricContext};
use num_bigint::BigInt;
use proptest::prelude::*;

fn homogeneous(ctx: &SymmetricContext, d: u32, coeffs: &[i64]) -> Polynomial {
    let r = ctx.sigma_ring();
    ctx.basis(d)
        .monomials
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(r.zero(), |acc, (m, &c)| &acc + &r.term(c, r.monomial(m.exps().to_vec())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d3_image_is_nabla_on_the_expansion(d in 0u32..8, coeffs in prop::collection::vec(-7i64..8, 1..6)) {
        let ctx = SymmetricContext::new(4);
        let f = homogeneous(&ctx, d, &coeffs);
        let via_v = ctx.to_sigma(&ctx.nabla(&ctx.expand(&f).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(d3_image(&ctx, &f).unwrap().coefficient, via_v);
    }

    #[test]
    fn pullback_is_a_ring_map(a in prop::collection::vec(-7i64..8, 1..4), b in prop::collection::vec(-7i64..8, 1..4)) {
        let ctx = SymmetricContext::new(4);
        let (f, g) = (homogeneous(&ctx, 3, &a), homogeneous(&ctx, 2, &b));
        prop_assert_eq!(pullback(&(&f * &g)).unwrap(), &pullback(&f).unwrap() * &pullback(&g).unwrap());
    }
}

#[test]
fn h3_order_is_n() {
    for n in 1..=6 {
        assert_eq!(h3_order(n).unwrap(), BigInt::from(n));
    }
}

#[test]
fn verdicts_are_deterministic() {
    let strip = |mut r: bpuverify::report::VerificationReport| {
        r.elapsed_ms = 0;
        r
    };
    assert_eq!(strip(verify_e4_9_4().unwrap()), strip(verify_e4_9_4().unwrap()));
    assert_eq!(strip(verify_e4_11_2().unwrap()), strip(verify_e4_11_2().unwrap()));
    assert_eq!(strip(verify_chern_pullbacks().unwrap()), strip(verify_chern_pullbacks().unwrap()));
}

#[test]
fn alpha_pullbacks() {
    let ctx = SymmetricContext::new(4);
    let a = AlphaGenerators::new(&ctx);
    assert_eq!(pullback(&a.a2).unwrap().to_string(), "-4*c1p^2 + 16*c2p");
    let r = verify_chern_pullbacks().unwrap();
    assert!(r.passed(), "{}", r.to_text());
}
