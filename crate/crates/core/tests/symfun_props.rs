use bpuverify::poly::Polynomial;
use bpuverify::symfun::{hilbert_coefficients, AlphaGenerators, SymmetricContext};
use bpuverify::series::rational_series;
use proptest::prelude::*;

fn sigma_poly(ctx: &SymmetricContext, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    let r = ctx.sigma_ring();
    terms.iter().fold(r.zero(), |acc, (c, e)| &acc + &r.term(*c, r.monomial(e.clone())))
}

fn terms(n: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-5i64..6, prop::collection::vec(0u32..3, n)), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nabla_on_sigmas_matches_expansion(t in terms(4)) {
        let ctx = SymmetricContext::new(4);
        let f = sigma_poly(&ctx, &t);
        let via_v = ctx.to_sigma(&ctx.nabla(&ctx.expand(&f).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(ctx.nabla_sigma(&f).unwrap(), via_v);
    }

    #[test]
    fn nabla_is_a_derivation(a in terms(4), b in terms(4)) {
        let ctx = SymmetricContext::new(4);
        let (a, b) = (sigma_poly(&ctx, &a), sigma_poly(&ctx, &b));
        let n = |f: &Polynomial| ctx.nabla_sigma(f).unwrap();
        prop_assert_eq!(n(&(&a * &b)), &(&n(&a) * &b) + &(&a * &n(&b)));
    }

    #[test]
    fn to_sigma_inverts_expand(t in terms(3)) {
        let ctx = SymmetricContext::new(3);
        let f = sigma_poly(&ctx, &t);
        prop_assert_eq!(ctx.to_sigma(&ctx.expand(&f).unwrap()).unwrap(), f);
    }
}

#[test]
fn relation_holds_in_the_v_variables() {
    let ctx = SymmetricContext::new(4);
    let a = AlphaGenerators::new(&ctx);
    let v: Vec<Polynomial> = a.all().iter().map(|x| ctx.expand(x).unwrap()).collect();
    let rel = &(&(&v[3].scale(64) - &v[0].pow(3)) - &v[1].pow(2).scale(27)) + &(&v[0] * &v[2]).scale(48);
    assert!(rel.is_zero());
    for x in &v {
        assert!(ctx.nabla(x).unwrap().is_zero());
    }
}

#[test]
fn two_variable_kernel() {
    let ctx = SymmetricContext::new(2);
    let series = rational_series(&[1], &[2], 12);
    for d in 0..=12u32 {
        assert_eq!(ctx.kernel_matrix(d).cols() as i64, series[d as usize], "d={d}");
    }
    let k = ctx.kernel_basis(2, 0).unwrap();
    let disc = ctx.sigma_ring().parse("s1^2 - 4*s2").unwrap();
    assert!(k == [disc.clone()] || k == [disc.scale(-1)]);
}

#[test]
fn three_variable_kernel_ranks() {
    let ctx = SymmetricContext::new(3);
    let series = rational_series(&[1], &[2, 3], 12);
    for d in 0..=12u32 {
        assert_eq!(ctx.kernel_matrix(d).cols() as i64, series[d as usize], "d={d}");
        assert_eq!(ctx.kernel_dim_mod_p(d, 101).unwrap() as i64, series[d as usize], "d={d}");
    }
}

#[test]
fn four_variable_kernel_ranks_match_series() {
    let ctx = SymmetricContext::new(4);
    let series = hilbert_coefficients(16);
    for d in 0..=16u32 {
        assert_eq!(ctx.kernel_matrix(d).cols() as i64, series[d as usize], "d={d}");
    }
}

#[test]
fn sigma_one_has_order_n_in_cokernel() {
    for n in 2..=5 {
        let ctx = SymmetricContext::new(n);
        assert_eq!(ctx.coker_order(&ctx.sigma_ring().one()).unwrap().to_string(), n.to_string());
    }
}
