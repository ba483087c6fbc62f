use bpuverify::poly::{CoeffRing, Polynomial, Ring};
use proptest::prelude::*;

fn ring(c: CoeffRing) -> Ring {
    Ring::with_vars(c, [("x", 1), ("y", 2), ("z", 3)])
}

fn poly(r: &Ring, terms: &[(i64, [u32; 3])]) -> Polynomial {
    terms
        .iter()
        .fold(r.zero(), |acc, (c, e)| &acc + &r.term(*c, r.monomial(e.to_vec())))
}

fn terms() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
    prop::collection::vec((-20i64..20, [0u32..4, 0u32..3, 0u32..3]), 0..6)
}

proptest! {
    #[test]
    fn ring_axioms(a in terms(), b in terms(), c in terms()) {
        let r = ring(CoeffRing::Integer);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &r.zero());
    }

    #[test]
    fn display_round_trips(a in terms()) {
        let r = ring(CoeffRing::Integer);
        let a = poly(&r, &a);
        prop_assert_eq!(r.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in terms(), b in terms(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let r = ring(CoeffRing::Integer);
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        let red = |f: &Polynomial| f.reduce_coefficients(p).unwrap();
        prop_assert_eq!(red(&(&a * &b)), &red(&a) * &red(&b));
        prop_assert_eq!(red(&(&a + &b)), &red(&a) + &red(&b));
    }

    #[test]
    fn substitution_is_a_homomorphism(a in terms(), b in terms(), imgs in prop::collection::vec(terms(), 3)) {
        let r = ring(CoeffRing::Integer);
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        let imgs: Vec<Polynomial> = imgs.iter().map(|t| poly(&r, t)).collect();
        let s = |f: &Polynomial| f.substitute_all(&r, &imgs).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn partial_derivative_is_a_derivation(a in terms(), b in terms(), i in 0usize..3) {
        let r = ring(CoeffRing::Integer);
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        let d = |f: &Polynomial| f.partial_derivative(i).unwrap();
        prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
    }

    #[test]
    fn components_sum_to_whole(a in terms()) {
        let r = ring(CoeffRing::Integer);
        let a = poly(&r, &a);
        let top = a.degree().unwrap_or(0);
        let sum = (0..=top).fold(r.zero(), |acc, d| &acc + &a.component(d));
        prop_assert_eq!(sum, a);
    }
}

#[test]
fn modular_coefficients_wrap() {
    let r = ring(CoeffRing::Modular(3));
    assert!(r.parse("3*x + 6*y").unwrap().is_zero());
    assert_eq!(r.parse("2*x").unwrap(), r.parse("-x").unwrap());
}

#[test]
fn pow_matches_repeated_product() {
    let r = ring(CoeffRing::Integer);
    let f = r.parse("x - 2*y + z").unwrap();
    assert_eq!(f.pow(4), &(&f * &f) * &(&f * &f));
    assert_eq!(f.pow(0), r.one());
}
