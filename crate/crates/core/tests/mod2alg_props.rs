use std::sync::Arc;

use bpuverify::mod2alg::{
    toda_hilbert_series, AlgebraLibrary, AlgebraMap, Mod2Error, PresentedAlgebra, SquareRule, SteenrodAction,
};
use bpuverify::poly::{monomial_basis, Polynomial};
use proptest::prelude::*;

/// A homogeneous element of degree `d`: the basis elements picked by `mask`.
fn element(alg: &PresentedAlgebra, d: u32, mask: u64) -> Polynomial {
    alg.basis(d)
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> (k % 64) & 1 == 1)
        .fold(alg.ring().zero(), |acc, (_, m)| &acc + &alg.monomial_element(m))
}

/// An arbitrary (not reduced) polynomial in the ring of `alg`.
fn raw(alg: &PresentedAlgebra, exps: &[Vec<u32>]) -> Polynomial {
    let r = alg.ring();
    exps.iter().fold(r.zero(), |acc, e| {
        let mut e = e.clone();
        e.resize(r.nvars(), 0);
        &acc + &r.term(1, r.monomial(e))
    })
}

fn toda() -> Arc<PresentedAlgebra> {
    AlgebraLibrary::builtin().get("toda").unwrap()
}

fn cartan_holds(action: &SteenrodAction, a: &Polynomial, b: &Polynomial, k: u32) -> bool {
    let alg = action.algebra();
    let lhs = action.sq(k, &(a * b)).unwrap();
    let rhs = (0..=k).fold(alg.ring().zero(), |acc, i| {
        &acc + &(&action.sq(i, a).unwrap() * &action.sq(k - i, b).unwrap())
    });
    lhs == alg.normal_form(&rhs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_a_congruence(
        a in prop::collection::vec(prop::collection::vec(0u32..3, 6), 0..5),
        b in prop::collection::vec(prop::collection::vec(0u32..3, 6), 0..5),
    ) {
        let t = toda();
        let (a, b) = (raw(&t, &a), raw(&t, &b));
        let (na, nb) = (t.normal_form(&a), t.normal_form(&b));
        prop_assert_eq!(t.normal_form(&na), na.clone());
        prop_assert!(na.monomials().all(|m| t.is_normal(m)));
        prop_assert_eq!(t.normal_form(&(&a * &b)), t.normal_form(&(&na * &nb)));
        prop_assert_eq!(t.normal_form(&(&a + &b)), &na + &nb);
    }

    #[test]
    fn cartan_formula_on_toda(da in 2u32..14, db in 2u32..14, ma in any::<u64>(), mb in any::<u64>(), k in 0u32..10) {
        let lib = AlgebraLibrary::builtin();
        let action = lib.action("toda").unwrap();
        let t = action.algebra().clone();
        let (a, b) = (element(&t, da, ma), element(&t, db, mb));
        prop_assert!(cartan_holds(&action, &a, &b, k));
    }

    #[test]
    fn cartan_formula_on_stiefel_whitney(da in 2u32..10, db in 2u32..10, ma in any::<u64>(), mb in any::<u64>(), k in 0u32..8) {
        let action = AlgebraLibrary::builtin().action("bso6").unwrap();
        let alg = action.algebra().clone();
        let (a, b) = (element(&alg, da, ma), element(&alg, db, mb));
        prop_assert!(cartan_holds(&action, &a, &b, k));
    }

    #[test]
    fn instability(d in 1u32..16, m in any::<u64>(), extra in 1u32..4) {
        let action = AlgebraLibrary::builtin().action("toda").unwrap();
        let t = action.algebra().clone();
        let x = element(&t, d, m);
        prop_assert_eq!(action.sq(0, &x).unwrap(), x.clone());
        prop_assert_eq!(action.sq(d, &x).unwrap(), t.normal_form(&x.pow(2)));
        prop_assert!(action.sq(d + extra, &x).unwrap().is_zero());
    }

    #[test]
    fn low_adem_relations(d in 2u32..14, m in any::<u64>()) {
        for name in ["toda", "bso6"] {
            let action = AlgebraLibrary::builtin().action(name).unwrap();
            let x = element(action.algebra(), d, m);
            let sq = |i, p: &Polynomial| action.sq(i, p).unwrap();
            prop_assert!(sq(1, &sq(1, &x)).is_zero());
            prop_assert_eq!(sq(1, &sq(2, &x)), sq(3, &x));
            prop_assert_eq!(sq(2, &sq(2, &x)), sq(3, &sq(1, &x)));
            prop_assert_eq!(sq(2, &sq(3, &x)), &sq(5, &x) + &sq(4, &sq(1, &x)));
        }
    }

    #[test]
    fn maps_commute_with_squares(d in 2u32..16, m in any::<u64>(), i in prop::sample::select(vec![1u32, 2, 3, 4, 6, 8])) {
        let lib = AlgebraLibrary::builtin();
        let src = lib.action("toda").unwrap();
        let x = element(src.algebra(), d, m);
        for t in ["bu4", "bso6", "bso3"] {
            let f = lib.map("toda", t).unwrap();
            let tgt = lib.action(t).unwrap();
            prop_assert_eq!(f.apply(&src.sq(i, &x).unwrap()).unwrap(), tgt.sq(i, &f.apply(&x).unwrap()).unwrap());
        }
    }
}

/// Independent count: monomials in y2, y3, y5, y8, y9, y12 of degree d divisible
/// by none of y2y3, y2y5, y2y9, y9².
fn toda_dimension_by_count(d: u32) -> usize {
    monomial_basis(d, &[2, 3, 5, 8, 9, 12])
        .monomials
        .iter()
        .filter(|m| {
            let e = m.exps();
            let y2 = e[0] > 0;
            !(y2 && (e[1] > 0 || e[2] > 0 || e[4] > 0)) && e[4] < 2
        })
        .count()
}

#[test]
fn toda_dimensions_match_independent_count() {
    let t = toda();
    let series = toda_hilbert_series(24);
    for d in 0..=24u32 {
        let n = toda_dimension_by_count(d);
        assert_eq!(t.dimension(d), n, "d={d}");
        assert_eq!(series[d as usize], n as i64, "d={d}");
    }
}

#[test]
fn map_certification_accepts_and_rejects() {
    let lib = AlgebraLibrary::builtin();
    let w = lib.get("w").unwrap();
    let t = lib.get("toda").unwrap();
    let good = [("x2", "y2"), ("x3", "y3"), ("x5", "y5"), ("x8", "y8 + y3*y5"), ("x9", "y9"), ("x12", "y12 + y3*y9")];
    assert!(AlgebraMap::new("w->toda", w.clone(), t.clone(), &good).is_ok());
    // dropping the correction term in x12 breaks the quartic relation
    let bad = [("x2", "y2"), ("x3", "y3"), ("x5", "y5"), ("x8", "y8 + y3*y5"), ("x9", "y9"), ("x12", "y12")];
    assert!(matches!(
        AlgebraMap::new("w->toda", w, t, &bad),
        Err(Mod2Error::NotWellDefined { .. })
    ));
}

#[test]
fn uncertified_maps_refuse_to_apply() {
    let a = Arc::new(PresentedAlgebra::free("a", &[("u", 1)]));
    let b = Arc::new(PresentedAlgebra::free("b", &[("t", 1)]));
    let m = AlgebraMap::unchecked("a->b", a, b, &[("u", "t")]).unwrap();
    assert!(matches!(m.apply_str("u"), Err(Mod2Error::Uncertified(_))));
}

#[test]
fn wu_formula_small_cases() {
    let alg = Arc::new(PresentedAlgebra::free("bso", &[("w4", 4), ("w3", 3), ("w2", 2)]));
    let a = SteenrodAction::new(alg, SquareRule::StiefelWhitney);
    assert_eq!(a.sq_str(1, "w2").unwrap().to_string(), "w3");
    assert_eq!(a.sq_str(1, "w3").unwrap().to_string(), "0");
    assert_eq!(a.sq_str(2, "w4").unwrap().to_string(), "w4*w2");
    assert_eq!(a.sq_str(1, "w4").unwrap().to_string(), "0");
}
