use bpuverify::intlinalg::{
    cokernel_invariants, element_order_in_cokernel, integer_kernel, rank_mod_p, smith_normal_form, ElementOrder,
    IntMatrix,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..10, c), r))
}

proptest! {
    #[test]
    fn snf_is_a_unimodular_diagonalisation(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert_eq!(&s.u().mul(&a).mul(s.v()), s.d());
        prop_assert_eq!(s.u().determinant().abs(), BigInt::one());
        prop_assert_eq!(s.v().determinant().abs(), BigInt::one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive() && (&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d().rows() {
            for j in 0..s.d().cols() {
                if i != j {
                    prop_assert!(s.d()[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let k = integer_kernel(&a);
        prop_assert_eq!(k.len() + smith_normal_form(&a).rank(), a.cols());
        for v in &k {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_mod_p_counts_factors_prime_to_p(rows in matrix(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let a = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        let expected = s.invariant_factors().iter().filter(|f| !(*f % p).is_zero()).count();
        prop_assert_eq!(rank_mod_p(&a, p).unwrap(), expected);
    }

    #[test]
    fn element_order_kills_the_element(rows in matrix(), x in prop::collection::vec(-9i64..10, 4)) {
        let a = IntMatrix::from_rows(&rows);
        let x: Vec<BigInt> = x.into_iter().take(a.rows()).map(BigInt::from).collect();
        if x.len() != a.rows() {
            return Ok(());
        }
        // order k: k·x lies in the column span, (k/q)·x does not for any prime q | k
        if let ElementOrder::Finite(k) = element_order_in_cokernel(&a, &x).unwrap() {
            let kx: Vec<BigInt> = x.iter().map(|c| c * &k).collect();
            prop_assert_eq!(element_order_in_cokernel(&a, &kx).unwrap(), ElementOrder::Finite(BigInt::one()));
            let mut q = BigInt::from(2);
            while q <= k {
                if k.is_multiple_of(&q) {
                    let sx: Vec<BigInt> = x.iter().map(|c| c * (&k / &q)).collect();
                    prop_assert_ne!(element_order_in_cokernel(&a, &sx).unwrap(), ElementOrder::Finite(BigInt::one()));
                }
                q += 1;
            }
        }
    }
}

#[test]
fn cokernel_of_diagonal() {
    let a = IntMatrix::from_rows(&[vec![4, 0], vec![0, 6]]);
    assert_eq!(cokernel_invariants(&a), vec![BigInt::from(2), BigInt::from(12)]);
}
