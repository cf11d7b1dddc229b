mod common;

use colombeau::conformance::{mesh_oracle_agrees, oracle_config};
use colombeau::gennum::default_window;
use colombeau::scalar::{int, rat};
use colombeau::testing::random_gennum_with_period;
use colombeau::{Classification, Coeff, ExtRational, GenNumber, Negligibility, QPositivity};
use common::{gennum, real_or_complex, rng};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = num_rational::BigRational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(x in real_or_complex(), y in real_or_complex(), z in real_or_complex()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &GenNumber::zero(), x.clone());
        prop_assert_eq!(&x * &GenNumber::one(), x.clone());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn ultrametric(x in real_or_complex(), y in real_or_complex(), z in real_or_complex()) {
        let bound = x.distance(&y).value.min(y.distance(&z).value);
        prop_assert!(x.distance(&z).value >= bound);
    }

    #[test]
    fn submultiplicative(x in real_or_complex(), y in real_or_complex(), r in small_rational(), c in 1i64..5) {
        let sum = &x.valuation().value + &y.valuation().value;
        prop_assert!((&x * &y).valuation().value >= sum);
        let monomial = GenNumber::alpha(r.clone()).scale(&Coeff::from_int(c));
        prop_assert_eq!((&monomial * &x).valuation().value, &ExtRational::Finite(r) + &x.valuation().value);
    }

    #[test]
    fn order_laws(x in gennum(), y in gennum()) {
        let pos = |v: &GenNumber| v.is_qpositive().unwrap() == QPositivity::Yes;
        if pos(&x) && pos(&-&x) {
            prop_assert_eq!(x.is_negligible(), Negligibility::Yes);
        }
        if pos(&x) && pos(&y) {
            prop_assert!(pos(&(&x + &y)));
            prop_assert!(pos(&(&x * &y)));
        }
        let a = x.abs().unwrap();
        prop_assert!(pos(&(&a - &x)));
        prop_assert!(pos(&(&a + &x)));
        prop_assert!(pos(&a));
    }

    #[test]
    fn sqrt_of_square(x in gennum()) {
        let w = default_window();
        let root = (&x * &x).sqrt(&w).unwrap();
        let diff = &root - &x.abs().unwrap();
        let bound = x.valuation().value.add_rational(&w);
        prop_assert!(diff.valuation().value >= bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dichotomy(x in real_or_complex()) {
        let w = default_window();
        match x.classify(&w) {
            Classification::Unit { inverse } => {
                prop_assert!((&(&x * &inverse) - &GenNumber::one()).valuation().at_least(&w));
            }
            Classification::ZeroDivisor { witness } => {
                prop_assert!((&x * &witness).is_zero());
                prop_assert!(witness.is_idempotent() && !witness.is_zero());
            }
            Classification::Zero => prop_assert!(x.is_zero()),
            Classification::Indeterminate => prop_assert!(false, "exact input"),
        }
    }

    #[test]
    fn units_are_dense(x in real_or_complex(), n in small_rational()) {
        let u = x.unit_near(&n).unwrap();
        let is_unit = matches!(u.classify(&default_window()), Classification::Unit { .. });
        prop_assert!(is_unit);
        prop_assert!(u.distance(&x).at_least(&n));
        if x.zero_region().is_empty() {
            prop_assert_eq!(u, x);
        }
    }

    #[test]
    fn mesh_slopes_match_leading_exponents(seed in any::<u64>(), complex in any::<bool>()) {
        let mut r = rng(seed);
        let (period, cfg) = oracle_config(&mut r);
        let cfg = colombeau::testing::GenConfig { complex, ..cfg };
        let x = random_gennum_with_period(&mut r, period, &cfg);
        prop_assert!(mesh_oracle_agrees(&[x.clone()]), "{}", x);
    }
}

#[test]
fn alpha_norm() {
    let v = GenNumber::alpha(int(2)).sharp_norm();
    assert_eq!(v.value, ExtRational::Finite(int(2)));
    assert_eq!(v.display(), "0.135335");
}
