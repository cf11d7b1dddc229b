mod common;

use colombeau::gennum::default_window;
use colombeau::holo::{GenPolynomial, IdentityVerdict, QuadraticVerdict};
use colombeau::scalar::int;
use colombeau::testing::{random_gennum, GenConfig};
use colombeau::{Classification, GenNumber};
use common::rng;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;

fn bounded() -> GenConfig {
    GenConfig { periods: vec![1, 2, 3], exponent_range: (0, 2), zero_probability: 0.4, complex: true, ..GenConfig::default() }
}

fn polynomial(r: &mut impl Rng) -> GenPolynomial {
    let degree = r.gen_range(1..=3);
    GenPolynomial::new((0..=degree).map(|_| random_gennum(r, &bounded())).collect())
}

fn sample() -> Vec<BigRational> {
    [1, 2, 5, 16].into_iter().map(int).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn taylor_consistency(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = polynomial(&mut r);
        let (z0, w) = (random_gennum(&mut r, &bounded()), random_gennum(&mut r, &bounded()));
        prop_assert_eq!(f.eval(&(&z0 + &w)), f.taylor_shift(&z0).eval(&w));
    }

    #[test]
    fn counterexamples_are_sound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = polynomial(&mut r);
        let z0 = random_gennum(&mut r, &bounded());
        let dense = f.cf_ideal(&z0).is_dense();
        match f.identity_check(&z0, &sample()).unwrap() {
            IdentityVerdict::DenseNecessaryConditionHolds => prop_assert!(dense),
            IdentityVerdict::Counterexample { idempotent, sequence, verified_n } => {
                prop_assert!(!dense);
                prop_assert_eq!(verified_n, sample());
                for n in sample() {
                    prop_assert!(f.verify_counterexample(&z0, &idempotent, &n).unwrap());
                    let xn = sequence.term(&n);
                    prop_assert!((&f.eval(&xn) - &f.eval(&z0)).is_zero());
                    let v = xn.distance(&z0);
                    prop_assert!(v.exact && v.value == colombeau::ExtRational::Finite(n.clone()));
                }
            }
        }
    }

    #[test]
    fn linear_solutions_are_unique(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = default_window();
        let a1 = GenNumber::one() + random_gennum(&mut r, &GenConfig { exponent_range: (1, 3), ..bounded() });
        let a0 = random_gennum(&mut r, &bounded());
        let z0 = random_gennum(&mut r, &bounded());
        let f = GenPolynomial::new(vec![a0.clone(), a1.clone()]);
        let Classification::Unit { inverse } = a1.classify(&w) else { panic!("1 + O(eps) is a unit") };
        // a0 + a1 z = f(z0)  ⇒  z = a1⁻¹ (f(z0) − a0)
        let z = &inverse * &(&f.eval(&z0) - &a0);
        prop_assert!(z.distance(&z0).at_least(&w));
        let verdict = f.quadratic_unique_solution_check(&z0, &w).unwrap();
        prop_assert_eq!(verdict, QuadraticVerdict::UniqueInUnitBall { ratio_valuation: None });
    }
}
