mod common;

use colombeau::expr::{eval_str, parse, Value};
use colombeau::gennum::default_window;
use colombeau::json::{gennum_from_json, gennum_to_json, quaternion_from_json, quaternion_to_json};
use colombeau::scalar::rat;
use colombeau::{Error, GenNumber};
use common::{quaternion, real_or_complex};
use proptest::prelude::*;

fn with_order(x: GenNumber, order: Option<(i64, i64)>) -> GenNumber {
    match order {
        Some((n, d)) => x + GenNumber::big_o(rat(n, d)),
        None => x,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn numbers_round_trip(x in real_or_complex(), order in proptest::option::of((-2i64..8, 1i64..4))) {
        let x = with_order(x, order);
        let text = x.to_string();
        prop_assert_eq!(eval_str(&text, &default_window()).unwrap(), Value::Num(x.clone()), "{}", text);
        prop_assert_eq!(gennum_from_json(&gennum_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn quaternions_round_trip(q in quaternion()) {
        let text = q.to_string();
        prop_assert_eq!(eval_str(&text, &default_window()).unwrap(), Value::Quat(q.clone()), "{}", text);
        let json = quaternion_to_json(&q);
        prop_assert_eq!(&quaternion_to_json(&q), &json);
        prop_assert_eq!(quaternion_from_json(&json).unwrap(), q);
    }

    #[test]
    fn garbage_is_rejected_with_an_offset(text in "[0-9a-z+*/()^;{}\\[\\] -]{0,12}") {
        match parse(&text) {
            Ok(_) => {}
            Err(Error::Syntax { offset, expected }) => {
                prop_assert!(offset <= text.len());
                prop_assert!(!expected.is_empty());
            }
            Err(other) => {
                // malformed chi literals surface their constructor error
                prop_assert!(text.contains("chi"), "{:?}", other);
            }
        }
    }
}
