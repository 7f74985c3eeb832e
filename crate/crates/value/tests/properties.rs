use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use pgal_value::{enumerate_fun_tables, parse_value, Carrier, Value};
use proptest::prelude::*;

fn arb_value() -> impl Strategy<Value = Value> {
    let leaf = prop_oneof![
        (-50i64..50).prop_map(Value::Int),
        any::<bool>().prop_map(Value::Bool),
    ];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(Value::Tuple),
            prop::collection::vec(inner.clone(), 0..=3).prop_map(Value::List),
            (
                prop::sample::select(vec!["None", "Some", "fset", "fn", "a_b1"]),
                prop::collection::vec(inner, 0..3)
            )
                .prop_map(|(n, args)| Value::cons(n, args)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn printer_and_parser_round_trip(v in arb_value()) {
        prop_assert_eq!(parse_value(&v.to_string()).unwrap(), v);
    }

    #[test]
    fn order_is_total_and_agrees_with_equality(a in arb_value(), b in arb_value()) {
        let ab = a.cmp(&b);
        prop_assert_eq!(ab, b.cmp(&a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_transitive(a in arb_value(), b in arb_value(), c in arb_value()) {
        let mut xs = [a, b, c];
        xs.sort();
        prop_assert!(xs[0] <= xs[2]);
    }

    #[test]
    fn enumeration_is_complete_and_distinct(d in 0usize..5, c in 0usize..5) {
        let dom = Arc::new(Carrier::ints("d", 0, d as i64 - 1));
        let cod = Arc::new(Carrier::ints("c", 0, c as i64 - 1));
        let expected = (c as u128).pow(d as u32);
        prop_assume!(expected <= 256);
        let tables = enumerate_fun_tables(&dom, &cod, 256).unwrap();
        prop_assert_eq!(tables.len() as u128, expected);
        let distinct: HashSet<_> = tables.iter().map(|t| t.outputs().to_vec()).collect();
        prop_assert_eq!(distinct.len(), tables.len());
        for t in &tables {
            for x in dom.elements() {
                prop_assert!(cod.contains(t.apply(x).unwrap()));
            }
        }
        let encoded: Vec<Value> = tables.iter().map(|t| t.to_value()).collect();
        prop_assert!(encoded.windows(2).all(|w| w[0] < w[1]));
    }
}
