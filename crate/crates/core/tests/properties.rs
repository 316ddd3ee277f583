use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ostar::expr::{parse_element, render_element};
use ostar::serial::{deserialize_element, deserialize_tensor, serialize_element, serialize_tensor};
use ostar::{delta, AlgebraElement, TensorElement};

fn element(seed: u64, max_component: u32, terms: usize) -> AlgebraElement {
    ostar::random::element(&mut ChaCha8Rng::seed_from_u64(seed), max_component, 3, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_parse_round_trip(seed in any::<u64>()) {
        let x = element(seed, 9, 4);
        let text = render_element(&x);
        let back = parse_element(&text).unwrap();
        prop_assert!(back.equals(&x), "{}", text);
        prop_assert_eq!(render_element(&back), text);
    }

    #[test]
    fn serialization_round_trip(seed in any::<u64>()) {
        let x = element(seed, 9, 4);
        prop_assert!(deserialize_element(&serialize_element(&x)).unwrap().structurally_eq(&x));
        let d = delta(&x);
        prop_assert!(deserialize_tensor::<2>(&serialize_tensor(&d)).unwrap().structurally_eq(&d));
    }

    #[test]
    fn canonical_form_is_a_normal_form(seed in any::<u64>()) {
        let x = element(seed, 5, 4);
        let cf = x.canonical_form();
        prop_assert!(cf.canonical_form().structurally_eq(&cf));
        let mut deeper = x.clone();
        for n in x.components() {
            deeper = deeper.expand_to_level(n, 4).unwrap();
        }
        prop_assert!(deeper.canonical_form().structurally_eq(&cf));
    }

    #[test]
    fn tensor_canonical_form_ignores_representation(seed in any::<u64>()) {
        let x = element(seed, 6, 3);
        let d = delta(&x);
        // the same tensor written through a product with units on both legs
        let units: TensorElement = x.components().into_iter()
            .flat_map(|n| delta(&AlgebraElement::unit(n).unwrap()).terms().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into_iter()
            .fold(TensorElement::zero(), |mut acc, (k, c)| { acc.add_term(k, &c); acc });
        let padded = units.mul(&d);
        prop_assert!(padded.canonical_form().structurally_eq(&d.canonical_form()));
    }

    #[test]
    fn adjoint_is_antimultiplicative(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (element(a, 4, 3), element(b, 4, 3));
        prop_assert!(x.mul(&y).adjoint().equals(&y.adjoint().mul(&x.adjoint())));
    }
}
