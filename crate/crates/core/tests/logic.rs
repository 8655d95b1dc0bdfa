mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use ruspini::semantics::{formula_forest, grid_tautology_oracle, is_tautology, lin_axiom};
use ruspini::{parse_formula, AssignmentClass, Forest, Logic};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn forest_and_grid_agree(seed in any::<u64>(), n in 1usize..=3, t in 2usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_formula(&mut rng, n, 4);
        let logic = Logic::finite(t).unwrap();
        prop_assert_eq!(is_tautology(&f, n, logic).unwrap(), grid_tautology_oracle(&f, n, t).unwrap());
    }

    #[test]
    fn value_one_depends_only_on_the_class(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let forest = Forest::new(n).unwrap();
        let f = random_formula(&mut rng, n, 5);
        let ff = formula_forest(&f, &forest).unwrap();
        for class in forest.nodes().iter().step_by(7) {
            let w = random_witness(&mut rng, class);
            prop_assert_eq!(&AssignmentClass::of_assignment(&w).unwrap(), class);
            prop_assert_eq!(f.eval(&w).unwrap().is_one(), ff.contains(class));
        }
    }
}

#[test]
fn ginf_tautologies_hold_in_every_finite_logic() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let f = random_formula(&mut rng, 3, 4);
        if is_tautology(&f, 3, Logic::Infinite).unwrap() {
            for t in 2..=6 {
                assert!(is_tautology(&f, 3, Logic::finite(t).unwrap()).unwrap(), "{f}");
            }
        }
    }
}

#[test]
fn known_tautologies_and_non_tautologies() {
    let cases = [
        ("(X1 -> X2) | (X2 -> X1)", true),
        ("X1 | ~X1", false),
        ("~X1 | ~~X1", true),
        ("~~X1 -> X1", false),
        ("X1 & (X1 -> X2) -> X2", true),
    ];
    for (text, expected) in cases {
        let f = parse_formula(text).unwrap();
        assert_eq!(is_tautology(&f, 2, Logic::Infinite).unwrap(), expected, "{text}");
    }
    let lin = lin_axiom(3);
    assert!(is_tautology(&lin, 3, Logic::finite(3).unwrap()).unwrap());
    assert!(grid_tautology_oracle(&lin, 3, 3).unwrap());
    assert!(!grid_tautology_oracle(&lin, 3, 4).unwrap());
}
