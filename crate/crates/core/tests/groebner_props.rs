mod common;

use common::{arb_region_weight, arb_weyl, random_weyl};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylcone::fan::random_orders;
use weylcone::groebner::{
    contains, divide, division_identity_holds, leading_term, reduced_groebner,
    satisfies_buchberger_criterion,
};
use weylcone::parse::parse_weyl;
use weylcone::{Algebra, OrderSpec, WeylElement};

fn w(s: &str) -> WeylElement {
    parse_weyl(s, 1).unwrap()
}

fn small_ideals() -> Vec<Vec<WeylElement>> {
    vec![
        vec![w("d^2 - x")],
        vec![w("x*d + 1")],
        vec![w("d^3 - x*d - 1")],
        vec![w("x^2*d - 1"), w("d^2")],
        vec![w("x*d^2 + d"), w("x^2*d - x")],
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_identity(f in arb_weyl(1, 5, 4), g in arb_weyl(1, 3, 3), h in arb_weyl(1, 3, 3)) {
        let divisors: Vec<_> = [g, h].into_iter().filter(|x| !x.is_zero()).collect();
        let o = OrderSpec::lex(1).refine(&weylcone::Weight::ones(1)).unwrap();
        let d = divide(&f, &divisors, &o);
        prop_assert!(division_identity_holds(&f, &divisors, &d));
    }

    #[test]
    fn leading_term_is_multiplicative(u in arb_weyl(2, 4, 3), v in arb_weyl(2, 4, 3), om in arb_region_weight(2, 4)) {
        prop_assume!(!u.is_zero() && !v.is_zero());
        let o = OrderSpec::lex(2).refine(&om).unwrap();
        let (eu, _) = leading_term(&o, &u).unwrap();
        let (ev, _) = leading_term(&o, &v).unwrap();
        let (euv, _) = leading_term(&o, &u.mul(&v)).unwrap();
        prop_assert_eq!(euv, eu.add(&ev));
    }

    #[test]
    fn symbols_of_a_weighted_basis_form_a_basis(om in arb_region_weight(1, 6), idx in 0usize..5) {
        let gens = &small_ideals()[idx];
        let base = OrderSpec::lex(1);
        let gb = reduced_groebner(gens, &base.refine(&om).unwrap());
        let symbols: Vec<_> = gb.elements.iter().map(|b| b.symbol(&om).unwrap()).collect();
        prop_assert!(satisfies_buchberger_criterion(&symbols, &base));
    }
}

#[test]
fn random_left_combinations_reduce_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for gens in small_ideals() {
        for o in random_orders(1, 4, 9) {
            let gb = reduced_groebner(&gens, &o);
            assert!(satisfies_buchberger_criterion(&gb.elements, &o));
            for _ in 0..20 {
                let mut f = WeylElement::zero(1);
                for g in &gens {
                    f = f.add(&random_weyl(&mut rng, 1, 3, 3).mul(g));
                }
                assert!(contains(&gb, &f));
            }
        }
    }
}

#[test]
fn basis_does_not_depend_on_generator_order() {
    for gens in small_ideals() {
        let mut rev = gens.clone();
        rev.reverse();
        for o in random_orders(1, 5, 21) {
            assert_eq!(reduced_groebner(&gens, &o), reduced_groebner(&rev, &o));
        }
    }
}

#[test]
fn reduced_bases_are_monic_and_interreduced() {
    for gens in small_ideals() {
        for o in random_orders(1, 5, 4) {
            let gb = reduced_groebner(&gens, &o);
            for (i, b) in gb.elements.iter().enumerate() {
                let (_, c) = leading_term(&o, b).unwrap();
                assert!(num_traits::One::is_one(&c));
                for (j, other) in gb.elements.iter().enumerate() {
                    if i != j {
                        let lt = leading_term(&o, other).unwrap().0;
                        assert!(b.support().iter().all(|e| !lt.divides(e)));
                    }
                }
            }
        }
    }
}
