mod common;

use common::{action_agrees, arb_region_weight, arb_weight, arb_weyl, polyx};
use proptest::prelude::*;
use weylcone::{Algebra, Degree, PolyX, Weight, WeylElement};

fn plus(a: Degree, b: Degree) -> Degree {
    match (a, b) {
        (Degree::Finite(x), Degree::Finite(y)) => Degree::Finite(x + y),
        _ => Degree::NegInf,
    }
}

fn min_pair(w: &Weight) -> i64 {
    let n = w.arity();
    (0..n)
        .map(|i| (w.entries()[i] + w.entries()[n + i]) as i64)
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_matches_action_w1(u in arb_weyl(1, 4, 4), v in arb_weyl(1, 4, 4)) {
        prop_assert!(action_agrees(&u, &v, 8));
    }

    #[test]
    fn product_matches_action_w2(u in arb_weyl(2, 3, 3), v in arb_weyl(2, 3, 3)) {
        prop_assert!(action_agrees(&u, &v, 5));
    }

    #[test]
    fn product_is_associative(u in arb_weyl(1, 3, 3), v in arb_weyl(1, 3, 3), w in arb_weyl(1, 3, 3)) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
    }

    #[test]
    fn product_distributes(u in arb_weyl(2, 3, 3), v in arb_weyl(2, 3, 3), w in arb_weyl(2, 3, 3)) {
        prop_assert_eq!(u.mul(&v.add(&w)), u.mul(&v).add(&u.mul(&w)));
    }

    #[test]
    fn degree_of_sum(u in arb_weyl(2, 4, 4), v in arb_weyl(2, 4, 4), w in arb_weight(2, 5)) {
        let (du, dv) = (u.deg_omega(&w).unwrap(), v.deg_omega(&w).unwrap());
        let ds = u.add(&v).deg_omega(&w).unwrap();
        prop_assert!(ds <= du.max(dv));
        if du != dv {
            prop_assert_eq!(ds, du.max(dv));
        }
    }

    #[test]
    fn degree_of_commutator(u in arb_weyl(2, 4, 4), v in arb_weyl(2, 4, 4), w in arb_region_weight(2, 5)) {
        let c = u.commutator(&v).deg_omega(&w).unwrap();
        if let Degree::Finite(dc) = c {
            let (Degree::Finite(du), Degree::Finite(dv)) = (u.deg_omega(&w).unwrap(), v.deg_omega(&w).unwrap()) else {
                panic!("nonzero commutator of a zero factor");
            };
            prop_assert!(dc <= du + dv - min_pair(&w));
        }
    }

    #[test]
    fn degree_of_product(u in arb_weyl(2, 4, 4), v in arb_weyl(2, 4, 4), w in arb_weight(2, 5)) {
        let d = u.mul(&v).deg_omega(&w).unwrap();
        prop_assert_eq!(d, plus(u.deg_omega(&w).unwrap(), v.deg_omega(&w).unwrap()));
    }

    #[test]
    fn symbol_is_multiplicative(u in arb_weyl(1, 4, 4), v in arb_weyl(1, 4, 4), w in arb_region_weight(1, 5)) {
        let lhs = u.mul(&v).symbol(&w).unwrap();
        let rhs = u.symbol(&w).unwrap().mul(&v.symbol(&w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn action_on_small_polynomials() {
    let d = WeylElement::d(1, 0);
    let x = WeylElement::xi(1, 0);
    let p = polyx(1, &[(vec![3], 1), (vec![1], 2)]);
    // d(x^3 + 2x) = 3x^2 + 2
    assert_eq!(d.apply(&p).unwrap(), polyx(1, &[(vec![2], 3), (vec![0], 2)]));
    // x(x^3 + 2x) = x^4 + 2x^2
    assert_eq!(x.apply(&p).unwrap(), polyx(1, &[(vec![4], 1), (vec![2], 2)]));
    assert!(d.apply(&PolyX::monomial(vec![0])).unwrap().is_zero());
}

#[test]
fn symbol_of_commutator_drops_in_degree() {
    // [d, x] = 1 while σ(d)σ(x) − σ(x)σ(d) = 0 in the commutative ring
    let w = Weight::new(vec![1, 1]).unwrap();
    let c = WeylElement::d(1, 0).commutator(&WeylElement::xi(1, 0));
    assert_eq!(c.deg_omega(&w).unwrap(), Degree::Finite(0));
}
