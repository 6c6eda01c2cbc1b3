#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use weylcone::algebra::add_term;
use weylcone::{Algebra, ExpPair, PolyX, Rational, TermMap, Weight, WeylElement};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn element_from(n: usize, terms: Vec<(Vec<u32>, i64, i64)>) -> WeylElement {
    let mut map = TermMap::new();
    for (exps, num, den) in terms {
        add_term(&mut map, ExpPair::from_flat(exps), q(num, den));
    }
    WeylElement::from_terms(n, map)
}

/// Up to `max_terms` terms, exponents `≤ max_exp`, coefficients `a/b` with
/// `|a| ≤ 5`, `1 ≤ b ≤ 3`.
pub fn arb_weyl(n: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = WeylElement> {
    proptest::collection::vec(
        (
            proptest::collection::vec(0..=max_exp, 2 * n),
            -5i64..=5,
            1i64..=3,
        ),
        0..=max_terms,
    )
    .prop_map(move |ts| element_from(n, ts))
}

pub fn arb_weight(n: usize, max: u64) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(0..=max, 2 * n).prop_map(|v| Weight::new(v).unwrap())
}

pub fn arb_region_weight(n: usize, max: u64) -> impl Strategy<Value = Weight> {
    arb_weight(n, max).prop_filter("in Ω", Weight::is_in_region)
}

pub fn random_weyl<R: Rng>(rng: &mut R, n: usize, max_terms: usize, max_exp: u32) -> WeylElement {
    let k = rng.gen_range(0..=max_terms);
    let terms = (0..k)
        .map(|_| {
            (
                (0..2 * n).map(|_| rng.gen_range(0..=max_exp)).collect(),
                rng.gen_range(-5..=5),
                rng.gen_range(1..=3),
            )
        })
        .collect();
    element_from(n, terms)
}

pub fn random_weight<R: Rng>(rng: &mut R, n: usize, max: u64) -> Weight {
    Weight::new((0..2 * n).map(|_| rng.gen_range(0..=max)).collect()).unwrap()
}

/// All `α ∈ ℕ₀ⁿ` with `|α| ≤ max`.
pub fn multi_indices(n: usize, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for head in 0..=max {
        for mut tail in multi_indices(n - 1, max - head) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// `apply(uv, x^α) = apply(u, apply(v, x^α))` for all `|α| ≤ max`.
pub fn action_agrees(u: &WeylElement, v: &WeylElement, max: u32) -> bool {
    let n = u.arity();
    let uv = u.mul(v);
    multi_indices(n, max).into_iter().all(|alpha| {
        let p = PolyX::monomial(alpha);
        uv.apply(&p).unwrap() == u.apply(&v.apply(&p).unwrap()).unwrap()
    })
}

pub fn polyx(n: usize, terms: &[(Vec<u32>, i64)]) -> PolyX {
    let mut m = BTreeMap::new();
    for (a, c) in terms {
        m.insert(a.clone(), q(*c, 1));
    }
    PolyX::new(n, m).unwrap()
}
