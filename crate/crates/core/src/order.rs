//! Exponent pairs, weight vectors and normal orderings.
//!
//! An exponent pair `(λ, μ)` is stored as one flat vector of length `2n`:
//! the first `n` entries are the exponents of `ξ_i` (or `X_i`), the last `n`
//! those of `∂_i` (or `Y_i`). Weyl elements and commutative polynomials share
//! this representation, so moving between `W` and `K[X, Y]` never touches the
//! exponent data.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest admissible weight entry.
pub const MAX_WEIGHT_ENTRY: u64 = (1 << 31) - 1;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpPair {
    exps: Vec<u32>,
}

impl ExpPair {
    pub fn new(lambda: &[u32], mu: &[u32]) -> Result<Self> {
        if lambda.len() != mu.len() {
            return Err(Error::Arity {
                expected: lambda.len(),
                found: mu.len(),
            });
        }
        if lambda.is_empty() {
            return Err(Error::usage("arity n must be at least 1"));
        }
        let mut exps = lambda.to_vec();
        exps.extend_from_slice(mu);
        Ok(ExpPair { exps })
    }

    /// Builds a pair from the flat `2n` layout.
    pub fn from_flat(exps: Vec<u32>) -> Self {
        assert!(
            !exps.is_empty() && exps.len() % 2 == 0,
            "flat exponent vector must have even positive length"
        );
        ExpPair { exps }
    }

    pub fn zero(n: usize) -> Self {
        ExpPair {
            exps: vec![0; 2 * n],
        }
    }

    pub fn arity(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn lambda(&self) -> &[u32] {
        &self.exps[..self.arity()]
    }

    pub fn mu(&self) -> &[u32] {
        &self.exps[self.arity()..]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &ExpPair) -> ExpPair {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        ExpPair {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// `self - other`, if `other` divides `self`.
    pub fn checked_sub(&self, other: &ExpPair) -> Option<ExpPair> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(ExpPair { exps })
    }

    pub fn divides(&self, other: &ExpPair) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExpPair) -> ExpPair {
        ExpPair {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Indices of the variables that occur with positive exponent.
    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for ExpPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.lambda(), self.mu())
    }
}

/// A weight vector in `ℕ₀^{2n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<u64>);

impl Weight {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() || entries.len() % 2 != 0 {
            return Err(Error::usage(format!(
                "a weight needs an even, positive number of entries (got {})",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|&&e| e > MAX_WEIGHT_ENTRY) {
            return Err(Error::usage(format!(
                "weight entry {e} exceeds {MAX_WEIGHT_ENTRY}"
            )));
        }
        Ok(Weight(entries))
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; 2 * n])
    }

    /// The total-degree weight `(1, …, 1)`.
    pub fn ones(n: usize) -> Self {
        Weight(vec![1; 2 * n])
    }

    pub fn arity(&self) -> usize {
        self.0.len() / 2
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Membership in `Ω`: `ω_i + ω_{n+i} > 0` for every `i`.
    pub fn is_in_region(&self) -> bool {
        let n = self.arity();
        (0..n).all(|i| self.0[i] + self.0[n + i] > 0)
    }

    pub fn ensure_region(&self) -> Result<()> {
        if self.is_in_region() {
            Ok(())
        } else {
            Err(Error::NotInRegion(self.clone()))
        }
    }

    pub fn ensure_arity(&self, n: usize) -> Result<()> {
        if self.arity() == n {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: n,
                found: self.arity(),
            })
        }
    }

    /// `self + s·other`, the weight on the half-line from `self` in direction `other`.
    pub fn shifted(&self, s: u64, other: &Weight) -> Result<Weight> {
        other.ensure_arity(self.arity())?;
        let entries = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                b.checked_mul(s)
                    .and_then(|p| p.checked_add(*a))
                    .filter(|&v| v <= MAX_WEIGHT_ENTRY)
                    .ok_or_else(|| Error::usage("weight entry overflow"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(entries))
    }

    pub fn scaled(&self, k: u64) -> Result<Weight> {
        Weight::zero(self.arity()).shifted(k, self)
    }

    /// `ν·(λ⃗μ)`; panics on `i64` overflow.
    pub fn degree_of(&self, e: &ExpPair) -> i64 {
        debug_assert_eq!(self.0.len(), e.exps.len());
        self.0
            .iter()
            .zip(&e.exps)
            .try_fold(0i64, |acc, (&w, &x)| {
                (w as i64)
                    .checked_mul(x as i64)
                    .and_then(|p| acc.checked_add(p))
            })
            .expect("weighted degree overflows i64")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;

    /// Comma-separated non-negative integers, e.g. `1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::usage(format!("bad weight entry {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(entries)
    }
}

/// Weighted degree that may be `−∞` (the degree of zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn weight_degree(nu: &Weight, e: &ExpPair) -> Result<i64> {
    nu.ensure_arity(e.arity())?;
    Ok(nu.degree_of(e))
}

/// A normal ordering: a chain of weight refinements (outermost first) broken
/// by a lexicographic order on the variables in `base` priority order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    n: usize,
    refinements: Vec<Weight>,
    base: Vec<usize>,
}

impl OrderSpec {
    /// Pure lex with `ξ_1 > … > ξ_n > ∂_1 > … > ∂_n`.
    pub fn lex(n: usize) -> Self {
        OrderSpec {
            n,
            refinements: Vec::new(),
            base: (0..2 * n).collect(),
        }
    }

    /// Lex with an explicit variable priority (a permutation of `0..2n`).
    pub fn lex_with(n: usize, base: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; 2 * n];
        if base.len() != 2 * n {
            return Err(Error::usage("base permutation must list every variable once"));
        }
        for &v in &base {
            if v >= 2 * n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::usage("base permutation must list every variable once"));
            }
        }
        Ok(OrderSpec {
            n,
            refinements: Vec::new(),
            base,
        })
    }

    /// Weight-then-lex chain from a list of weights (outermost first).
    pub fn weight_chain(n: usize, weights: Vec<Weight>) -> Result<Self> {
        for w in &weights {
            w.ensure_arity(n)?;
        }
        let mut order = OrderSpec::lex(n);
        order.refinements = weights;
        Ok(order)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn refinements(&self) -> &[Weight] {
        &self.refinements
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// The refined ordering that compares by `nu` first and then by `self`.
    pub fn refine(&self, nu: &Weight) -> Result<OrderSpec> {
        nu.ensure_arity(self.n)?;
        let mut refinements = Vec::with_capacity(self.refinements.len() + 1);
        refinements.push(nu.clone());
        refinements.extend(self.refinements.iter().cloned());
        Ok(OrderSpec {
            n: self.n,
            refinements,
            base: self.base.clone(),
        })
    }

    /// Same as [`OrderSpec::cmp`], with the arity validated.
    pub fn compare(&self, a: &ExpPair, b: &ExpPair) -> Result<Ordering> {
        for e in [a, b] {
            if e.arity() != self.n {
                return Err(Error::Arity {
                    expected: self.n,
                    found: e.arity(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Total order on exponent pairs of matching arity.
    pub fn cmp(&self, a: &ExpPair, b: &ExpPair) -> Ordering {
        for w in &self.refinements {
            match w.degree_of(a).cmp(&w.degree_of(b)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        for &v in &self.base {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Order[")?;
        for w in &self.refinements {
            write!(f, "{w} ")?;
        }
        write!(f, "lex{:?}]", self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(l: u32, m: u32) -> ExpPair {
        ExpPair::new(&[l], &[m]).unwrap()
    }

    fn w(v: &[u64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn zero_is_minimum_under_lex() {
        let lex = OrderSpec::lex(1);
        for l in 0..5 {
            for m in 0..5 {
                assert_ne!(lex.cmp(&e(0, 0), &e(l, m)), Ordering::Greater);
            }
        }
    }

    #[test]
    fn weight_tie_falls_back_to_lex() {
        let o = OrderSpec::lex(1).refine(&w(&[1, 2])).unwrap();
        // both weigh 2; lex puts ξ first
        assert_eq!(o.cmp(&e(2, 0), &e(0, 1)), Ordering::Greater);
        let swapped = OrderSpec::lex_with(1, vec![1, 0]).unwrap().refine(&w(&[1, 2])).unwrap();
        assert_eq!(swapped.cmp(&e(2, 0), &e(0, 1)), Ordering::Less);
    }

    #[test]
    fn weight_decides_before_lex() {
        let o = OrderSpec::lex(1).refine(&w(&[0, 1])).unwrap();
        assert_eq!(o.cmp(&e(3, 0), &e(0, 1)), Ordering::Less);
    }

    #[test]
    fn refine_composition_outermost_first() {
        let nu = w(&[1, 0]);
        let omega = w(&[0, 1]);
        let o = OrderSpec::lex(1).refine(&nu).unwrap().refine(&omega).unwrap();
        assert_eq!(o.refinements(), &[omega, nu]);
        // ω decides: ∂ beats ξ^5
        assert_eq!(o.cmp(&e(5, 0), &e(0, 1)), Ordering::Less);
        // ω ties, ν decides
        assert_eq!(o.cmp(&e(2, 1), &e(1, 1)), Ordering::Greater);
    }

    #[test]
    fn zero_refinement_is_lex() {
        let lex = OrderSpec::lex(2);
        let z = lex.refine(&Weight::zero(2)).unwrap();
        for a in 0..3u32 {
            for b in 0..3u32 {
                let x = ExpPair::new(&[a, b], &[b, 1]).unwrap();
                let y = ExpPair::new(&[b, a], &[1, a]).unwrap();
                assert_eq!(lex.cmp(&x, &y), z.cmp(&x, &y));
            }
        }
    }

    #[test]
    fn weight_degrees() {
        assert_eq!(weight_degree(&w(&[1, 1]), &e(2, 3)).unwrap(), 5);
        assert_eq!(weight_degree(&w(&[0, 0]), &e(7, 3)).unwrap(), 0);
        assert_eq!(weight_degree(&w(&[1, 2]), &e(3, 1)).unwrap(), 5);
        assert!(weight_degree(&w(&[1, 1, 1, 1]), &e(1, 1)).is_err());
    }

    #[test]
    fn region_membership() {
        assert!(w(&[0, 1]).is_in_region());
        assert!(!w(&[0, 0]).is_in_region());
        assert!(w(&[1, 0, 0, 1]).is_in_region());
        assert!(!w(&[1, 0, 0, 0]).is_in_region());
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let o = OrderSpec::lex(1);
        let x = ExpPair::new(&[1, 0], &[0, 0]).unwrap();
        assert!(matches!(
            o.compare(&e(1, 0), &x),
            Err(Error::Arity { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("1, 2".parse::<Weight>().unwrap(), w(&[1, 2]));
        assert!("1,2,3".parse::<Weight>().is_err());
        assert!("1,-2".parse::<Weight>().is_err());
        assert!("4294967296,1".parse::<Weight>().is_err());
    }

    #[test]
    fn degree_order_has_neg_inf_at_bottom() {
        assert!(Degree::NegInf < Degree::Finite(-100));
        assert_eq!(Degree::NegInf.to_string(), "-inf");
    }

    fn arb_exp(n: usize) -> impl Strategy<Value = ExpPair> {
        proptest::collection::vec(0u32..6, 2 * n).prop_map(ExpPair::from_flat)
    }

    fn arb_order(n: usize) -> impl Strategy<Value = OrderSpec> {
        (
            proptest::collection::vec(proptest::collection::vec(0u64..4, 2 * n), 0..3),
            Just((0..2 * n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(ws, perm)| {
                let mut o = OrderSpec::lex_with(n, perm).unwrap();
                for v in ws {
                    o = o.refine(&Weight::new(v).unwrap()).unwrap();
                }
                o
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn totality_and_antisymmetry(o in arb_order(2), a in arb_exp(2), b in arb_exp(2)) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }

        #[test]
        fn transitivity(o in arb_order(1), a in arb_exp(1), b in arb_exp(1), c in arb_exp(1)) {
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn compatible_with_addition(o in arb_order(2), a in arb_exp(2), b in arb_exp(2), c in arb_exp(2)) {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.add(&c), &b.add(&c)));
        }

        #[test]
        fn zero_is_least(o in arb_order(2), a in arb_exp(2)) {
            prop_assert_ne!(o.cmp(&ExpPair::zero(2), &a), Ordering::Greater);
        }

        #[test]
        fn refinement_is_definitional(o in arb_order(1), v in proptest::collection::vec(0u64..5, 2),
                                      a in arb_exp(1), b in arb_exp(1)) {
            let nu = Weight::new(v).unwrap();
            let r = o.refine(&nu).unwrap();
            if r.cmp(&a, &b) == Ordering::Less {
                let (da, db) = (nu.degree_of(&a), nu.degree_of(&b));
                prop_assert!(da < db || (da == db && o.cmp(&a, &b) == Ordering::Less));
            }
        }
    }
}
