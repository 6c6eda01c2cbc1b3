//! The term-map representation shared by Weyl elements and commutative
//! polynomials, and the [`Algebra`] trait the Gröbner engine is generic over.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::order::{Degree, ExpPair, OrderSpec, Weight};
use crate::Rational;

/// Exponent pair → nonzero coefficient, iterated in exponent-lex order.
pub type TermMap = BTreeMap<ExpPair, Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Weyl,
    Commutative,
}

/// `acc += c · src`, dropping cancelled coefficients.
pub(crate) fn add_scaled(acc: &mut TermMap, src: &TermMap, c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (e, v) in src {
        add_term(acc, e.clone(), v * c);
    }
}

pub fn add_term(acc: &mut TermMap, e: ExpPair, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match acc.entry(e) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Arithmetic needed by the division and Buchberger procedures.
///
/// Implementors keep their terms in canonical form: no zero coefficients and
/// all exponents of arity [`Algebra::arity`].
pub trait Algebra: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    const KIND: RingKind;

    fn arity(&self) -> usize;

    fn terms(&self) -> &TermMap;

    /// Wraps a term map; zero coefficients must already be absent.
    fn from_terms(n: usize, terms: TermMap) -> Self;

    fn mul(&self, other: &Self) -> Self;

    /// `c · x^e · self`, where `x^e` is the normal monomial with exponent `e`.
    fn mul_monomial_left(&self, e: &ExpPair, c: &Rational) -> Self;

    fn zero(n: usize) -> Self {
        Self::from_terms(n, TermMap::new())
    }

    fn one(n: usize) -> Self {
        Self::monomial(ExpPair::zero(n), Rational::one())
    }

    fn monomial(e: ExpPair, c: Rational) -> Self {
        let n = e.arity();
        let mut terms = TermMap::new();
        add_term(&mut terms, e, c);
        Self::from_terms(n, terms)
    }

    fn is_zero(&self) -> bool {
        self.terms().is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut t = self.terms().clone();
        add_scaled(&mut t, other.terms(), &Rational::one());
        Self::from_terms(self.arity(), t)
    }

    fn sub(&self, other: &Self) -> Self {
        let mut t = self.terms().clone();
        add_scaled(&mut t, other.terms(), &-Rational::one());
        Self::from_terms(self.arity(), t)
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity());
        }
        Self::from_terms(
            self.arity(),
            self.terms().iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        )
    }

    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Exponents of the nonzero terms.
    fn support(&self) -> Vec<ExpPair> {
        self.terms().keys().cloned().collect()
    }

    /// The greatest term under `order`, or `None` for zero.
    fn leading_term(&self, order: &OrderSpec) -> Option<(&ExpPair, &Rational)> {
        self.terms()
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    fn leading_exponent(&self, order: &OrderSpec) -> Option<ExpPair> {
        self.leading_term(order).map(|(e, _)| e.clone())
    }

    /// Maximal `ν`-weight over the support; `−∞` for zero.
    fn weighted_degree(&self, nu: &Weight) -> Degree {
        self.terms()
            .keys()
            .map(|e| nu.degree_of(e))
            .max()
            .map_or(Degree::NegInf, Degree::Finite)
    }

    /// Scales so that the leading coefficient under `order` is 1.
    fn monic(&self, order: &OrderSpec) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }
}
