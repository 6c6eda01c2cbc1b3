//! Commutative polynomials in `ℚ[X_1, …, X_n, Y_1, …, Y_n]`.

use std::fmt;

use num_traits::One;

use crate::algebra::{add_term, Algebra, RingKind, TermMap};
use crate::error::{Error, Result};
use crate::order::{Degree, ExpPair, Weight};
use crate::weyl::top_weight_part;
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    n: usize,
    terms: TermMap,
}

impl Poly {
    pub fn padd(&self, other: &Poly) -> Result<Poly> {
        self.same_arity(other)?;
        Ok(Algebra::add(self, other))
    }

    pub fn pmul(&self, other: &Poly) -> Result<Poly> {
        self.same_arity(other)?;
        Ok(Algebra::mul(self, other))
    }

    fn same_arity(&self, other: &Poly) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// `τ^ν(p)`: the terms of maximal `ν`-weight.
    pub fn tau_initial(&self, nu: &Weight) -> Result<Poly> {
        nu.ensure_arity(self.n)?;
        Ok(top_weight_part(self.n, &self.terms, nu))
    }

    pub fn deg_nu(&self, nu: &Weight) -> Result<Degree> {
        nu.ensure_arity(self.n)?;
        Ok(self.weighted_degree(nu))
    }

    /// `true` when every term has the same `ν`-weight.
    pub fn is_homogeneous(&self, nu: &Weight) -> bool {
        let mut degs = self.terms.keys().map(|e| nu.degree_of(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn variable_x(n: usize, i: usize) -> Poly {
        let mut exps = vec![0; 2 * n];
        exps[i] = 1;
        Self::monomial(ExpPair::from_flat(exps), Rational::one())
    }

    pub fn variable_y(n: usize, i: usize) -> Poly {
        let mut exps = vec![0; 2 * n];
        exps[n + i] = 1;
        Self::monomial(ExpPair::from_flat(exps), Rational::one())
    }
}

impl Algebra for Poly {
    const KIND: RingKind = RingKind::Commutative;

    fn arity(&self) -> usize {
        self.n
    }

    fn terms(&self) -> &TermMap {
        &self.terms
    }

    fn from_terms(n: usize, terms: TermMap) -> Self {
        debug_assert!(terms.keys().all(|e| e.arity() == n));
        Poly { n, terms }
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "arity mismatch in polynomial product");
        let mut acc = TermMap::new();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                add_term(&mut acc, e.add(f), c * d);
            }
        }
        Poly {
            n: self.n,
            terms: acc,
        }
    }

    fn mul_monomial_left(&self, e: &ExpPair, c: &Rational) -> Self {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(f, d)| (e.add(f), c * d))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_terms(
            &self.terms,
            &crate::parse::poly_names(self.n),
        ))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        parse_poly(s, 1).unwrap()
    }

    fn w(a: u64, b: u64) -> Weight {
        Weight::new(vec![a, b]).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("X+Y").pmul(&p("X-Y")).unwrap(), p("X^2-Y^2"));
        assert_eq!(p("3*X*Y-1/2").pmul(&p("1")).unwrap(), p("3*X*Y-1/2"));
        assert_eq!(p("X").pmul(&p("Y")).unwrap(), p("Y").pmul(&p("X")).unwrap());
        assert!(p("X").pmul(&parse_poly("X1", 2).unwrap()).is_err());
    }

    #[test]
    fn initial_forms() {
        assert_eq!(p("Y^2 - X").tau_initial(&w(1, 1)).unwrap(), p("Y^2"));
        assert_eq!(p("Y^2 - X^2").tau_initial(&w(1, 2)).unwrap(), p("Y^2"));
        let h = p("Y^2 - X");
        assert!(h.is_homogeneous(&w(2, 1)));
        assert_eq!(h.tau_initial(&w(2, 1)).unwrap(), h);
    }

    #[test]
    fn degrees() {
        assert_eq!(p("Y^2-X").deg_nu(&w(1, 1)).unwrap(), Degree::Finite(2));
        assert_eq!(Poly::zero(1).deg_nu(&w(1, 1)).unwrap(), Degree::NegInf);
        assert_eq!(p("X^5").deg_nu(&w(0, 1)).unwrap(), Degree::Finite(0));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((0u32..4, 0u32..4, -5i64..6), 0..5).prop_map(|ts| {
            let mut terms = TermMap::new();
            for (a, b, c) in ts {
                add_term(
                    &mut terms,
                    ExpPair::new(&[a], &[b]).unwrap(),
                    Rational::from_integer(c.into()),
                );
            }
            Poly::from_terms(1, terms)
        })
    }

    proptest! {
        #[test]
        fn tau_is_multiplicative(a in arb_poly(), b in arb_poly(), x in 0u64..4, y in 0u64..4) {
            let nu = w(x, y);
            let lhs = a.mul(&b).tau_initial(&nu).unwrap();
            let rhs = a.tau_initial(&nu).unwrap().mul(&b.tau_initial(&nu).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn tau_is_idempotent(a in arb_poly(), x in 0u64..4, y in 0u64..4) {
            let nu = w(x, y);
            let t = a.tau_initial(&nu).unwrap();
            prop_assert_eq!(t.tau_initial(&nu).unwrap(), t);
        }

        #[test]
        fn degree_is_additive(a in arb_poly(), b in arb_poly(), x in 0u64..4, y in 0u64..4) {
            let nu = w(x, y);
            let d = |q: &Poly| q.deg_nu(&nu).unwrap();
            let expect = match (d(&a), d(&b)) {
                (Degree::Finite(s), Degree::Finite(t)) => Degree::Finite(s + t),
                _ => Degree::NegInf,
            };
            prop_assert_eq!(d(&a.mul(&b)), expect);
        }
    }
}
