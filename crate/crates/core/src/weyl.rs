//! Canonical-form arithmetic in the `n`-th Weyl algebra over ℚ.
//!
//! Elements are finite sums `Σ c ξ^λ ∂^μ` with every `ξ` written to the left
//! of every `∂`. The product of two normal monomials is expanded with the
//! closed formula
//!
//! ```text
//! ξ^a ∂^b · ξ^c ∂^d = Σ_k  Π_i k_i! C(b_i, k_i) C(c_i, k_i) · ξ^(a+c−k) ∂^(b+d−k)
//! ```
//!
//! which follows from `[∂_i, ξ_j] = δ_ij`. The action of `W` on `ℚ[x]` is
//! implemented independently in [`WeylElement::apply`] and serves as the
//! oracle for the product.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{add_scaled, add_term, Algebra, RingKind, TermMap};
use crate::error::{Error, Result};
use crate::order::{Degree, ExpPair, Weight};
use crate::poly::Poly;
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    terms: TermMap,
}

/// `k! C(b, k) C(c, k) = b! c! / (k! (b−k)! (c−k)!)`.
fn contraction_coefficient(b: u32, c: u32, k: u32) -> BigInt {
    let mut v = BigInt::one();
    // b!/(b−k)! · c!/(c−k)! / k!
    for j in 0..k {
        v *= BigInt::from(b - j) * BigInt::from(c - j);
    }
    let mut kf = BigInt::one();
    for j in 2..=k {
        kf *= BigInt::from(j);
    }
    v / kf
}

impl WeylElement {
    pub fn new(n: usize, terms: TermMap) -> Result<Self> {
        if let Some(e) = terms.keys().find(|e| e.arity() != n) {
            return Err(Error::Arity {
                expected: n,
                found: e.arity(),
            });
        }
        Ok(Self::from_terms(
            n,
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        ))
    }

    /// The generator `ξ_i` (0-based `i`).
    pub fn xi(n: usize, i: usize) -> Self {
        let mut exps = vec![0; 2 * n];
        exps[i] = 1;
        Self::monomial(ExpPair::from_flat(exps), Rational::one())
    }

    /// The generator `∂_i` (0-based `i`).
    pub fn d(n: usize, i: usize) -> Self {
        let mut exps = vec![0; 2 * n];
        exps[n + i] = 1;
        Self::monomial(ExpPair::from_flat(exps), Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(ExpPair::zero(n), c)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        Ok(Algebra::add(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        Ok(Algebra::mul(self, other))
    }

    fn same_arity(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// `[u, v] = uv − vu`.
    pub fn commutator(&self, other: &Self) -> Self {
        Algebra::sub(&Algebra::mul(self, other), &Algebra::mul(other, self))
    }

    /// `u^k`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = Algebra::mul(&acc, self);
        }
        acc
    }

    /// `deg^ω(w)`; `−∞` for zero.
    pub fn deg_omega(&self, omega: &Weight) -> Result<Degree> {
        omega.ensure_arity(self.n)?;
        Ok(self.weighted_degree(omega))
    }

    /// The `ω`-symbol: the top-`ω`-weight terms, transported to `ℚ[X, Y]`.
    pub fn symbol(&self, omega: &Weight) -> Result<Poly> {
        omega.ensure_arity(self.n)?;
        Ok(top_weight_part(self.n, &self.terms, omega))
    }

    /// The image of `p` under the differential operator `self`.
    pub fn apply(&self, p: &PolyX) -> Result<PolyX> {
        if p.n != self.n {
            return Err(Error::Arity {
                expected: self.n,
                found: p.n,
            });
        }
        let n = self.n;
        let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let (lam, mu) = (e.lambda(), e.mu());
            'terms: for (alpha, a) in &p.terms {
                let mut factor = BigInt::one();
                let mut exps = Vec::with_capacity(n);
                for i in 0..n {
                    if alpha[i] < mu[i] {
                        continue 'terms;
                    }
                    for j in 0..mu[i] {
                        factor *= BigInt::from(alpha[i] - j);
                    }
                    exps.push(alpha[i] - mu[i] + lam[i]);
                }
                let v = c * a * Rational::from_integer(factor);
                let slot = out.entry(exps).or_insert_with(Rational::zero);
                *slot += v;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(PolyX { n, terms: out })
    }
}

/// Sum of the terms of maximal `ω`-weight, as a commutative polynomial.
pub(crate) fn top_weight_part(n: usize, terms: &TermMap, omega: &Weight) -> Poly {
    let Some(top) = terms.keys().map(|e| omega.degree_of(e)).max() else {
        return Poly::zero(n);
    };
    Poly::from_terms(
        n,
        terms
            .iter()
            .filter(|(e, _)| omega.degree_of(e) == top)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect(),
    )
}

impl Algebra for WeylElement {
    const KIND: RingKind = RingKind::Weyl;

    fn arity(&self) -> usize {
        self.n
    }

    fn terms(&self) -> &TermMap {
        &self.terms
    }

    fn from_terms(n: usize, terms: TermMap) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        debug_assert!(terms.keys().all(|e| e.arity() == n));
        WeylElement { n, terms }
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "arity mismatch in Weyl product");
        let mut acc = TermMap::new();
        for (e, c) in &self.terms {
            let prod = other.mul_monomial_left(e, c);
            add_scaled(&mut acc, &prod.terms, &Rational::one());
        }
        WeylElement {
            n: self.n,
            terms: acc,
        }
    }

    fn mul_monomial_left(&self, e: &ExpPair, c: &Rational) -> Self {
        let n = self.n;
        let (a, b) = (e.lambda(), e.mu());
        let mut acc = TermMap::new();
        for (f, v) in &self.terms {
            let (cx, d) = (f.lambda(), f.mu());
            let kmax: Vec<u32> = (0..n).map(|i| b[i].min(cx[i])).collect();
            let mut k = vec![0u32; n];
            loop {
                let mut coeff = BigInt::one();
                let mut exps = vec![0u32; 2 * n];
                for i in 0..n {
                    coeff *= contraction_coefficient(b[i], cx[i], k[i]);
                    exps[i] = a[i] + cx[i] - k[i];
                    exps[n + i] = b[i] + d[i] - k[i];
                }
                add_term(
                    &mut acc,
                    ExpPair::from_flat(exps),
                    c * v * Rational::from_integer(coeff),
                );
                // odometer over 0 ≤ k ≤ kmax
                let mut i = 0;
                while i < n {
                    if k[i] < kmax[i] {
                        k[i] += 1;
                        break;
                    }
                    k[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        WeylElement { n, terms: acc }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_terms(
            &self.terms,
            &crate::parse::weyl_names(self.n),
        ))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weyl[{self}]")
    }
}

/// A polynomial in `ℚ[x_1, …, x_n]`, the module on which `W` acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyX {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyX {
    pub fn new(n: usize, terms: BTreeMap<Vec<u32>, Rational>) -> Result<Self> {
        if let Some(e) = terms.keys().find(|e| e.len() != n) {
            return Err(Error::Arity {
                expected: n,
                found: e.len(),
            });
        }
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(PolyX { n, terms })
    }

    /// `x^alpha`.
    pub fn monomial(alpha: Vec<u32>) -> Self {
        let n = alpha.len();
        let mut terms = BTreeMap::new();
        terms.insert(alpha, Rational::one());
        PolyX { n, terms }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
