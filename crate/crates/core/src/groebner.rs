//! Division, Buchberger completion and reduced bases, generic over
//! [`Algebra`].
//!
//! In the Weyl algebra the leading exponent of `x^e · g` is `e + lt(g)`
//! under every normal ordering, because the correction terms of the product
//! have componentwise smaller exponents. The commutative S-pair construction
//! and the division step therefore carry over verbatim to left ideals; the
//! only ring-specific operation is left multiplication by a normal monomial.

use std::cmp::Ordering;

use crate::algebra::{add_term, Algebra, TermMap};
use crate::error::{Error, Result};
use crate::order::{Degree, ExpPair, OrderSpec, Weight};
use crate::poly::Poly;
use crate::weyl::WeylElement;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<A> {
    pub elements: Vec<A>,
    pub order: OrderSpec,
    pub reduced: bool,
}

impl<A: Algebra> GroebnerBasis<A> {
    pub fn leading_exponents(&self) -> Vec<ExpPair> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_exponent(&self.order))
            .collect()
    }

    /// `true` when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.leading_exponents().iter().any(ExpPair::is_zero)
    }
}

/// The graded order used to compare commutative ideals: total degree, then lex.
pub fn reference_order(n: usize) -> OrderSpec {
    OrderSpec::lex(n)
        .refine(&Weight::ones(n))
        .expect("arity matches")
}

pub fn leading_term<A: Algebra>(order: &OrderSpec, f: &A) -> Result<(ExpPair, Rational)> {
    if f.arity() != order.arity() {
        return Err(Error::Arity {
            expected: order.arity(),
            found: f.arity(),
        });
    }
    f.leading_term(order)
        .map(|(e, c)| (e.clone(), c.clone()))
        .ok_or_else(|| Error::usage("the zero element has no leading term"))
}

/// Result of a division with recorded quotients:
/// `f = Σ quotients[i] · divisors[i] + remainder`.
#[derive(Clone, Debug)]
pub struct Division<A> {
    pub remainder: A,
    pub quotients: Vec<A>,
}

fn lt_of(terms: &TermMap, order: &OrderSpec) -> Option<(ExpPair, Rational)> {
    terms
        .iter()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .map(|(e, c)| (e.clone(), c.clone()))
}

fn divide_impl<A: Algebra>(f: &A, divisors: &[A], order: &OrderSpec, record: bool) -> Division<A> {
    let n = f.arity();
    let leads: Vec<(ExpPair, Rational)> = divisors
        .iter()
        .map(|g| leading_term(order, g).expect("divisors must be nonzero"))
        .collect();
    let mut quotients: Vec<TermMap> = vec![TermMap::new(); if record { divisors.len() } else { 0 }];
    let mut p = f.terms().clone();
    let mut rem = TermMap::new();
    while let Some((e, c)) = lt_of(&p, order) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (l, lc))| e.checked_sub(l).map(|m| (i, m, lc)));
        match hit {
            Some((i, m, lc)) => {
                let q = c / lc;
                let prod = divisors[i].mul_monomial_left(&m, &q);
                for (pe, pc) in prod.terms() {
                    add_term(&mut p, pe.clone(), -pc.clone());
                }
                debug_assert!(!p.contains_key(&e), "leading term must cancel");
                if record {
                    add_term(&mut quotients[i], m, q);
                }
            }
            None => {
                p.remove(&e);
                rem.insert(e, c);
            }
        }
    }
    Division {
        remainder: A::from_terms(n, rem),
        quotients: quotients.into_iter().map(|t| A::from_terms(n, t)).collect(),
    }
}

/// Full left division of `f` by `divisors`; no term of the remainder is
/// divisible by a leading exponent of a divisor.
pub fn reduce<A: Algebra>(f: &A, divisors: &[A], order: &OrderSpec) -> A {
    divide_impl(f, divisors, order, false).remainder
}

/// Like [`reduce`] but keeps the quotients.
pub fn divide<A: Algebra>(f: &A, divisors: &[A], order: &OrderSpec) -> Division<A> {
    divide_impl(f, divisors, order, true)
}

/// `x^(L−lt f)·f/lc(f) − x^(L−lt g)·g/lc(g)` with `L = lcm(lt f, lt g)`.
pub fn s_element<A: Algebra>(f: &A, g: &A, order: &OrderSpec) -> A {
    let (ef, cf) = leading_term(order, f).expect("nonzero f");
    let (eg, cg) = leading_term(order, g).expect("nonzero g");
    let l = ef.lcm(&eg);
    let mf = l.checked_sub(&ef).expect("lcm is a multiple");
    let mg = l.checked_sub(&eg).expect("lcm is a multiple");
    let a = f.mul_monomial_left(&mf, &cf.recip());
    let b = g.mul_monomial_left(&mg, &cg.recip());
    a.sub(&b)
}

pub fn buchberger<A: Algebra>(gens: &[A], order: &OrderSpec) -> GroebnerBasis<A> {
    buchberger_observed(gens, order, &mut |_| {})
}

/// Buchberger completion; `observe` sees every element that enters the basis.
///
/// Pairs are processed smallest lcm first; no pair criteria are applied.
pub fn buchberger_observed<A: Algebra>(
    gens: &[A],
    order: &OrderSpec,
    observe: &mut dyn FnMut(&A),
) -> GroebnerBasis<A> {
    let mut basis: Vec<A> = Vec::new();
    let mut leads: Vec<ExpPair> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        assert_eq!(g.arity(), order.arity(), "generator arity must match order");
        observe(g);
        let m = g.monic(order);
        leads.push(m.leading_exponent(order).expect("nonzero"));
        basis.push(m);
    }
    let mut pairs: Vec<(usize, usize, ExpPair)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, leads[i].lcm(&leads[j])));
        }
    }
    while !pairs.is_empty() {
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| match order.cmp(&a.2, &b.2) {
                Ordering::Equal => (a.0, a.1).cmp(&(b.0, b.1)),
                o => o,
            })
            .expect("nonempty");
        let (i, j, _) = pairs.swap_remove(idx);
        let s = s_element(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        observe(&r);
        let r = r.monic(order);
        let lr = r.leading_exponent(order).expect("nonzero");
        let k = basis.len();
        for (i, l) in leads.iter().enumerate() {
            pairs.push((i, k, l.lcm(&lr)));
        }
        basis.push(r);
        leads.push(lr);
    }
    GroebnerBasis {
        elements: basis,
        order: order.clone(),
        reduced: false,
    }
}

/// Minimal, autoreduced, monic basis sorted by ascending leading exponent.
pub fn reduce_basis<A: Algebra>(b: GroebnerBasis<A>) -> GroebnerBasis<A> {
    let order = b.order;
    let mut elems: Vec<(ExpPair, A)> = b
        .elements
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let m = g.monic(&order);
            (m.leading_exponent(&order).expect("nonzero"), m)
        })
        .collect();
    elems.sort_by(|a, b| order.cmp(&a.0, &b.0));
    let mut minimal: Vec<(ExpPair, A)> = Vec::new();
    for (e, g) in elems {
        if !minimal.iter().any(|(l, _)| l.divides(&e)) {
            minimal.push((e, g));
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<A> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, (_, g))| g.clone())
            .collect();
        let r = reduce(&minimal[i].1, &others, &order).monic(&order);
        out.push(r);
    }
    GroebnerBasis {
        elements: out,
        order,
        reduced: true,
    }
}

pub fn reduced_groebner<A: Algebra>(gens: &[A], order: &OrderSpec) -> GroebnerBasis<A> {
    reduce_basis(buchberger(gens, order))
}

pub fn ideal_equal<A: Algebra>(a: &[A], b: &[A], order: &OrderSpec) -> bool {
    reduced_groebner(a, order).elements == reduced_groebner(b, order).elements
}

/// Every S-element of `basis` reduces to zero.
pub fn satisfies_buchberger_criterion<A: Algebra>(basis: &[A], order: &OrderSpec) -> bool {
    let nonzero: Vec<&A> = basis.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<A> = nonzero.iter().map(|g| (*g).clone()).collect();
    for j in 0..owned.len() {
        for i in 0..j {
            if !reduce(&s_element(&owned[i], &owned[j], order), &owned, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Minimal generators of the monomial ideal spanned by `exps`, sorted.
pub fn minimal_monomials(exps: &[ExpPair]) -> Vec<ExpPair> {
    let mut sorted: Vec<ExpPair> = exps.to_vec();
    sorted.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut out: Vec<ExpPair> = Vec::new();
    for e in sorted {
        if !out.iter().any(|m| m.divides(&e)) {
            out.push(e);
        }
    }
    out.sort();
    out
}

/// Generators of `Gr^ω L` for the left ideal `L = W·gens`: the symbols of a
/// `(base)_ω` Gröbner basis, which form a `base`-Gröbner basis of `Gr^ω L`.
pub fn initial_ideal_weyl(gens: &[WeylElement], omega: &Weight, base: &OrderSpec) -> Result<Vec<Poly>> {
    omega.ensure_arity(base.arity())?;
    omega.ensure_region()?;
    check_arity(gens, base.arity())?;
    let order = base.refine(omega)?;
    let gb = reduced_groebner(gens, &order);
    gb.elements.iter().map(|b| b.symbol(omega)).collect()
}

/// Generators of `Gr^ν I` for `I = ⟨gens⟩`; any `ν ∈ ℕ₀^{2n}` is allowed.
pub fn initial_ideal_comm(gens: &[Poly], nu: &Weight, base: &OrderSpec) -> Result<Vec<Poly>> {
    nu.ensure_arity(base.arity())?;
    check_arity(gens, base.arity())?;
    let order = base.refine(nu)?;
    let gb = reduced_groebner(gens, &order);
    gb.elements.iter().map(|b| b.tau_initial(nu)).collect()
}

pub(crate) fn check_arity<A: Algebra>(gens: &[A], n: usize) -> Result<()> {
    match gens.iter().find(|g| g.arity() != n) {
        Some(g) => Err(Error::Arity {
            expected: n,
            found: g.arity(),
        }),
        None => Ok(()),
    }
}

/// Krull dimension of `K[z_1..z_vars] / ⟨monomials⟩`: the largest set of
/// variables containing the support of no generator. `−∞` for the zero ring.
pub fn krull_dim_quotient(monomials: &[ExpPair], vars: usize) -> Degree {
    assert!(vars < 32, "too many variables for subset enumeration");
    let masks: Vec<u32> = monomials
        .iter()
        .map(|m| m.variables().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    if masks.contains(&0) {
        return Degree::NegInf;
    }
    let mut best = 0;
    for s in 0u32..(1 << vars) {
        let size = s.count_ones();
        if size > best && masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    Degree::Finite(best as i64)
}

/// Checks `f − r = Σ q_i g_i` exactly (left multiplication in the ring).
pub fn division_identity_holds<A: Algebra>(f: &A, divisors: &[A], d: &Division<A>) -> bool {
    let mut acc = d.remainder.clone();
    for (q, g) in d.quotients.iter().zip(divisors) {
        acc = acc.add(&q.mul(g));
    }
    acc == *f
}

/// `true` when `f` lies in the ideal with Gröbner basis `gb`.
pub fn contains<A: Algebra>(gb: &GroebnerBasis<A>, f: &A) -> bool {
    reduce(f, &gb.elements, &gb.order).is_zero()
}
