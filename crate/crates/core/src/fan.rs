//! The slope fan of a left ideal of the first Weyl algebra.
//!
//! For `n = 1` a weight `ω = (w₁, w₂) ∈ Ω` only matters through its slope
//! `w₂/w₁ ∈ [0, ∞]`, and every weighted comparison between two exponents
//! changes sign at one rational slope. [`fan_1d`] harvests those slopes from
//! every support met during the Gröbner computations, refines until the
//! intervals are stable, and merges neighbouring pieces with equal initial
//! ideals. The result is certified by sampling: two interior weights per
//! open interval must give the same reduced basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_observed, check_arity, minimal_monomials, reduce_basis, reduced_groebner,
    reference_order, GroebnerBasis,
};
use crate::order::{OrderSpec, Weight};
use crate::poly::Poly;
use crate::weyl::WeylElement;
use crate::Rational;

/// Refinement rounds before the fan computation gives up.
const MAX_ROUNDS: usize = 64;

/// Label attached to every fan: intervals are checked at sample weights only.
pub const CERTIFICATE: &str = "certified-by-sampling";

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinite,
}

impl Slope {
    pub fn zero() -> Self {
        Slope::Finite(Rational::zero())
    }

    /// `w₂/w₁` of a weight in `Ω` (`n = 1`).
    pub fn of_weight(omega: &Weight) -> Result<Slope> {
        omega.ensure_arity(1)?;
        omega.ensure_region()?;
        let (w1, w2) = (omega.entries()[0], omega.entries()[1]);
        Ok(if w1 == 0 {
            Slope::Infinite
        } else {
            Slope::Finite(Rational::new(w2.into(), w1.into()))
        })
    }

    /// The primitive integer weight with this slope.
    pub fn weight(&self) -> Weight {
        match self {
            Slope::Infinite => Weight::new(vec![0, 1]).expect("valid"),
            Slope::Finite(t) => {
                let p = t.numer().to_u64().expect("slope numerator fits u64");
                let q = t.denom().to_u64().expect("slope denominator fits u64");
                Weight::new(vec![q, p]).expect("slope weight within bounds")
            }
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Infinite => f.write_str("inf"),
            Slope::Finite(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Data computed at one sample weight.
#[derive(Clone, Debug)]
struct Sample {
    gb: GroebnerBasis<WeylElement>,
    initial: Vec<Poly>,
}

#[derive(Clone, Debug)]
pub struct SlopeCone {
    pub lower: Slope,
    pub upper: Slope,
    pub lower_closed: bool,
    pub upper_closed: bool,
    /// Representative weight inside the cone.
    pub weight: Weight,
    /// Reduced basis under lex refined by `weight`.
    pub gb: GroebnerBasis<WeylElement>,
    /// Reduced basis of `Gr^ω L` under the graded reference order.
    pub initial: Vec<Poly>,
}

impl SlopeCone {
    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, t: &Slope) -> bool {
        let above = if self.lower_closed { *t >= self.lower } else { *t > self.lower };
        let below = if self.upper_closed { *t <= self.upper } else { *t < self.upper };
        above && below
    }
}

#[derive(Clone, Debug)]
pub struct FanDecomposition {
    pub cones: Vec<SlopeCone>,
    /// Every weight at which a reduced basis was computed.
    pub sample_weights: Vec<Weight>,
    pub certificate: &'static str,
}

impl FanDecomposition {
    /// Index of the cone containing the slope of `omega`.
    pub fn classify(&self, omega: &Weight) -> Result<usize> {
        let t = Slope::of_weight(omega)?;
        self.cones
            .iter()
            .position(|c| c.contains(&t))
            .ok_or_else(|| Error::usage(format!("slope {t} not covered by the fan")))
    }

    /// Number of pairwise distinct initial ideals.
    pub fn distinct_initial_ideals(&self) -> usize {
        let set: BTreeSet<&Vec<Poly>> = self.cones.iter().map(|c| &c.initial).collect();
        set.len()
    }
}

fn ensure_first_weyl_algebra(gens: &[WeylElement]) -> Result<()> {
    match gens.iter().find(|g| g.arity() != 1) {
        Some(g) => Err(Error::Unsupported(format!(
            "exact fan enumeration needs n = 1 (got n = {}); use grid sampling",
            g.arity()
        ))),
        None => Ok(()),
    }
}

/// Slopes where two exponents of one support have equal weight.
fn harvest(support: &[crate::order::ExpPair], into: &mut BTreeSet<Slope>) {
    for (i, a) in support.iter().enumerate() {
        for b in &support[i + 1..] {
            let dl = a.as_slice()[0] as i64 - b.as_slice()[0] as i64;
            let dm = a.as_slice()[1] as i64 - b.as_slice()[1] as i64;
            // w₁·dl + w₂·dm = 0
            if dl != 0 && dm != 0 && (dl > 0) != (dm > 0) {
                into.insert(Slope::Finite(Rational::new(
                    BigInt::from(dl.abs()),
                    BigInt::from(dm.abs()),
                )));
            }
        }
    }
}

fn evaluate(gens: &[WeylElement], omega: &Weight, seen: &mut BTreeSet<Slope>) -> Sample {
    let order = OrderSpec::lex(1).refine(omega).expect("n = 1");
    let gb = reduce_basis(buchberger_observed(gens, &order, &mut |g| {
        harvest(&g.support(), seen)
    }));
    for g in &gb.elements {
        harvest(&g.support(), seen);
    }
    let symbols: Vec<Poly> = gb
        .elements
        .iter()
        .map(|b| b.symbol(omega).expect("n = 1"))
        .collect();
    let initial = reduced_groebner(&symbols, &reference_order(1)).elements;
    Sample { gb, initial }
}

fn interior_samples(a: &Slope, b: &Slope) -> [Slope; 2] {
    match (a, b) {
        (Slope::Finite(x), Slope::Finite(y)) => {
            let third = (y - x) / Rational::from_integer(3.into());
            [
                Slope::Finite(x + &third),
                Slope::Finite(x + &third + &third),
            ]
        }
        (Slope::Finite(x), Slope::Infinite) => [
            Slope::Finite(x + Rational::one()),
            Slope::Finite(x + Rational::from_integer(2.into())),
        ],
        _ => unreachable!("intervals have a finite lower end"),
    }
}

fn midpoint(a: &Slope, b: &Slope) -> Slope {
    match (a, b) {
        (Slope::Finite(x), Slope::Finite(y)) => {
            Slope::Finite((x + y) / Rational::from_integer(2.into()))
        }
        _ => unreachable!("samples are finite"),
    }
}

enum Piece {
    Point(Slope),
    Open(Slope, Slope, [Slope; 2]),
}

/// Exact partition of the slopes `[0, ∞]` into classes of equal `Gr^ω L`.
pub fn fan_1d(gens: &[WeylElement]) -> Result<FanDecomposition> {
    ensure_first_weyl_algebra(gens)?;
    let mut breaks: BTreeSet<Slope> = BTreeSet::new();
    breaks.insert(Slope::zero());
    breaks.insert(Slope::Infinite);
    for g in gens {
        harvest(&g.support(), &mut breaks);
    }
    let mut cache: BTreeMap<Slope, Sample> = BTreeMap::new();
    let eval = |t: &Slope, seen: &mut BTreeSet<Slope>, cache: &mut BTreeMap<Slope, Sample>| {
        if !cache.contains_key(t) {
            let s = evaluate(gens, &t.weight(), seen);
            cache.insert(t.clone(), s);
        }
    };

    let mut rounds = 0;
    let pieces = loop {
        rounds += 1;
        if rounds > MAX_ROUNDS {
            return Err(Error::Unsupported(
                "fan refinement did not stabilise".to_string(),
            ));
        }
        let pts: Vec<Slope> = breaks.iter().cloned().collect();
        let mut seen = BTreeSet::new();
        let mut pieces = Vec::new();
        for (i, t) in pts.iter().enumerate() {
            eval(t, &mut seen, &mut cache);
            pieces.push(Piece::Point(t.clone()));
            if let Some(next) = pts.get(i + 1) {
                let samples = interior_samples(t, next);
                for s in &samples {
                    eval(s, &mut seen, &mut cache);
                }
                pieces.push(Piece::Open(t.clone(), next.clone(), samples));
            }
        }
        // Supports of cached samples were harvested when first computed;
        // re-harvest them so a cache hit still contributes.
        for s in cache.values() {
            for g in &s.gb.elements {
                harvest(&g.support(), &mut seen);
            }
        }
        let fresh: Vec<Slope> = seen.into_iter().filter(|t| !breaks.contains(t)).collect();
        if !fresh.is_empty() {
            breaks.extend(fresh);
            continue;
        }
        let mut split = false;
        for p in &pieces {
            if let Piece::Open(_, _, [s1, s2]) = p {
                if cache[s1].gb.elements != cache[s2].gb.elements {
                    breaks.insert(midpoint(s1, s2));
                    split = true;
                }
            }
        }
        if !split {
            break pieces;
        }
    };

    let mut cones: Vec<SlopeCone> = Vec::new();
    let mut i = 0;
    while i < pieces.len() {
        let key = |p: &Piece| match p {
            Piece::Point(t) => &cache[t].initial,
            Piece::Open(_, _, [s1, _]) => &cache[s1].initial,
        };
        let mut j = i;
        while j + 1 < pieces.len() && key(&pieces[j + 1]) == key(&pieces[i]) {
            j += 1;
        }
        let group = &pieces[i..=j];
        let (lower, lower_closed) = match &group[0] {
            Piece::Point(t) => (t.clone(), true),
            Piece::Open(a, _, _) => (a.clone(), false),
        };
        let (upper, upper_closed) = match &group[group.len() - 1] {
            Piece::Point(t) => (t.clone(), true),
            Piece::Open(_, b, _) => (b.clone(), false),
        };
        let rep = group
            .iter()
            .find_map(|p| match p {
                Piece::Open(_, _, [s1, _]) => Some(s1.clone()),
                _ => None,
            })
            .unwrap_or_else(|| match &group[0] {
                Piece::Point(t) => t.clone(),
                Piece::Open(..) => unreachable!(),
            });
        let sample = &cache[&rep];
        cones.push(SlopeCone {
            lower,
            upper,
            lower_closed,
            upper_closed,
            weight: rep.weight(),
            gb: sample.gb.clone(),
            initial: sample.initial.clone(),
        });
        i = j + 1;
    }
    let sample_weights = cache.keys().map(Slope::weight).collect();
    Ok(FanDecomposition {
        cones,
        sample_weights,
        certificate: CERTIFICATE,
    })
}

pub fn classify_region(gens: &[WeylElement], omega: &Weight) -> Result<usize> {
    fan_1d(gens)?.classify(omega)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalBasis {
    pub elements: Vec<WeylElement>,
}

fn normalize_set(elems: impl IntoIterator<Item = WeylElement>, n: usize) -> Vec<WeylElement> {
    let reference = reference_order(n);
    let set: BTreeSet<(u64, String, WeylElement)> = elems
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let m = g.monic(&reference);
            let deg = m.terms().keys().map(|e| e.total_degree()).max().unwrap_or(0);
            (deg, m.to_string(), m)
        })
        .collect();
    set.into_iter().map(|(_, _, g)| g).collect()
}

/// Union of the reduced bases at every fan sample and both axis weights,
/// each under both lexicographic tie-breaks.
pub fn ugb(gens: &[WeylElement]) -> Result<UniversalBasis> {
    let fan = fan_1d(gens)?;
    ugb_from_fan(gens, &fan)
}

pub fn ugb_from_fan(gens: &[WeylElement], fan: &FanDecomposition) -> Result<UniversalBasis> {
    ensure_first_weyl_algebra(gens)?;
    let mut weights: BTreeSet<Weight> = fan.sample_weights.iter().cloned().collect();
    weights.insert(Weight::new(vec![1, 0])?);
    weights.insert(Weight::new(vec![0, 1])?);
    let mut all = Vec::new();
    for w in &weights {
        for base in [vec![0, 1], vec![1, 0]] {
            let order = OrderSpec::lex_with(1, base)?.refine(w)?;
            all.extend(reduced_groebner(gens, &order).elements);
        }
    }
    Ok(UniversalBasis {
        elements: normalize_set(all, 1),
    })
}

/// Heuristic universal-basis candidate for any `n`: reduced bases over the
/// weight grid `[0, bound]^{2n} ∩ Ω` under two opposite lex tie-breaks.
/// Carries no completeness guarantee.
pub fn sampled_universal_basis(gens: &[WeylElement], n: usize, bound: u64) -> Result<UniversalBasis> {
    check_arity(gens, n)?;
    let mut all = Vec::new();
    let identity: Vec<usize> = (0..2 * n).collect();
    let reversed: Vec<usize> = identity.iter().rev().cloned().collect();
    for w in grid_weights(n, bound)? {
        for base in [identity.clone(), reversed.clone()] {
            let order = OrderSpec::lex_with(n, base)?.refine(&w)?;
            all.extend(reduced_groebner(gens, &order).elements);
        }
    }
    Ok(UniversalBasis {
        elements: normalize_set(all, n),
    })
}

/// `∏_u Σ_{0≤k≤#supp u} C(#supp u, k)` over the basis elements.
pub fn bound_c(elements: &[WeylElement]) -> BigUint {
    elements
        .iter()
        .map(|u| {
            let m = u.terms().len() as u64;
            (0..=m)
                .map(|k| num_integer::binomial(BigUint::from(m), BigUint::from(k)))
                .fold(BigUint::zero(), |a, b| a + b)
        })
        .fold(BigUint::one(), |a, b| a * b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    pub chi: usize,
    #[serde(rename = "bound_C")]
    #[serde(serialize_with = "crate::json::big_as_number")]
    pub bound_c: BigUint,
}

pub fn chi(gens: &[WeylElement]) -> Result<ChiReport> {
    let fan = fan_1d(gens)?;
    let u = ugb_from_fan(gens, &fan)?;
    Ok(ChiReport {
        chi: fan.distinct_initial_ideals(),
        bound_c: bound_c(&u.elements),
    })
}

/// `sup_{u ≠ 0} deg^ν(u)` over a fixed basis; 0 for an empty basis.
pub fn gamma_of(elements: &[WeylElement], nu: &Weight) -> Result<i64> {
    let mut best = 0;
    for u in elements {
        if let Some(d) = u.deg_omega(nu)?.finite() {
            best = best.max(d);
        }
    }
    Ok(best)
}

/// `γ_ν` evaluated on the constructed universal basis (an upper bound for the
/// infimum over all universal bases).
pub fn gamma(gens: &[WeylElement], nu: &Weight) -> Result<i64> {
    let u = ugb(gens)?;
    gamma_of(&u.elements, nu)
}

/// Weights of `[0, bound]^{2n} ∩ Ω` in lexicographic order.
pub fn grid_weights(n: usize, bound: u64) -> Result<Vec<Weight>> {
    let dims = 2 * n;
    let mut out = Vec::new();
    let mut cur = vec![0u64; dims];
    loop {
        let w = Weight::new(cur.clone())?;
        if w.is_in_region() {
            out.push(w);
        }
        let mut i = dims;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < bound {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

#[derive(Clone, Debug)]
pub struct GridSample {
    /// Each sampled weight with the index of its class in `classes`.
    pub entries: Vec<(Weight, usize)>,
    /// Reduced bases of the distinct initial ideals found.
    pub classes: Vec<Vec<Poly>>,
}

impl GridSample {
    /// A lower bound on the number of distinct initial ideals.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Distinct initial ideals over the grid `[0, bound]^{2n} ∩ Ω`.
pub fn grid_sample(gens: &[WeylElement], n: usize, bound: u64) -> Result<GridSample> {
    check_arity(gens, n)?;
    let mut classes: Vec<Vec<Poly>> = Vec::new();
    let mut entries = Vec::new();
    for w in grid_weights(n, bound)? {
        let key = crate::charvar::char_ideal(gens, n, &w)?.reduced_gb;
        let id = match classes.iter().position(|c| *c == key) {
            Some(i) => i,
            None => {
                classes.push(key);
                classes.len() - 1
            }
        };
        entries.push((w, id));
    }
    Ok(GridSample { entries, classes })
}

/// `count` seeded random normal orderings: one to three weight refinements
/// with entries in `0..=5` over a random lexicographic tie-break.
pub fn random_orders(n: usize, count: usize, seed: u64) -> Vec<OrderSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut base: Vec<usize> = (0..2 * n).collect();
            base.shuffle(&mut rng);
            let mut o = OrderSpec::lex_with(n, base).expect("permutation");
            for _ in 0..rng.gen_range(1..=3) {
                let w = Weight::new((0..2 * n).map(|_| rng.gen_range(0..=5)).collect())
                    .expect("valid weight");
                o = o.refine(&w).expect("arity");
            }
            o
        })
        .collect()
}

/// Checks that `u` has the same leading-exponent ideal as a freshly computed
/// Gröbner basis under `order`. Returns `false` on the first mismatch.
pub fn is_groebner_basis_for(gens: &[WeylElement], u: &[WeylElement], order: &OrderSpec) -> bool {
    let fresh = reduced_groebner(gens, order);
    let lu: Vec<_> = u.iter().filter_map(|g| g.leading_exponent(order)).collect();
    minimal_monomials(&lu) == minimal_monomials(&fresh.leading_exponents())
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
