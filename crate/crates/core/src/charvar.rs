//! Characteristic ideals `Gr^ω L` of cyclic modules `W/L`, critical cones,
//! and the stabilization and dimension checks built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan;
use crate::groebner::{
    check_arity, ideal_equal, initial_ideal_comm, initial_ideal_weyl, krull_dim_quotient,
    reduced_groebner, reference_order,
};
use crate::order::{Degree, OrderSpec, Weight};
use crate::poly::Poly;
use crate::weyl::WeylElement;

/// Grid bound used to sample a universal-basis candidate when `n ≥ 2`.
pub const SAMPLED_UGB_BOUND: u64 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharIdeal {
    pub omega: Weight,
    /// Symbols of a reduced `(lex)_ω` basis of `L`.
    pub gens: Vec<Poly>,
    /// Reduced basis of the same ideal under the graded reference order.
    pub reduced_gb: Vec<Poly>,
}

pub fn char_ideal(gens: &[WeylElement], n: usize, omega: &Weight) -> Result<CharIdeal> {
    let symbols = initial_ideal_weyl(gens, omega, &OrderSpec::lex(n))?;
    let reduced_gb = reduced_groebner(&symbols, &reference_order(n)).elements;
    Ok(CharIdeal {
        omega: omega.clone(),
        gens: symbols,
        reduced_gb,
    })
}

/// `Gr^{(1…1)} Gr^ω L` as a reduced basis under the reference order.
pub fn critical_cone_ideal(gens: &[WeylElement], n: usize, omega: &Weight) -> Result<Vec<Poly>> {
    let ci = char_ideal(gens, n, omega)?;
    let lead = initial_ideal_comm(&ci.gens, &Weight::ones(n), &OrderSpec::lex(n))?;
    Ok(reduced_groebner(&lead, &reference_order(n)).elements)
}

/// `Gr^ν Gr^ω L = Gr^{ν+sω} L`, compared as ideals.
pub fn stabilization_check(
    gens: &[WeylElement],
    n: usize,
    nu: &Weight,
    omega: &Weight,
    s: u64,
) -> Result<bool> {
    let ci = char_ideal(gens, n, omega)?;
    stabilization_check_with(gens, n, &ci, nu, s)
}

fn stabilization_check_with(
    gens: &[WeylElement],
    n: usize,
    ci: &CharIdeal,
    nu: &Weight,
    s: u64,
) -> Result<bool> {
    nu.ensure_arity(n)?;
    let lhs = initial_ideal_comm(&ci.gens, nu, &OrderSpec::lex(n))?;
    let rhs = initial_ideal_weyl(gens, &nu.shifted(s, &ci.omega)?, &OrderSpec::lex(n))?;
    Ok(ideal_equal(&lhs, &rhs, &reference_order(n)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub nu: Weight,
    pub omega: Weight,
    pub gamma_bound: i64,
    /// Inclusive range of `s` that was checked.
    pub checked_range: (u64, u64),
    /// Smallest `s` from which equality holds through the end of the range.
    pub onset: Option<u64>,
    pub all_pass_beyond_gamma: bool,
}

/// `γ_ν` on the universal basis: exact fan construction for `n = 1`, grid
/// sampling otherwise.
pub fn stabilization_gamma(gens: &[WeylElement], n: usize, nu: &Weight) -> Result<i64> {
    nu.ensure_arity(n)?;
    if n == 1 {
        fan::gamma(gens, nu)
    } else {
        let u = fan::sampled_universal_basis(gens, n, SAMPLED_UGB_BOUND)?;
        fan::gamma_of(&u.elements, nu)
    }
}

pub fn verify_stabilization(
    gens: &[WeylElement],
    n: usize,
    nu: &Weight,
    omegas: &[Weight],
    tail: u64,
) -> Result<Vec<StabilizationReport>> {
    let gamma = stabilization_gamma(gens, n, nu)?;
    verify_stabilization_with_gamma(gens, n, nu, omegas, tail, gamma)
}

pub fn verify_stabilization_with_gamma(
    gens: &[WeylElement],
    n: usize,
    nu: &Weight,
    omegas: &[Weight],
    tail: u64,
    gamma: i64,
) -> Result<Vec<StabilizationReport>> {
    check_arity(gens, n)?;
    nu.ensure_arity(n)?;
    let gamma_u = u64::try_from(gamma).map_err(|_| Error::usage("negative gamma"))?;
    let last = gamma_u + tail;
    let mut out = Vec::with_capacity(omegas.len());
    for omega in omegas {
        omega.ensure_arity(n)?;
        omega.ensure_region()?;
        let ci = char_ideal(gens, n, omega)?;
        let mut pass = Vec::with_capacity(last as usize);
        for s in 1..=last {
            pass.push(stabilization_check_with(gens, n, &ci, nu, s)?);
        }
        let onset = match pass.iter().rposition(|p| !p) {
            None if last > 0 => Some(1),
            None => None,
            Some(i) if (i as u64 + 1) < last => Some(i as u64 + 2),
            Some(_) => None,
        };
        let all_pass_beyond_gamma = pass[gamma_u as usize..].iter().all(|p| *p);
        out.push(StabilizationReport {
            nu: nu.clone(),
            omega: omega.clone(),
            gamma_bound: gamma,
            checked_range: (1, last),
            onset,
            all_pass_beyond_gamma,
        });
    }
    Ok(out)
}

/// Largest `onset − 1` over the supplied weights: an estimate of `κ_ν` over
/// a finite set of `ω`, not over all of `Ω`.
pub fn kappa_hat(
    gens: &[WeylElement],
    n: usize,
    nu: &Weight,
    omegas: &[Weight],
    tail: u64,
) -> Result<u64> {
    Ok(kappa_of(&verify_stabilization(gens, n, nu, omegas, tail)?))
}

pub fn kappa_of(reports: &[StabilizationReport]) -> u64 {
    reports
        .iter()
        .map(|r| match r.onset {
            Some(s) => s - 1,
            None => r.checked_range.1,
        })
        .max()
        .unwrap_or(0)
}

/// Krull dimension of `ℚ[X,Y] / Gr^ω L`; `−∞` when `L = W`.
pub fn dim_char_variety(gens: &[WeylElement], n: usize, omega: &Weight) -> Result<Degree> {
    dim_char_variety_with(gens, n, omega, &reference_order(n))
}

/// As [`dim_char_variety`], with the commutative basis taken under `order`.
pub fn dim_char_variety_with(
    gens: &[WeylElement],
    n: usize,
    omega: &Weight,
    order: &OrderSpec,
) -> Result<Degree> {
    let ci = char_ideal(gens, n, omega)?;
    let gb = reduced_groebner(&ci.gens, order);
    Ok(krull_dim_quotient(&gb.leading_exponents(), 2 * n))
}

pub fn dimension_values(gens: &[WeylElement], n: usize, omegas: &[Weight]) -> Result<Vec<Degree>> {
    omegas.iter().map(|w| dim_char_variety(gens, n, w)).collect()
}

pub fn dimension_constancy(gens: &[WeylElement], n: usize, omegas: &[Weight]) -> Result<bool> {
    if omegas.is_empty() {
        return Err(Error::usage("dimension constancy needs at least one weight"));
    }
    let values = dimension_values(gens, n, omegas)?;
    Ok(values.windows(2).all(|p| p[0] == p[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_weyl};

    fn w(s: &str) -> WeylElement {
        parse_weyl(s, 1).unwrap()
    }
    fn p(s: &str) -> Poly {
        parse_poly(s, 1).unwrap()
    }
    fn wt(a: u64, b: u64) -> Weight {
        Weight::new(vec![a, b]).unwrap()
    }

    #[test]
    fn airy_characteristic_ideals() {
        let airy = [w("d^2 - x")];
        assert_eq!(char_ideal(&airy, 1, &wt(0, 1)).unwrap().reduced_gb, vec![p("Y^2")]);
        assert_eq!(char_ideal(&airy, 1, &wt(1, 1)).unwrap().reduced_gb, vec![p("Y^2")]);
        assert_eq!(char_ideal(&airy, 1, &wt(2, 1)).unwrap().reduced_gb, vec![p("Y^2 - X")]);
        assert!(char_ideal(&airy, 1, &wt(0, 0)).is_err());
    }

    #[test]
    fn critical_cones() {
        let airy = [w("d^2 - x")];
        assert_eq!(critical_cone_ideal(&airy, 1, &wt(0, 1)).unwrap(), vec![p("Y^2")]);
        assert_eq!(critical_cone_ideal(&airy, 1, &wt(2, 1)).unwrap(), vec![p("Y^2")]);
        assert_eq!(critical_cone_ideal(&[w("1")], 1, &wt(1, 1)).unwrap(), vec![p("1")]);
    }

    #[test]
    fn stabilization_examples() {
        let airy = [w("d^2 - x")];
        assert!(stabilization_check(&airy, 1, &wt(1, 1), &wt(0, 1), 3).unwrap());
        assert!(stabilization_check(&airy, 1, &wt(1, 1), &wt(0, 1), 1).unwrap());
        assert!(stabilization_check(&airy, 1, &wt(1, 0), &wt(0, 1), 1).unwrap());
    }

    #[test]
    fn stabilization_reports() {
        let airy = [w("d^2 - x")];
        let grid = fan::grid_weights(1, 7).unwrap();
        let reports = verify_stabilization(&airy, 1, &wt(1, 1), &grid, 5).unwrap();
        assert!(reports.iter().all(|r| r.all_pass_beyond_gamma));
        assert!(reports.iter().all(|r| r.onset.unwrap() <= 3));
        assert!(kappa_of(&reports) <= 2);
        let unit = verify_stabilization(&[w("1")], 1, &wt(1, 1), &grid, 5).unwrap();
        assert!(unit.iter().all(|r| r.onset == Some(1)));
        assert_eq!(kappa_of(&unit), 0);
        let zero = verify_stabilization(&airy, 1, &wt(0, 0), &grid, 3).unwrap();
        assert!(zero.iter().all(|r| r.onset == Some(1)));
    }

    #[test]
    fn dimensions() {
        let grid = fan::grid_weights(1, 7).unwrap();
        let airy = [w("d^2 - x")];
        assert!(dimension_constancy(&airy, 1, &grid).unwrap());
        assert_eq!(dim_char_variety(&airy, 1, &wt(3, 1)).unwrap(), Degree::Finite(1));
        assert_eq!(dim_char_variety(&[], 1, &wt(1, 1)).unwrap(), Degree::Finite(2));
        assert_eq!(dim_char_variety(&[w("x"), w("d")], 1, &wt(1, 1)).unwrap(), Degree::NegInf);
        assert!(dimension_constancy(&[w("1")], 1, &grid).unwrap());
        assert!(dimension_constancy(&[w("x*d + 1")], 1, &grid).unwrap());
        assert_eq!(dim_char_variety(&[w("x*d + 1")], 1, &wt(1, 1)).unwrap(), Degree::Finite(1));
    }

    #[test]
    fn dimension_ignores_commutative_order() {
        let gens = [w("d^3 - x*d - 1")];
        for om in fan::grid_weights(1, 4).unwrap() {
            let a = dim_char_variety_with(&gens, 1, &om, &reference_order(1)).unwrap();
            let b = dim_char_variety_with(&gens, 1, &om, &OrderSpec::lex_with(1, vec![1, 0]).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn scaling_invariance() {
        let gens = [w("x^2*d - 1"), w("d^2")];
        for om in fan::grid_weights(1, 3).unwrap() {
            let base = char_ideal(&gens, 1, &om).unwrap().reduced_gb;
            for k in 2..4 {
                assert_eq!(char_ideal(&gens, 1, &om.scaled(k).unwrap()).unwrap().reduced_gb, base);
            }
        }
    }
}
