//! Serialized forms used by the command-line tool.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::fan::{FanDecomposition, SlopeCone};
use crate::order::ExpPair;
use crate::Rational;

pub fn rational_as_string<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Writes a big integer as a bare JSON number when it fits in `u64`.
pub fn big_as_number<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub l: Vec<u32>,
    pub m: Vec<u32>,
    pub c: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ElementJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

pub fn element<A: Algebra>(a: &A) -> ElementJson {
    ElementJson {
        text: a.to_string(),
        terms: sorted_terms(a)
            .into_iter()
            .map(|(e, c): (&ExpPair, &Rational)| TermJson {
                l: e.lambda().to_vec(),
                m: e.mu().to_vec(),
                c: c.to_string(),
            })
            .collect(),
    }
}

/// Descending total degree, then descending exponent, as in the printed form.
fn sorted_terms<A: Algebra>(a: &A) -> Vec<(&ExpPair, &Rational)> {
    let mut ts: Vec<_> = a.terms().iter().collect();
    ts.sort_by(|x, y| (y.0.total_degree(), y.0).cmp(&(x.0.total_degree(), x.0)));
    ts
}

pub fn elements<A: Algebra>(xs: &[A]) -> Vec<ElementJson> {
    xs.iter().map(element).collect()
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ConeJson {
    pub lower: String,
    pub upper: String,
    pub closed: [bool; 2],
    pub initial: Vec<String>,
}

impl From<&SlopeCone> for ConeJson {
    fn from(c: &SlopeCone) -> Self {
        ConeJson {
            lower: c.lower.to_string(),
            upper: c.upper.to_string(),
            closed: [c.lower_closed, c.upper_closed],
            initial: c.initial.iter().map(|p| p.to_string()).collect(),
        }
    }
}

pub fn fan_cones(f: &FanDecomposition) -> Vec<ConeJson> {
    f.cones.iter().map(ConeJson::from).collect()
}

pub fn fan_csv(f: &FanDecomposition) -> String {
    let mut out = String::from("lower,upper,lower_closed,upper_closed,initial\n");
    for c in fan_cones(f) {
        out.push_str(&format!(
            "{},{},{},{},\"{}\"\n",
            c.lower,
            c.upper,
            c.closed[0],
            c.closed[1],
            c.initial.join("; ")
        ));
    }
    out
}
