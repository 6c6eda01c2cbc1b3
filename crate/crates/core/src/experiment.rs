//! The half-line colouring experiment in the weight quadrant of `W₁`.
//!
//! Half-lines `ν + sω` start at lattice points `ν` of the window and point in
//! primitive directions `ω`. Points with `s ≤ s₀·(ν₁ + ν₂)` are cut off, so
//! the line through `ν` only counts once it is `s₀` steps per unit of `|ν|`
//! away from its base point. Two half-lines are incident when they share a
//! point; colour classes are the connected components of the incidence
//! graph that contain a half-line through the origin. Components without
//! one are edge effects of the finite window and are counted separately.
//!
//! All intersection tests are exact integer computations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{self, Slope};
use crate::weyl::WeylElement;
use crate::{Rational, Weight};

pub const DEFAULT_WINDOW: u64 = 17;
pub const DEFAULT_S_MAX: u64 = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfLine {
    pub nu: [u64; 2],
    /// Primitive direction.
    pub omega: [u64; 2],
    /// Points are `ν + sω` with `s_min < s ≤ s_max`.
    #[serde(serialize_with = "crate::json::rational_as_string")]
    pub s_min: Rational,
}

impl HalfLine {
    pub fn slope(&self) -> Slope {
        Slope::of_weight(&Weight::new(self.omega.to_vec()).expect("valid")).expect("in region")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColourClass {
    pub id: usize,
    /// Indices into [`Experiment::halflines`], ascending.
    pub members: Vec<usize>,
    /// Directions of the members starting at the origin.
    pub origin_directions: Vec<[u64; 2]>,
    /// Componentwise minimum of the covered lattice points in the window.
    pub vertex: Option<[u64; 2]>,
    pub slope_lo: Slope,
    pub slope_hi: Slope,
    /// All members lie on one line.
    pub degenerate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Experiment {
    pub s0: u64,
    pub window: u64,
    #[serde(serialize_with = "crate::json::rational_as_string")]
    pub s_max: Rational,
    #[serde(skip)]
    pub halflines: Vec<HalfLine>,
    pub classes: Vec<ColourClass>,
    /// Components that contain no half-line through the origin.
    pub window_artifacts: usize,
}

impl Experiment {
    pub fn degenerate_count(&self) -> usize {
        self.classes.iter().filter(|c| c.degenerate).count()
    }

    /// Vertices strictly below the diagonal.
    pub fn lower_vertices(&self) -> BTreeSet<(u64, u64)> {
        self.classes
            .iter()
            .filter_map(|c| c.vertex)
            .filter(|v| v[1] < v[0])
            .map(|v| (v[0], v[1]))
            .collect()
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Integer form of one half-line for the pair loop.
#[derive(Clone, Copy)]
struct Ray {
    nx: i64,
    ny: i64,
    wx: i64,
    wy: i64,
    /// Lower parameter bound (exclusive).
    a: i64,
}

fn cross(ax: i64, ay: i64, bx: i64, by: i64) -> i64 {
    ax * by - ay * bx
}

/// `true` when the two half-lines share a point. `s_max = p/q`.
fn incident(r: &Ray, t: &Ray, p: i64, q: i64) -> bool {
    let (dx, dy) = (t.nx - r.nx, t.ny - r.ny);
    let c = cross(r.wx, r.wy, t.wx, t.wy);
    if c == 0 {
        // parallel primitive first-quadrant directions are equal
        if cross(dx, dy, r.wx, r.wy) != 0 {
            return false;
        }
        let norm = r.wx * r.wx + r.wy * r.wy;
        let k = (dx * r.wx + dy * r.wy) / norm;
        // parameters along r: (a_r, S] and (k + a_t, k + S]
        let lo = (r.a * q).max((k + t.a) * q);
        let hi = p.min(k * q + p);
        return lo < hi;
    }
    let (mut sn, mut tn, mut c) = (cross(dx, dy, t.wx, t.wy), cross(dx, dy, r.wx, r.wy), c);
    if c < 0 {
        sn = -sn;
        tn = -tn;
        c = -c;
    }
    sn > r.a * c && tn > t.a * c && sn * q <= p * c && tn * q <= p * c
}

fn primitive_directions(window: u64) -> Vec<[u64; 2]> {
    let mut out = Vec::new();
    for a in 0..=window {
        for b in 0..=window {
            if (a, b) != (0, 0) && a.gcd(&b) == 1 {
                out.push([a, b]);
            }
        }
    }
    out
}

/// Colour classes of the half-line incidence graph.
pub fn halfline_cones(s0: u64, window: u64, s_max: &Rational) -> Result<Experiment> {
    if window == 0 || window > 1000 {
        return Err(Error::usage(format!("window must lie in 1..=1000, got {window}")));
    }
    if *s_max <= Rational::from_integer(0.into()) {
        return Err(Error::usage("s_max must be positive"));
    }
    let (p, q) = (
        s_max.numer().to_i64().filter(|v| *v < 1 << 24),
        s_max.denom().to_i64().filter(|v| *v < 1 << 24),
    );
    let (Some(p), Some(q)) = (p, q) else {
        return Err(Error::usage("s_max numerator and denominator must be below 2^24"));
    };
    let dirs = primitive_directions(window);
    let mut halflines = Vec::new();
    let mut rays = Vec::new();
    for x in 0..=window {
        for y in 0..=window {
            let a = s0 * (x + y);
            // empty range (a, s_max]
            if Rational::from_integer(a.into()) >= *s_max {
                continue;
            }
            for w in &dirs {
                halflines.push(HalfLine {
                    nu: [x, y],
                    omega: *w,
                    s_min: Rational::from_integer(a.into()),
                });
                rays.push(Ray {
                    nx: x as i64,
                    ny: y as i64,
                    wx: w[0] as i64,
                    wy: w[1] as i64,
                    a: a as i64,
                });
            }
        }
    }

    let mut uf = UnionFind::new(rays.len());
    for i in 0..rays.len() {
        let r = rays[i];
        let mut root = uf.find(i as u32);
        for j in i + 1..rays.len() {
            if uf.find(j as u32) == root {
                continue;
            }
            if incident(&r, &rays[j], p, q) {
                uf.union(i as u32, j as u32);
                root = uf.find(i as u32);
            }
        }
    }

    let mut comps: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for i in 0..rays.len() {
        comps.entry(uf.find(i as u32)).or_default().push(i);
    }
    let mut classes = Vec::new();
    let mut window_artifacts = 0;
    for members in comps.into_values() {
        let origin_directions: Vec<[u64; 2]> = members
            .iter()
            .filter(|&&i| halflines[i].nu == [0, 0])
            .map(|&i| halflines[i].omega)
            .collect();
        if origin_directions.is_empty() {
            window_artifacts += 1;
            continue;
        }
        classes.push(describe(&halflines, &rays, members, origin_directions, window, p, q));
    }
    classes.sort_by(|a, b| {
        (a.vertex, &a.slope_lo, &a.slope_hi).cmp(&(b.vertex, &b.slope_lo, &b.slope_hi))
    });
    for (id, c) in classes.iter_mut().enumerate() {
        c.id = id;
    }
    Ok(Experiment {
        s0,
        window,
        s_max: s_max.clone(),
        halflines,
        classes,
        window_artifacts,
    })
}

fn describe(
    halflines: &[HalfLine],
    rays: &[Ray],
    members: Vec<usize>,
    origin_directions: Vec<[u64; 2]>,
    window: u64,
    p: i64,
    q: i64,
) -> ColourClass {
    let mut vertex: Option<[u64; 2]> = None;
    for &i in &members {
        let r = &rays[i];
        // first lattice point past the cut-off: k = a + 1
        let k = r.a + 1;
        if k * q > p {
            continue;
        }
        let (x, y) = (r.nx + k * r.wx, r.ny + k * r.wy);
        if x > window as i64 || y > window as i64 {
            continue;
        }
        let pt = [x as u64, y as u64];
        vertex = Some(match vertex {
            None => pt,
            Some(v) => [v[0].min(pt[0]), v[1].min(pt[1])],
        });
    }
    let slopes: Vec<Slope> = members.iter().map(|&i| halflines[i].slope()).collect();
    let slope_lo = slopes.iter().min().cloned().expect("nonempty class");
    let slope_hi = slopes.iter().max().cloned().expect("nonempty class");
    let first = &rays[members[0]];
    let degenerate = members.iter().all(|&i| {
        let r = &rays[i];
        r.wx == first.wx
            && r.wy == first.wy
            && cross(r.nx - first.nx, r.ny - first.ny, first.wx, first.wy) == 0
    });
    ColourClass {
        id: 0,
        members,
        origin_directions,
        vertex,
        slope_lo,
        slope_hi,
        degenerate,
    }
}

fn fibonacci(k: u64) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Pairs with `F(1) ≤ x₁ ≤ F(2+s₀)`, `F(0) ≤ x₂ ≤ F(1+s₀)`, `gcd = 1`, `x₁ > x₂`.
pub fn fibonacci_vertex_set(s0: u64) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for x1 in fibonacci(1)..=fibonacci(2 + s0) {
        for x2 in fibonacci(0)..=fibonacci(1 + s0) {
            if x1.gcd(&x2) == 1 && x1 > x2 {
                out.insert((x1, x2));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub chi: usize,
    pub gamma: i64,
    #[serde(serialize_with = "crate::json::big_as_number")]
    pub bound: BigUint,
    pub satisfied: bool,
}

/// `χ(L)` against `2^{1+γ}+1` with `γ = γ_{(1,1)}` of the universal basis.
pub fn conjecture_report(gens: &[WeylElement]) -> Result<ConjectureReport> {
    let fan = fan::fan_1d(gens)?;
    let u = fan::ugb_from_fan(gens, &fan)?;
    let gamma = fan::gamma_of(&u.elements, &Weight::ones(1))?;
    let bound = (BigUint::one() << (1 + gamma as u64)) + BigUint::one();
    let chi = fan.distinct_initial_ideals();
    Ok(ConjectureReport {
        chi,
        gamma,
        satisfied: BigUint::from(chi) <= bound,
        bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureFormat {
    Svg,
    Csv,
}

const CELL: f64 = 24.0;
const MARGIN: f64 = 20.0;
const FILLS: [&str; 2] = ["#3b6ea5", "#e0a03a"];

fn slope_cell(s: &Slope) -> String {
    s.to_string()
}

pub fn emit_figure(classes: &[ColourClass], window: u64, format: FigureFormat) -> String {
    match format {
        FigureFormat::Csv => {
            let mut out = String::from("class_id,degenerate,vertex_x,vertex_y,slope_lo,slope_hi\n");
            for c in classes {
                let (vx, vy) = match c.vertex {
                    Some([x, y]) => (x.to_string(), y.to_string()),
                    None => (String::new(), String::new()),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    c.id,
                    c.degenerate,
                    vx,
                    vy,
                    slope_cell(&c.slope_lo),
                    slope_cell(&c.slope_hi)
                );
            }
            out
        }
        FigureFormat::Svg => svg(classes, window),
    }
}

/// Where the ray from `v` with slope `t` leaves the square `[0, w]²`.
fn exit_point(v: [f64; 2], t: &Slope, w: f64) -> [f64; 2] {
    match t {
        Slope::Infinite => [v[0], w],
        Slope::Finite(r) => {
            let t = r.to_f64().unwrap_or(0.0);
            if t == 0.0 {
                return [w, v[1]];
            }
            let y_at_right = v[1] + t * (w - v[0]);
            if y_at_right <= w {
                [w, y_at_right]
            } else {
                [v[0] + (w - v[1]) / t, w]
            }
        }
    }
}

fn svg(classes: &[ColourClass], window: u64) -> String {
    let w = window as f64;
    let size = 2.0 * MARGIN + CELL * w;
    let tx = |x: f64| MARGIN + CELL * x;
    let ty = |y: f64| size - MARGIN - CELL * y;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    out.push_str("<g class=\"grid\" stroke=\"#ddd\" stroke-width=\"0.5\">\n");
    for i in 0..=window {
        let i = i as f64;
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            tx(i),
            ty(0.0),
            tx(i),
            ty(w)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            tx(0.0),
            ty(i),
            tx(w),
            ty(i)
        );
    }
    out.push_str("</g>\n");
    for c in classes {
        let fill = FILLS[c.id % 2];
        let Some(v) = c.vertex else {
            let _ = writeln!(out, r#"<g class="cone" data-id="{}"/>"#, c.id);
            continue;
        };
        let v = [v[0] as f64, v[1] as f64];
        let a = exit_point(v, &c.slope_lo, w);
        let b = exit_point(v, &c.slope_hi, w);
        let _ = writeln!(out, r#"<g class="cone" data-id="{}">"#, c.id);
        if c.degenerate {
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{fill}" stroke-width="2"/>"#,
                tx(v[0]),
                ty(v[1]),
                tx(a[0]),
                ty(a[1])
            );
        } else {
            let mut pts = vec![v, a];
            // include the corner when the wedge wraps around it
            if a[0] >= w && b[1] >= w && (a[1] < w || b[0] < w) {
                pts.push([w, w]);
            }
            pts.push(b);
            let poly: Vec<String> = pts
                .iter()
                .map(|p| format!("{:.2},{:.2}", tx(p[0]), ty(p[1])))
                .collect();
            let _ = writeln!(
                out,
                r#"<polygon points="{}" fill="{fill}" fill-opacity="0.45" stroke="{fill}"/>"#,
                poly.join(" ")
            );
        }
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{fill}"/>"#,
            tx(v[0]),
            ty(v[1])
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Exact rational `s_max` from an integer.
pub fn s_max_of(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
