//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::charvar;
use crate::error::{Error, Result};
use crate::experiment::{self, FigureFormat};
use crate::fan;
use crate::groebner::{initial_ideal_comm, reduced_groebner, reference_order};
use crate::json;
use crate::order::{Degree, OrderSpec, Weight};
use crate::parse::{parse_poly, parse_weyl};
use crate::poly::Poly;
use crate::weyl::WeylElement;
use crate::Rational;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "weylcone", version, about = "Gröbner bases and characteristic ideals in Weyl algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Weyl,
    Comm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args, Debug, Clone)]
pub struct Ideal {
    /// Number of variable pairs.
    #[arg(long)]
    pub n: usize,
    /// Generators; `x`, `d` (n = 1) or `x1`, `d1`, ... in the Weyl algebra,
    /// `X`, `Y` resp. `X1`, `Y1`, ... in the commutative ring.
    pub exprs: Vec<String>,
    /// Read further generators from a file, one per line, `#` starts a comment.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        ideal: Ideal,
        /// `lex` or a weight chain `w1,w2;v1,v2` over lex.
        #[arg(long, default_value = "lex")]
        order: String,
        /// Extra outermost weight refinement.
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum, default_value = "weyl")]
        ring: Ring,
    },
    /// Initial ideal `Gr^ω L` (Weyl) or `Gr^ν I` (commutative).
    In {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "weyl")]
        ring: Ring,
    },
    /// Slope fan of an ideal of the first Weyl algebra.
    Fan {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Universal Gröbner basis (n = 1).
    Ugb {
        #[command(flatten)]
        ideal: Ideal,
        /// Check against this many random orders.
        #[arg(long, default_value_t = 0)]
        check: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Number of distinct initial ideals and the support bound.
    Chi {
        #[command(flatten)]
        ideal: Ideal,
    },
    /// `γ_ν` over the universal basis.
    Gamma {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long)]
        nu: String,
    },
    /// Characteristic ideal `Gr^ω L`.
    Charvar {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long)]
        weight: String,
    },
    /// Critical cone ideal `Gr^{(1…1)} Gr^ω L`.
    Cone {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long)]
        weight: String,
    },
    /// Check `Gr^ν Gr^ω L = Gr^{ν+sω} L`. Exit code 1 on failure.
    Stab {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long)]
        nu: String,
        /// Single weight ω; otherwise the grid is used.
        #[arg(long)]
        weight: Option<String>,
        /// Single shift s; otherwise 1..=γ+tail.
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, default_value_t = 7)]
        grid: u64,
        #[arg(long, default_value_t = 5)]
        tail: u64,
    },
    /// Krull dimension of `ℚ[X,Y]/Gr^ω L` ("-inf" for the zero ring). With
    /// `--grid` checks constancy over the grid; exit code 1 on failure.
    Dim {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        grid: Option<u64>,
    },
    /// Half-line colouring experiment.
    Experiment {
        #[arg(long, default_value_t = 3)]
        s0: u64,
        #[arg(long, default_value_t = experiment::DEFAULT_WINDOW)]
        window: u64,
        /// Integer or `p/q`.
        #[arg(long, default_value = "100")]
        smax: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Parse generators and print their canonical forms.
    ParseCheck {
        #[command(flatten)]
        ideal: Ideal,
        #[arg(long, value_enum, default_value = "weyl")]
        ring: Ring,
    },
}

/// Result of a command: output text and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn parse_weight(text: &str, n: usize) -> Result<Weight> {
    let w: Weight = text.parse()?;
    w.ensure_arity(n)?;
    Ok(w)
}

/// `lex` or `w1,w2;v1,v2` (outermost weight first) over lex.
pub fn parse_order(text: &str, n: usize) -> Result<OrderSpec> {
    let text = text.trim();
    if text == "lex" {
        return Ok(OrderSpec::lex(n));
    }
    let weights = text
        .split(';')
        .map(|w| parse_weight(w, n))
        .collect::<Result<Vec<_>>>()?;
    OrderSpec::weight_chain(n, weights)
}

fn read_sources(ideal: &Ideal) -> Result<Vec<(String, usize)>> {
    let mut out: Vec<(String, usize)> = ideal.exprs.iter().map(|e| (e.clone(), 1)).collect();
    if let Some(path) = &ideal.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                out.push((line.to_string(), i + 1));
            }
        }
    }
    Ok(out)
}

fn with_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { line: l, column, message } => Error::Parse {
            line: l + line - 1,
            column,
            message,
        },
        other => other,
    }
}

pub fn read_weyl(ideal: &Ideal) -> Result<Vec<WeylElement>> {
    read_sources(ideal)?
        .into_iter()
        .map(|(t, line)| parse_weyl(&t, ideal.n).map_err(|e| with_line(e, line)))
        .collect()
}

pub fn read_poly(ideal: &Ideal) -> Result<Vec<Poly>> {
    read_sources(ideal)?
        .into_iter()
        .map(|(t, line)| parse_poly(&t, ideal.n).map_err(|e| with_line(e, line)))
        .collect()
}

fn dim_text(d: Degree) -> String {
    d.to_string()
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Gb { ideal, order, weight, ring } => {
            let n = ideal.n;
            let mut o = parse_order(order, n)?;
            if let Some(w) = weight {
                o = o.refine(&parse_weight(w, n)?)?;
            }
            let basis = match ring {
                Ring::Weyl => json::elements(&reduced_groebner(&read_weyl(ideal)?, &o).elements),
                Ring::Comm => json::elements(&reduced_groebner(&read_poly(ideal)?, &o).elements),
            };
            Ok(Outcome::ok(to_json(&json!({ "basis": basis }))))
        }
        Command::In { ideal, weight, ring } => {
            let n = ideal.n;
            let w = parse_weight(weight, n)?;
            let gens = match ring {
                Ring::Weyl => charvar::char_ideal(&read_weyl(ideal)?, n, &w)?.reduced_gb,
                Ring::Comm => {
                    let g = initial_ideal_comm(&read_poly(ideal)?, &w, &OrderSpec::lex(n))?;
                    reduced_groebner(&g, &reference_order(n)).elements
                }
            };
            Ok(Outcome::ok(to_json(&json!({ "weight": w, "initial": json::elements(&gens) }))))
        }
        Command::Fan { ideal, format } => {
            let f = fan::fan_1d(&read_weyl(ideal)?)?;
            let text = match format {
                Format::Json => to_json(&json::fan_cones(&f)),
                Format::Csv => json::fan_csv(&f),
                Format::Svg => return Err(Error::usage("fan supports json and csv")),
            };
            Ok(Outcome::ok(text))
        }
        Command::Ugb { ideal, check, seed } => {
            let gens = read_weyl(ideal)?;
            let u = fan::ugb(&gens)?;
            let mut out = json!({ "ugb": json::elements(&u.elements) });
            let mut code = 0;
            if *check > 0 {
                let ok = fan::random_orders(ideal.n, *check, *seed)
                    .iter()
                    .all(|o| fan::is_groebner_basis_for(&gens, &u.elements, o));
                out["check"] = json!({ "orders": check, "seed": seed, "pass": ok });
                code = if ok { 0 } else { 1 };
            }
            Ok(Outcome { text: to_json(&out), code })
        }
        Command::Chi { ideal } => Ok(Outcome::ok(to_json(&fan::chi(&read_weyl(ideal)?)?))),
        Command::Gamma { ideal, nu } => {
            let nu = parse_weight(nu, ideal.n)?;
            let g = charvar::stabilization_gamma(&read_weyl(ideal)?, ideal.n, &nu)?;
            Ok(Outcome::ok(to_json(&json!({ "nu": nu, "gamma": g }))))
        }
        Command::Charvar { ideal, weight } => {
            let w = parse_weight(weight, ideal.n)?;
            let ci = charvar::char_ideal(&read_weyl(ideal)?, ideal.n, &w)?;
            Ok(Outcome::ok(to_json(&json!({
                "omega": ci.omega,
                "gens": json::elements(&ci.gens),
                "reduced_gb": json::elements(&ci.reduced_gb),
            }))))
        }
        Command::Cone { ideal, weight } => {
            let w = parse_weight(weight, ideal.n)?;
            let c = charvar::critical_cone_ideal(&read_weyl(ideal)?, ideal.n, &w)?;
            Ok(Outcome::ok(to_json(&json!({ "omega": w, "cone": json::elements(&c) }))))
        }
        Command::Stab { ideal, nu, weight, s, grid, tail } => {
            let n = ideal.n;
            let gens = read_weyl(ideal)?;
            let nu = parse_weight(nu, n)?;
            let omegas = match weight {
                Some(w) => vec![parse_weight(w, n)?],
                None => fan::grid_weights(n, *grid)?,
            };
            if let Some(s) = s {
                if *s == 0 {
                    return Err(Error::usage("--s must be positive"));
                }
                let results = omegas
                    .iter()
                    .map(|w| Ok(json!({ "omega": w, "s": s, "pass": charvar::stabilization_check(&gens, n, &nu, w, *s)? })))
                    .collect::<Result<Vec<_>>>()?;
                let ok = results.iter().all(|r| r["pass"] == true);
                return Ok(Outcome {
                    text: to_json(&results),
                    code: if ok { 0 } else { 1 },
                });
            }
            let reports = charvar::verify_stabilization(&gens, n, &nu, &omegas, *tail)?;
            let ok = reports.iter().all(|r| r.all_pass_beyond_gamma);
            Ok(Outcome {
                text: to_json(&json!({
                    "reports": reports,
                    "kappa_hat": charvar::kappa_of(&reports),
                    "pass": ok,
                })),
                code: if ok { 0 } else { 1 },
            })
        }
        Command::Dim { ideal, weight, grid } => {
            let n = ideal.n;
            let gens = read_weyl(ideal)?;
            match (weight, grid) {
                (Some(w), None) => {
                    let d = charvar::dim_char_variety(&gens, n, &parse_weight(w, n)?)?;
                    Ok(Outcome::ok(dim_text(d)))
                }
                (None, Some(g)) => {
                    let omegas = fan::grid_weights(n, *g)?;
                    let values = charvar::dimension_values(&gens, n, &omegas)?;
                    let constant = values.windows(2).all(|p| p[0] == p[1]);
                    let text = if constant {
                        values.first().map(|d| dim_text(*d)).unwrap_or_default()
                    } else {
                        let set: std::collections::BTreeSet<String> =
                            values.iter().map(|d| dim_text(*d)).collect();
                        format!("not constant: {}", set.into_iter().collect::<Vec<_>>().join(" "))
                    };
                    Ok(Outcome { text, code: if constant { 0 } else { 1 } })
                }
                _ => Err(Error::usage("dim needs exactly one of --weight and --grid")),
            }
        }
        Command::Experiment { s0, window, smax, format } => {
            let s_max: Rational = smax
                .trim()
                .parse()
                .map_err(|_| Error::usage(format!("invalid --smax {smax:?}")))?;
            let e = experiment::halfline_cones(*s0, *window, &s_max)?;
            let text = match format {
                Format::Json => to_json(&e),
                Format::Csv => experiment::emit_figure(&e.classes, *window, FigureFormat::Csv),
                Format::Svg => experiment::emit_figure(&e.classes, *window, FigureFormat::Svg),
            };
            Ok(Outcome::ok(text))
        }
        Command::ParseCheck { ideal, ring } => {
            let canon: Vec<String> = match ring {
                Ring::Weyl => read_weyl(ideal)?.iter().map(|g| g.to_string()).collect(),
                Ring::Comm => read_poly(ideal)?.iter().map(|g| g.to_string()).collect(),
            };
            Ok(Outcome::ok(canon.join("\n")))
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text.trim_end());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
