//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 malformed input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{self, Rational};
use crate::invariants::{self, Chamber, ChernVector, DtTrivialElliptic, MochizukiInput, SurfaceData};
use crate::lattice::{self, SurfaceLattice};
use crate::modular::{self, EisensteinWeight, FitResult, ThetaMethod};
use crate::series::QSeries;
use crate::verify::{self, Status, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_ORDER: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "enumgeo", version, about = "Exact q-series, lattice and wall-crossing computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OrderArg {
    /// Truncation order (highest q-power kept).
    #[arg(long, env = "ENUMGEO_ORDER", default_value_t = DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a q-series expansion.
    Expand(ExpandArgs),
    /// Run a golden verification suite.
    Verify {
        /// One of: all, series, modular, lattice, invariants, sw.
        suite: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Lattice queries.
    Lattice {
        #[command(subcommand)]
        query: LatticeQuery,
    },
    /// Seiberg–Witten and wall-crossing evaluations.
    Sw {
        #[command(subcommand)]
        query: SwQuery,
    },
    /// Fit η^e · P_w(E2, E4, E6) to target coefficients.
    #[command(allow_negative_numbers = true)]
    Fit {
        #[arg(long)]
        weight: Option<i64>,
        #[arg(long)]
        eta_exponent: Option<i64>,
        /// Comma-separated `exponent:value` pairs, e.g. `0:-1/8,1:18441/2`.
        #[arg(long, allow_hyphen_values = true)]
        targets: Option<String>,
        /// Built-in target set; `half-k3-z2` uses the four known coefficients of q·Z₂.
        #[arg(long, conflicts_with = "targets")]
        preset: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpandTarget {
    EtaQuotient,
    Eisenstein,
    ThetaE8,
    HilbEuler,
    Goettsche,
    BryanLeung,
    #[value(name = "half-k3-z1")]
    HalfK3Z1,
    EllipticGenus1,
    DtTrivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Lattice,
    Eisenstein,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub target: ExpandTarget,
    #[command(flatten)]
    pub order: OrderArg,
    /// η exponent for eta-quotient.
    #[arg(long)]
    pub exponent: Option<i64>,
    /// Eisenstein weight (2, 4 or 6).
    #[arg(long)]
    pub weight: Option<i64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Eisenstein)]
    pub method: MethodArg,
    /// Named surface: p2, k3, b9.
    #[arg(long)]
    pub surface: Option<String>,
    /// Betti numbers b0,b1,b2,b3,b4.
    #[arg(long)]
    pub betti: Option<String>,
    /// Euler number (hilb-euler only).
    #[arg(long)]
    pub chi: Option<i64>,
    /// Genus for bryan-leung.
    #[arg(long)]
    pub genus: Option<u32>,
    /// Fibre degree n for dt-trivial.
    #[arg(long)]
    pub n: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct LatticeChoice {
    /// gamma19, gamma11, e8, e8-minus or blowup:K.
    #[arg(long, default_value = "gamma19")]
    pub lattice: String,
    /// Read the lattice from a JSON file instead.
    #[arg(long, conflicts_with = "lattice")]
    pub lattice_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum LatticeQuery {
    /// Intersection pairing u·v.
    #[command(allow_hyphen_values = true)]
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[command(flatten)]
        lattice: LatticeChoice,
    },
    /// Adjunction genus of a class.
    Genus {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[command(flatten)]
        lattice: LatticeChoice,
    },
    Signature {
        #[command(flatten)]
        lattice: LatticeChoice,
    },
    /// Print the lattice as JSON.
    Gram {
        #[command(flatten)]
        lattice: LatticeChoice,
    },
    /// Count vectors by norm in a positive-definite lattice.
    Enumerate {
        #[arg(long)]
        norm_max: i64,
        #[arg(long, default_value = "e8")]
        lattice: String,
        #[arg(long, conflicts_with = "lattice")]
        lattice_file: Option<PathBuf>,
    },
    /// (−1)-classes on ℙ² blown up at k points.
    Exceptional {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        bound: i64,
    },
    /// Genus, point count and admissibility from β² and K·β.
    #[command(allow_negative_numbers = true)]
    Gromov {
        #[arg(long)]
        beta_sq: i64,
        #[arg(long)]
        k_beta: i64,
    },
}

#[derive(Subcommand, Debug)]
#[command(allow_negative_numbers = true)]
pub enum SwQuery {
    /// SW invariant of ℙ² for c = C·h in a chamber.
    #[command(allow_negative_numbers = true)]
    P2 {
        #[arg(long)]
        c: i64,
        /// plus/minus (or + / -).
        #[arg(long, allow_hyphen_values = true)]
        chamber: String,
    },
    /// (−1)^d · C(p_g − 1, d).
    #[command(allow_negative_numbers = true)]
    ClosedForm {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        pg: i64,
    },
    /// (c² − 2χ − 3σ)/4.
    #[command(allow_negative_numbers = true)]
    Dimension {
        #[arg(long)]
        c_sq: i64,
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        sigma: i64,
    },
    /// Wall-crossing sum from a decomposition file.
    #[command(allow_negative_numbers = true)]
    Mochizuki {
        #[arg(long)]
        file: PathBuf,
        /// Externally supplied DT̂ term; when given, the assembled DT̄ is printed too.
        #[arg(long, allow_hyphen_values = true)]
        dt_hat: Option<String>,
    },
    /// Riemann–Roch χ(v).
    #[command(allow_negative_numbers = true)]
    ChiV {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        a_k: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        chi_o: i64,
    },
    /// a² − 4n − 3χ(O).
    #[command(allow_negative_numbers = true)]
    VirtualDim {
        #[arg(long)]
        a_sq: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        chi_o: i64,
    },
    /// Mochizuki part + DT̂.
    #[command(allow_negative_numbers = true)]
    Assemble {
        #[arg(long, allow_hyphen_values = true)]
        mochizuki: String,
        #[arg(long, allow_hyphen_values = true)]
        dt_hat: String,
    },
}

/// A usage or input problem; reported on stderr with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, UsageError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Expand(a) => expand(a, json),
        Command::Verify { suite, order } => {
            let s = Suite::parse(suite).ok_or_else(|| {
                UsageError(format!("unknown suite {suite:?}; expected one of {}", Suite::NAMES.join(", ")))
            })?;
            let reports = verify::run_suite(s, order.order);
            let code = if verify::any_failed(&reports) {
                EXIT_VERIFY_FAILED
            } else {
                EXIT_OK
            };
            let text = if json {
                to_json(&reports)?
            } else {
                let mut t = String::new();
                for r in &reports {
                    match r.status {
                        Status::Pass => t.push_str(&format!("{:<8}{}: {}\n", r.status, r.check_name, r.actual)),
                        _ => t.push_str(&format!(
                            "{:<8}{}\n        expected: {}\n        actual:   {}\n        note:     {}\n",
                            r.status, r.check_name, r.expected, r.actual, r.citation
                        )),
                    }
                }
                let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
                t.push_str(&format!(
                    "{} passed, {} failed, {} flagged\n",
                    count(Status::Pass),
                    count(Status::Fail),
                    count(Status::Flagged)
                ));
                t
            };
            Ok(Output { text, code })
        }
        Command::Lattice { query } => lattice_query(query, json),
        Command::Sw { query } => sw_query(query, json),
        Command::Fit {
            weight,
            eta_exponent,
            targets,
            preset,
        } => fit(*weight, *eta_exponent, targets.as_deref(), preset.as_deref(), json),
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> Result<String, UsageError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn series_text(s: &QSeries) -> String {
    let mut t = String::new();
    if !num_traits::Zero::is_zero(s.shift()) {
        t.push_str(&format!("# shift {}\n", arith::fmt_rational(s.shift())));
    }
    let coeffs: Vec<String> = s.coeffs().iter().map(arith::fmt_rational).collect();
    t.push_str(&coeffs.join(", "));
    t.push('\n');
    t
}

fn emit_series(s: &QSeries, json: bool) -> Result<Output, UsageError> {
    Ok(Output::ok(if json { to_json(s)? } else { series_text(s) }))
}

fn surface_from(a: &ExpandArgs) -> Result<SurfaceData, UsageError> {
    match (&a.surface, &a.betti) {
        (Some(_), Some(_)) => Err(UsageError("give either --surface or --betti, not both".into())),
        (Some(name), None) => SurfaceData::by_name(name)
            .ok_or_else(|| UsageError(format!("unknown surface {name:?}; expected p2, k3 or b9"))),
        (None, Some(b)) => {
            let parts: Vec<i64> = b
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<_, _>>()?;
            let betti: [i64; 5] = parts
                .try_into()
                .map_err(|_| UsageError("--betti needs exactly five numbers".into()))?;
            // χ(O) only matters for the wall-crossing side; choose the b1 = 0 value
            let p_g = ((betti[2] - 1) / 2).max(0);
            let chi_o = if betti[1] == 0 { 1 + p_g } else { 0 };
            Ok(SurfaceData::new(betti, chi_o, p_g)?)
        }
        (None, None) => Err(UsageError("missing --surface or --betti".into())),
    }
}

fn expand(a: &ExpandArgs, json: bool) -> Result<Output, UsageError> {
    let order = a.order.order;
    match a.target {
        ExpandTarget::EtaQuotient => {
            let e = a.exponent.ok_or_else(|| UsageError("eta-quotient needs --exponent".into()))?;
            emit_series(&modular::eta_quotient(e, order), json)
        }
        ExpandTarget::Eisenstein => {
            let w = a.weight.ok_or_else(|| UsageError("eisenstein needs --weight".into()))?;
            emit_series(&modular::eisenstein(EisensteinWeight::new(w)?, order), json)
        }
        ExpandTarget::ThetaE8 => {
            let method = match a.method {
                MethodArg::Lattice => ThetaMethod::Lattice,
                MethodArg::Eisenstein => ThetaMethod::Eisenstein,
            };
            emit_series(&modular::theta_e8(order, method)?, json)
        }
        ExpandTarget::HilbEuler => {
            let s = match a.chi {
                Some(chi) => invariants::hilb_euler_from_chi(chi, order),
                None => invariants::hilb_euler_series(&surface_from(a)?, order),
            };
            emit_series(&s, json)
        }
        ExpandTarget::Goettsche => {
            let b = invariants::goettsche_series(&surface_from(a)?, order);
            Ok(Output::ok(if json { to_json(&b)? } else { b.to_string() }))
        }
        ExpandTarget::BryanLeung => {
            emit_series(&invariants::bryan_leung_series(a.genus.unwrap_or(0), order), json)
        }
        ExpandTarget::HalfK3Z1 => emit_series(&invariants::half_k3_z1(order), json),
        ExpandTarget::EllipticGenus1 => {
            let c = invariants::elliptic_genus1_coeffs(order.max(1));
            Ok(Output::ok(if json {
                to_json(&c.iter().map(arith::rational_to_pair).collect::<Vec<_>>())?
            } else {
                format!("{}\n", c.iter().map(arith::fmt_rational).collect::<Vec<_>>().join(", "))
            }))
        }
        ExpandTarget::DtTrivial => {
            let n = a.n.unwrap_or(0);
            match invariants::dt_trivial_elliptic(&surface_from(a)?, n, order) {
                DtTrivialElliptic::Zero => Ok(Output::ok(if json {
                    to_json(&serde_json::json!({"zero": true, "n": n}))?
                } else {
                    "0\n".to_string()
                })),
                DtTrivialElliptic::Series(s) => emit_series(&s, json),
            }
        }
    }
}

fn load_lattice(name: &str, file: Option<&PathBuf>) -> Result<SurfaceLattice, UsageError> {
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        return Ok(serde_json::from_str(&text)?);
    }
    match name {
        "gamma19" | "b9" => Ok(lattice::make_gamma19()),
        "gamma11" => Ok(lattice::make_gamma11()),
        "e8" => Ok(lattice::make_e8()),
        "e8-minus" => Ok(lattice::make_e8_minus()),
        other => {
            if let Some(k) = other.strip_prefix("blowup:") {
                let k: usize = k.parse()?;
                return Ok(SurfaceLattice::blowup_p2(k));
            }
            Err(UsageError(format!(
                "unknown lattice {other:?}; expected gamma19, gamma11, e8, e8-minus or blowup:K"
            )))
        }
    }
}

fn scalar<T: Serialize + ToString>(v: T, json: bool) -> Result<Output, UsageError> {
    Ok(Output::ok(if json { to_json(&v)? } else { format!("{}\n", v.to_string()) }))
}

fn lattice_query(q: &LatticeQuery, json: bool) -> Result<Output, UsageError> {
    match q {
        LatticeQuery::Pair { u, v, lattice: c } => {
            let l = load_lattice(&c.lattice, c.lattice_file.as_ref())?;
            scalar(l.pair(&l.parse_vector(u)?, &l.parse_vector(v)?)?, json)
        }
        LatticeQuery::Genus { beta, lattice: c } => {
            let l = load_lattice(&c.lattice, c.lattice_file.as_ref())?;
            scalar(l.adjunction_genus(&l.parse_vector(beta)?)?, json)
        }
        LatticeQuery::Signature { lattice: c } => {
            let l = load_lattice(&c.lattice, c.lattice_file.as_ref())?;
            let (p, q) = l.signature()?;
            Ok(Output::ok(if json {
                to_json(&serde_json::json!({"p": p, "q": q}))?
            } else {
                format!("({p}, {q})\n")
            }))
        }
        LatticeQuery::Gram { lattice: c } => {
            let l = load_lattice(&c.lattice, c.lattice_file.as_ref())?;
            Ok(Output::ok(to_json(&l)?))
        }
        LatticeQuery::Enumerate {
            norm_max,
            lattice: name,
            lattice_file,
        } => {
            let l = load_lattice(name, lattice_file.as_ref())?;
            let counts = lattice::enumerate_vectors(&l, *norm_max)?;
            Ok(Output::ok(if json {
                to_json(&counts)?
            } else {
                counts.iter().map(|(n, c)| format!("{n} {c}\n")).collect()
            }))
        }
        LatticeQuery::Exceptional { k, bound } => {
            if !(1..=8).contains(k) {
                return Err(UsageError(format!("--k must be in 1..8, got {k}")));
            }
            let classes = lattice::exceptional_classes(*k, *bound);
            Ok(Output::ok(if json {
                to_json(&serde_json::json!({
                    "k": k, "bound": bound, "count": classes.len(), "classes": classes
                }))?
            } else {
                let mut t = format!("{}\n", classes.len());
                for c in &classes {
                    t.push_str(&format!("{:?}\n", c.0));
                }
                t
            }))
        }
        LatticeQuery::Gromov { beta_sq, k_beta } => {
            let g = invariants::gromov_conditions(*beta_sq, *k_beta)?;
            Ok(Output::ok(if json {
                to_json(&g)?
            } else {
                format!(
                    "genus {}\nn_points {}\ntoroidal {}\nadmissible {}\n",
                    g.genus, g.n_points, g.toroidal, g.admissible
                )
            }))
        }
    }
}

fn parse_rat(s: &str) -> Result<Rational, UsageError> {
    arith::parse_rational(s).ok_or_else(|| UsageError(format!("not a rational number: {s:?}")))
}

fn rational_out(r: &Rational, json: bool) -> Result<Output, UsageError> {
    Ok(Output::ok(if json {
        to_json(&arith::rational_to_pair(r))?
    } else {
        format!("{}\n", arith::fmt_rational(r))
    }))
}

fn sw_query(q: &SwQuery, json: bool) -> Result<Output, UsageError> {
    match q {
        SwQuery::P2 { c, chamber } => {
            let ch = match chamber.as_str() {
                "+" | "plus" => Chamber::Plus,
                "-" | "minus" => Chamber::Minus,
                other => return Err(UsageError(format!("chamber must be plus or minus, got {other:?}"))),
            };
            scalar(invariants::sw_p2(*c, ch)?, json)
        }
        SwQuery::ClosedForm { d, pg } => {
            let v = invariants::sw_closed_form(*d, *pg)?;
            Ok(Output::ok(if json {
                to_json(&v.to_string())?
            } else {
                format!("{v}\n")
            }))
        }
        SwQuery::Dimension { c_sq, chi, sigma } => {
            rational_out(&invariants::sw_dimension(*c_sq, *chi, *sigma), json)
        }
        SwQuery::Mochizuki { file, dt_hat } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
            let input: MochizukiInput = serde_json::from_str(&text)?;
            let outcome = invariants::mochizuki_sum(&input)?;
            let assembled = dt_hat
                .as_deref()
                .map(parse_rat)
                .transpose()?
                .map(|d| invariants::sw_dt_assemble(&outcome.value, &d));
            Ok(Output::ok(if json {
                let mut v = serde_json::to_value(&outcome)?;
                if let Some(a) = &assembled {
                    v["dt_bar"] = serde_json::to_value(arith::rational_to_pair(a))?;
                }
                to_json(&v)?
            } else {
                let mut t = format!("{}\n", arith::fmt_rational(&outcome.value));
                if let Some(a) = &assembled {
                    t.push_str(&format!("dt_bar {}\n", arith::fmt_rational(a)));
                }
                for w in &outcome.warnings {
                    t.push_str(&format!("warning: {}\n", serde_json::to_value(w)?.as_str().unwrap_or("")));
                }
                t
            }))
        }
        SwQuery::ChiV { r, a_k, n, chi_o } => {
            let v = ChernVector { r: *r, a_h: 0, a_k: *a_k, a_sq: 0, n: parse_rat(n)? };
            rational_out(&invariants::chi_v(&v, *chi_o), json)
        }
        SwQuery::VirtualDim { a_sq, n, chi_o } => {
            let v = ChernVector { r: 2, a_h: 0, a_k: 0, a_sq: *a_sq, n: parse_rat(n)? };
            scalar(invariants::virtual_dim(&v, *chi_o)?, json)
        }
        SwQuery::Assemble { mochizuki, dt_hat } => rational_out(
            &invariants::sw_dt_assemble(&parse_rat(mochizuki)?, &parse_rat(dt_hat)?),
            json,
        ),
    }
}

fn parse_targets(s: &str) -> Result<Vec<(i64, Rational)>, UsageError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p
                .split_once(':')
                .ok_or_else(|| UsageError(format!("target {p:?} is not exponent:value")))?;
            Ok((k.trim().parse()?, parse_rat(v)?))
        })
        .collect()
}

fn fit_text(f: &FitResult) -> String {
    let mut t = format!(
        "consistent {}\nnullspace_dim {}\n",
        f.consistent,
        f.nullspace.len()
    );
    t.push_str("particular:\n");
    for (m, c) in f.basis.monomials.iter().zip(&f.particular) {
        t.push_str(&format!("  {} {}\n", m, arith::fmt_rational(c)));
    }
    for (i, v) in f.nullspace.iter().enumerate() {
        t.push_str(&format!("nullspace[{i}]:\n"));
        for (m, c) in f.basis.monomials.iter().zip(v) {
            t.push_str(&format!("  {} {}\n", m, arith::fmt_rational(c)));
        }
    }
    t
}

fn fit(
    weight: Option<i64>,
    eta_exponent: Option<i64>,
    targets: Option<&str>,
    preset: Option<&str>,
    json: bool,
) -> Result<Output, UsageError> {
    let (w, e, t) = match preset {
        Some("half-k3-z2") => (
            weight.unwrap_or(10),
            eta_exponent.unwrap_or(-24),
            modular::half_k3_z2_targets(),
        ),
        Some(other) => return Err(UsageError(format!("unknown preset {other:?}; expected half-k3-z2"))),
        None => (
            weight.ok_or_else(|| UsageError("fit needs --weight".into()))?,
            eta_exponent.unwrap_or(0),
            parse_targets(targets.ok_or_else(|| UsageError("fit needs --targets or --preset".into()))?)?,
        ),
    };
    let result = modular::fit_quasi_homogeneous(w, e, &t)?;
    Ok(Output::ok(if json { to_json(&result)? } else { fit_text(&result) }))
}
