//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failed verification,
//! 2 on a usage error. Domain errors are reported as one JSON line on stderr.

use std::fs;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::covers::{
    all_covers, count_by_support_oracle, count_formula_corrected, count_formula_paper, cover_genus,
    intermediate_quotients, iso_classes, support_size_for_genus, CoverSpec,
};
use crate::curves::{base_genus, CyclicCurve};
use crate::equations::{
    base_equation, coordinate_change, cover_equations, rational_cover_from_factors,
    two_point_transform, verify_two_point_identity, Polynomial, TransformJson,
};
use crate::error::{Error, Result};
use crate::ff_linear::{ExponentVector, PrimeDegree};
use crate::rational::{format_rational, parse_rational};
use crate::verify::verify_curve;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-covers",
    version,
    about = "Strongly cyclic covers of prime-degree cyclic curves"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curve data and invariants.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Enumerate, classify and count strongly cyclic covers.
    #[command(subcommand)]
    Covers(CoversCommand),
    /// Defining equations.
    #[command(subcommand)]
    Equations(EquationsCommand),
    /// Coordinate change between two isomorphic covers.
    ChangeOfCoords {
        curve: String,
        #[arg(long, value_parser = parse_exponents, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        beta1: Vec<i64>,
        #[arg(long, value_parser = parse_exponents, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        beta2: Vec<i64>,
    },
    /// Two-point transform of the cover z^d = (x - a_i)(x - a_j)^(d-1).
    Transform {
        curve: String,
        #[arg(long = "i")]
        i: usize,
        #[arg(long = "j")]
        j: usize,
        /// Check the d-th power identity by exact expansion.
        #[arg(long)]
        verify: bool,
    },
    /// Cover defined over Q from a factorization y^d = f1 f2.
    RationalCover {
        #[arg(long)]
        d: u64,
        /// Comma-separated rational coefficients, lowest degree first.
        #[arg(long, allow_hyphen_values = true)]
        f1: String,
        #[arg(long, allow_hyphen_values = true)]
        f2: String,
    },
    /// Run every consistency check on a curve.
    Verify { curve: String },
}

#[derive(Debug, Subcommand)]
pub enum CurveCommand {
    Info { curve: String },
}

#[derive(Debug, Subcommand)]
pub enum CoversCommand {
    /// One cover per nonzero strongly cyclic torsion point.
    List { curve: String },
    /// Isomorphism classes of cover vectors.
    Classes { curve: String },
    /// Count cover vectors by support size.
    Count(CountArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["support", "genus"])))]
pub struct CountArgs {
    pub curve: String,
    #[arg(long)]
    pub support: Option<usize>,
    /// Genus of the quotient curve C_beta.
    #[arg(long)]
    pub genus: Option<u64>,
    /// Include multiples of alpha (which define no cover).
    #[arg(long)]
    pub include_trivial: bool,
}

#[derive(Debug, Subcommand)]
pub enum EquationsCommand {
    Base {
        curve: String,
    },
    Cover {
        curve: String,
        #[arg(long, value_parser = parse_exponents, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        beta: Vec<i64>,
    },
}

fn parse_exponents(s: &str) -> std::result::Result<i64, String> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| format!("{s:?} is not an integer"))
}

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(Outcome { text, ok }) => {
            let _ = writeln!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let line = json!({"error": e.kind(), "message": e.to_string()});
            let _ = writeln!(err, "{line}");
            1
        }
    }
}

struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn load_curve(arg: &str) -> Result<CyclicCurve> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Format(format!("cannot read {arg}: {e}")))?
    };
    CyclicCurve::from_json(&text)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

fn beta_vector(curve: &CyclicCurve, raw: &[i64]) -> Result<ExponentVector> {
    let entries = raw
        .iter()
        .map(|&e| u32::try_from(e).map_err(|_| Error::Format(format!("negative exponent {e}"))))
        .collect::<Result<Vec<_>>>()?;
    ExponentVector::from_residues(entries, curve.degree())
}

fn parse_coeffs(s: &str) -> Result<Polynomial> {
    let coeffs = s
        .split(',')
        .map(|c| parse_rational(c.trim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::from_coeffs(coeffs))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Curve(CurveCommand::Info { curve }) => {
            let curve = load_curve(curve)?;
            let g = base_genus(&curve);
            let eq = base_equation(&curve).to_text();
            let points: Vec<String> = curve.branch_points().iter().map(format_rational).collect();
            let torsion = (curve.degree().get() as u64).pow(curve.r() as u32 - 2);
            if json {
                return Ok(Outcome::ok(to_json(&json!({
                    "d": curve.degree().get(),
                    "r": curve.r(),
                    "genus": g,
                    "branch_points": points,
                    "exponents": curve.alpha(),
                    "equation": eq,
                    "strongly_cyclic_points": torsion,
                    "cover_genus": crate::covers::cover_genus_closed_form(curve.degree(), curve.r()),
                }))));
            }
            Ok(Outcome::ok(format!(
                "d: {}\nr: {}\ngenus: {g}\nbranch points: {}\nexponents: {}\nequation: {eq}\n\
                 strongly cyclic torsion points (with identity): {torsion}",
                curve.degree(),
                curve.r(),
                points.join(", "),
                curve.alpha(),
            )))
        }
        Command::Covers(CoversCommand::List { curve }) => {
            let curve = load_curve(curve)?;
            let covers = all_covers(&curve);
            let rows: Vec<_> = covers
                .iter()
                .map(|c| {
                    json!({
                        "beta": c.beta(),
                        "genus": cover_genus(c),
                        "quotients": intermediate_quotients(c),
                    })
                })
                .collect();
            if json {
                return Ok(Outcome::ok(to_json(
                    &json!({"count": covers.len(), "covers": rows}),
                )));
            }
            let mut lines = vec![format!("{} strongly cyclic covers", covers.len())];
            for c in &covers {
                let gs: Vec<String> = intermediate_quotients(c)
                    .iter()
                    .map(|q| q.genus.to_string())
                    .collect();
                lines.push(format!(
                    "beta={} genus={} quotient genera=[{}]",
                    c.beta(),
                    cover_genus(c),
                    gs.join(",")
                ));
            }
            Ok(Outcome::ok(lines.join("\n")))
        }
        Command::Covers(CoversCommand::Classes { curve }) => {
            let curve = load_curve(curve)?;
            let classes = iso_classes(&curve);
            if json {
                return Ok(Outcome::ok(to_json(
                    &json!({"count": classes.len(), "classes": classes}),
                )));
            }
            let mut lines = vec![format!("{} isomorphism classes", classes.len())];
            for c in &classes {
                let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
                let gs: Vec<String> = c.quotient_genera.iter().map(|g| g.to_string()).collect();
                lines.push(format!(
                    "class {} size={} quotient genera=[{}] members: {}",
                    c.canonical,
                    c.members.len(),
                    gs.join(","),
                    members.join(" ")
                ));
            }
            Ok(Outcome::ok(lines.join("\n")))
        }
        Command::Covers(CoversCommand::Count(args)) => {
            let curve = load_curve(&args.curve)?;
            let (d, r) = (curve.degree(), curve.r());
            let k = match (args.support, args.genus) {
                (Some(k), _) => {
                    if k > r {
                        return Err(Error::Format(format!("support {k} exceeds r = {r}")));
                    }
                    k
                }
                (None, Some(g0)) => support_size_for_genus(d, r, g0)?,
                (None, None) => unreachable!("clap enforces the group"),
            };
            let oracle = count_by_support_oracle(&curve, k, args.include_trivial);
            let corrected = count_formula_corrected(d, r, k);
            let paper = format_rational(&count_formula_paper(d, r, k));
            if json {
                let corrected: u64 = corrected
                    .try_into()
                    .map_err(|_| Error::Format("count does not fit in 64 bits".into()))?;
                return Ok(Outcome::ok(to_json(&CountReport {
                    k,
                    oracle,
                    formula_corrected: corrected,
                    formula_paper: paper,
                })));
            }
            Ok(Outcome::ok(format!(
                "k: {k}\noracle: {oracle}\nformula (corrected): {corrected}\nformula (as printed): {paper}"
            )))
        }
        Command::Equations(EquationsCommand::Base { curve }) => {
            let sys = base_equation(&load_curve(curve)?);
            Ok(Outcome::ok(if json {
                sys.to_json()
            } else {
                sys.to_text()
            }))
        }
        Command::Equations(EquationsCommand::Cover { curve, beta }) => {
            let curve = load_curve(curve)?;
            let cover = CoverSpec::new(&curve, beta_vector(&curve, beta)?)?;
            let sys = cover_equations(&cover);
            Ok(Outcome::ok(if json {
                sys.to_json()
            } else {
                sys.to_text()
            }))
        }
        Command::ChangeOfCoords {
            curve,
            beta1,
            beta2,
        } => {
            let curve = load_curve(curve)?;
            let b1 = beta_vector(&curve, beta1)?;
            let b2 = beta_vector(&curve, beta2)?;
            for b in [&b1, &b2] {
                CoverSpec::new(&curve, b.clone())?;
            }
            let cc = coordinate_change(curve.alpha(), &b1, &b2)?;
            let holds = cc.satisfies_identity(curve.alpha(), &b1, &b2)
                && cc.verify_by_expansion(&curve, &b1, &b2);
            let map = cc.to_text(curve.branch_points());
            if json {
                return Ok(Outcome {
                    text: to_json(&json!({
                        "j": cc.j,
                        "extraction_exponents": cc.extraction_exponents,
                        "root_of_unity_order": cc.root_of_unity_order(),
                        "map": map,
                        "identity_holds": holds,
                    })),
                    ok: holds,
                });
            }
            let ext: Vec<String> = cc
                .extraction_exponents
                .iter()
                .map(|e| e.to_string())
                .collect();
            Ok(Outcome {
                text: format!(
                    "{map}\nj: {}\nextraction exponents: ({})\nidentity: {}",
                    cc.j,
                    ext.join(","),
                    if holds { "PASS" } else { "FAIL" }
                ),
                ok: holds,
            })
        }
        Command::Transform {
            curve,
            i,
            j,
            verify,
        } => {
            let curve = load_curve(curve)?;
            let t = two_point_transform(&curve, *i, *j)?;
            let verified = verify.then(|| verify_two_point_identity(&curve, &t));
            let ok = verified != Some(false);
            if json {
                return Ok(Outcome {
                    text: to_json(&TransformReport {
                        transform: t.to_json_value(),
                        verified,
                    }),
                    ok,
                });
            }
            let mut text = t.to_text();
            if let Some(v) = verified {
                text.push_str(if v {
                    "\nidentity: PASS"
                } else {
                    "\nidentity: FAIL"
                });
            }
            Ok(Outcome { text, ok })
        }
        Command::RationalCover { d, f1, f2 } => {
            let d = PrimeDegree::new(*d)?;
            let sys = rational_cover_from_factors(d, &parse_coeffs(f1)?, &parse_coeffs(f2)?)?;
            Ok(Outcome::ok(if json {
                sys.to_json()
            } else {
                sys.to_text()
            }))
        }
        Command::Verify { curve } => {
            let curve = load_curve(curve)?;
            let report = verify_curve(&curve);
            if json {
                return Ok(Outcome {
                    text: to_json(&report),
                    ok: report.all_pass,
                });
            }
            let mut lines: Vec<String> = report
                .checks
                .iter()
                .map(|c| {
                    let status = if c.pass { "PASS" } else { "FAIL" };
                    if c.detail.is_empty() {
                        format!("{status} {}", c.name)
                    } else {
                        format!("{status} {} ({})", c.name, c.detail)
                    }
                })
                .collect();
            for a in &report.count_audit {
                lines.push(format!(
                    "AUDIT k={} oracle={} corrected={} as-printed={} {}",
                    a.k,
                    a.oracle,
                    a.formula_corrected,
                    a.formula_paper,
                    if a.paper_matches_oracle {
                        "agrees"
                    } else {
                        "DIFFERS"
                    }
                ));
            }
            Ok(Outcome {
                text: lines.join("\n"),
                ok: report.all_pass,
            })
        }
    }
}

#[derive(Serialize)]
struct CountReport {
    k: usize,
    oracle: u64,
    formula_corrected: u64,
    formula_paper: String,
}

#[derive(Serialize)]
struct TransformReport {
    #[serde(flatten)]
    transform: TransformJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}
