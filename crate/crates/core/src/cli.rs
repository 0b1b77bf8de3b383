//! Command-line surface. Every command renders its whole output before
//! anything is written, so failures leave no partial output.

use std::io::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::braid::{Artin, Braid};
use crate::conjcat::{delta_automorphism, CycCategory, DEFAULT_MAX_NODES};
use crate::coxeter::{Automorphism, CoxeterSystem, Side, Subset};
use crate::error::Error;
use crate::format::{parse_subset, parse_word};
use crate::periodic::{
    self, classify_good, good_checks, lift, maximality_with_tolerance, relative_section, restriction_of_scalars,
    slide_to_good, Limits, BRUTE_FORCE_BOUND,
};
use crate::ribbon::Ribbon;
use crate::verify;

/// Groups larger than this need `--allow-huge` for enumerations.
pub const HUGE_ORDER: u128 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "garside", about = "Garside normal forms, ribbon categories and periodic braids")]
pub struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Node cap for graph exploration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: usize,
    /// Eigenvalue tolerance.
    #[arg(long, global = true, default_value_t = periodic::TOLERANCE)]
    pub tolerance: f64,
    /// Allow enumerations in groups of order above one million.
    #[arg(long, global = true)]
    pub allow_huge: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Pair {
    pub r#type: String,
    pub a: String,
    pub b: String,
    /// Use the right-handed version.
    #[arg(long)]
    pub right: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Left greedy normal form of a word.
    Normal { r#type: String, word: String },
    /// Left gcd (right gcd with --right).
    Gcd(Pair),
    /// Right lcm (left lcm with --right).
    Lcm(Pair),
    /// Whether A left-divides B (right-divides with --right).
    Divides(Pair),
    /// `α_I(b)` and `ω_I(b)`.
    RibbonAlpha {
        r#type: String,
        word: String,
        #[arg(long)]
        i: String,
    },
    /// Atoms of the ribbon category with source I.
    RibbonAtoms {
        r#type: String,
        #[arg(long)]
        i: String,
    },
    /// Component of the cyclic conjugacy category.
    ConjGraph {
        r#type: String,
        word: String,
        #[arg(long, default_value = "")]
        source: String,
        /// Twisting automorphism: `phi`, `delta`, `id`, `phi^k` or products with `*`.
        #[arg(long, default_value = "phi")]
        twist: String,
        /// Keep only conjugators fixed by this automorphism.
        #[arg(long)]
        fixed: Option<String>,
        /// Emit DOT to the given path, `-` for stdout.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Indecomposable endomorphisms of an object.
    EndoGens {
        r#type: String,
        word: String,
        #[arg(long, default_value = "")]
        source: String,
        #[arg(long, default_value = "phi")]
        twist: String,
        #[arg(long)]
        fixed: Option<String>,
        /// Canonical length bound.
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Periodicity, goodness and maximality of `I --w--> φ(I)`.
    PeriodicCheck {
        r#type: String,
        word: String,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "")]
        i: String,
    },
    /// Cyclic conjugation of a periodic braid to a good one.
    Slide {
        r#type: String,
        word: String,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "")]
        i: String,
    },
    /// Good maximal elements: a certificate with --w, else the table.
    Good {
        r#type: String,
        #[arg(long)]
        d: Option<u32>,
        /// Print only the counts per I.
        #[arg(long)]
        count: bool,
        /// Certify this element with --i.
        #[arg(long)]
        w: Option<String>,
        #[arg(long, default_value = "")]
        i: String,
        /// Representatives listed per row.
        #[arg(long, default_value_t = 3)]
        representatives: usize,
    },
    /// Good element of the restriction of scalars `Wⁿ·σ`.
    Restrict {
        r#type: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Connectivity and first homology of the decomposition poset.
    PosetCheck {
        r#type: String,
        word: String,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. } | Error::UnknownType(_) | Error::InvalidTwist(_) | Error::RankOutOfRange(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn system(t: &str) -> Res<CoxeterSystem> {
    Ok(CoxeterSystem::build(t)?)
}

fn braid(a: &Artin<'_>, w: &str) -> Res<Braid> {
    Ok(a.from_word(&parse_word(w, a.sys.rank())?)?)
}

fn subset(sys: &CoxeterSystem, s: &str) -> Res<Subset> {
    Ok(parse_subset(s, sys.rank())?)
}

/// `phi`, `delta`, `id`, `phi^k`, and `*`-products of those.
pub fn parse_automorphism(sys: &CoxeterSystem, s: &str) -> Result<Automorphism, Error> {
    let mut acc = sys.phi.pow(0);
    for part in s.split('*') {
        let part = part.trim();
        let (base, k) = match part.split_once('^') {
            Some((b, k)) => (b, k.parse::<i64>().map_err(|_| Error::InvalidTwist(s.to_string()))?),
            None => (part, 1),
        };
        let f = match base {
            "phi" => sys.phi.clone(),
            "delta" => delta_automorphism(sys),
            "id" => sys.phi.pow(0),
            _ => return Err(Error::InvalidTwist(s.to_string())),
        };
        acc = acc.compose(&f.pow(k));
    }
    Ok(acc)
}

fn pretty(v: &Value) -> String {
    if v.as_object().is_some_and(|o| o.len() == 1 && o.get("rows").is_some_and(|r| r.as_array().is_some_and(|a| a.is_empty()))) {
        return "{\"rows\":[]}\n".to_string();
    }
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn check_size(sys: &CoxeterSystem, allow: bool) -> Res<()> {
    if sys.order() > HUGE_ORDER && !allow {
        return Err(Failure::Domain(format!(
            "|W({})| = {} exceeds {HUGE_ORDER}; pass --allow-huge",
            sys.name,
            sys.order()
        )));
    }
    Ok(())
}

/// The `d` with non-zero `ζ_d`-rank on the coset, decreasing.
pub fn admissible_ds(sys: &CoxeterSystem) -> Vec<u32> {
    let top = sys.degrees.iter().max().copied().unwrap_or(1) * sys.delta();
    (1..=top).rev().filter(|&d| sys.coset_zeta_rank(1, d as u64) > 0).collect()
}

fn good_tables(sys: &CoxeterSystem, ds: &[u32], count: bool, reps: usize) -> Res<Value> {
    let limits = Limits { max_representatives: reps, sections: !count, ..Limits::default() };
    let mut rows = Vec::new();
    for &d in ds {
        let t = match classify_good(sys, d, &limits) {
            Ok(t) => t,
            Err(Error::NotAdmissible(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        for r in &t.rows {
            let mut row = json!({"d": d, "I": r.i.labels(), "count": r.count, "length": r.length});
            if !count {
                row["representatives"] = json!(r.representatives.iter().map(|w| sys.element_string(w)).collect::<Vec<_>>());
                row["relative_order"] = json!(r.relative_order.map(|o| o.to_string()));
                row["mismatch"] = json!(r.mismatch);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(json!({"rows": []}));
    }
    let total: usize = rows.iter().map(|r| r["count"].as_u64().unwrap_or(0) as usize).sum();
    Ok(json!({"type": sys.name, "count": total, "rows": rows}))
}

fn execute(cli: &Cli) -> Res<String> {
    match &cli.command {
        Command::Normal { r#type, word } => {
            let sys = system(r#type)?;
            let a = Artin::new(&sys);
            let b = braid(&a, word)?;
            Ok(format!("{}\n", a.show(&b)))
        }
        Command::Gcd(p) | Command::Lcm(p) => {
            let sys = system(&p.r#type)?;
            let a = Artin::new(&sys);
            let (x, y) = (braid(&a, &p.a)?, braid(&a, &p.b)?);
            let r = match (&cli.command, p.right) {
                (Command::Gcd(_), false) => a.left_gcd(&x, &y),
                (Command::Gcd(_), true) => a.right_gcd(&x, &y),
                (_, false) => a.right_lcm(&x, &y),
                (_, true) => a.left_lcm(&x, &y),
            };
            Ok(format!("{}\n", a.show(&r)))
        }
        Command::Divides(p) => {
            let sys = system(&p.r#type)?;
            let a = Artin::new(&sys);
            let (x, y) = (braid(&a, &p.a)?, braid(&a, &p.b)?);
            let side = if p.right { Side::Right } else { Side::Left };
            Ok(match a.quotient(&x, &y, side) {
                Ok(q) => format!("true {}\n", a.show(&q)),
                Err(_) => "false\n".to_string(),
            })
        }
        Command::RibbonAlpha { r#type, word, i } => {
            let sys = system(r#type)?;
            let r = Ribbon::new(&sys);
            let i = subset(&sys, i)?;
            let b = braid(&r.artin, word)?;
            let (al, om) = r.alpha(i, &b);
            Ok(pretty(&json!({
                "alpha": r.artin.word_string(&al),
                "omega": r.artin.word_string(&om),
                "reduced": r.is_reduced(i, &b),
            })))
        }
        Command::RibbonAtoms { r#type, i } => {
            let sys = system(r#type)?;
            let r = Ribbon::new(&sys);
            let i = subset(&sys, i)?;
            let atoms: Vec<Value> = r
                .atoms_from(i)
                .iter()
                .map(|m| json!({"word": r.artin.word_string(&m.braid), "target": m.target.labels()}))
                .collect();
            Ok(pretty(&json!({"source": i.labels(), "atoms": atoms})))
        }
        Command::ConjGraph { r#type, word, source, twist, fixed, dot } => {
            let sys = system(r#type)?;
            let cat = CycCategory::with_twist(&sys, parse_automorphism(&sys, twist)?);
            let obj = cat.object(subset(&sys, source)?, braid(&cat.artin, word)?)?;
            let fixed = fixed.as_deref().map(|f| parse_automorphism(&sys, f)).transpose()?;
            let g = cat.explore_component(&obj, fixed.as_ref(), cli.max_nodes);
            match dot.as_deref() {
                Some("-") => Ok(cat.to_dot(&g)),
                Some(path) => {
                    std::fs::write(path, cat.to_dot(&g)).map_err(|e| Failure::Domain(e.to_string()))?;
                    Ok(pretty(&cat.to_json(&g)))
                }
                None => Ok(pretty(&cat.to_json(&g))),
            }
        }
        Command::EndoGens { r#type, word, source, twist, fixed, bound } => {
            let sys = system(r#type)?;
            let cat = CycCategory::with_twist(&sys, parse_automorphism(&sys, twist)?);
            let a = cat.artin;
            let obj = cat.object(subset(&sys, source)?, braid(&a, word)?)?;
            let fixed = fixed.as_deref().map(|f| parse_automorphism(&sys, f)).transpose()?;
            let rep = cat.endo_generators(&obj, fixed.as_ref(), *bound);
            let words = |v: &[Braid]| v.iter().map(|b| a.word_string(b)).collect::<Vec<_>>();
            Ok(pretty(&json!({
                "generators": words(&rep.generators),
                "loops": rep.loops.len(),
                "hypothesis_verified": rep.hypothesis_verified,
            })))
        }
        Command::PeriodicCheck { r#type, word, d, i } => {
            let sys = system(r#type)?;
            let a = Artin::new(&sys);
            let i = subset(&sys, i)?;
            let b = braid(&a, word)?;
            let periodic = periodic::is_periodic(&sys, i, &b, *d, &sys.phi);
            let identity = periodic::braid_identity(&sys, i, &b, *d, &sys.phi);
            let mut out = json!({
                "periodic": periodic,
                "braid_identity": identity,
                "simple": b.is_simple(),
            });
            let w = a.image(&b);
            if (b.is_simple() && *d > 1) || (*d == 1 && b == lift(&sys, 1, i, &sys.identity())) {
                let w = if *d == 1 { sys.identity() } else { w };
                let c = good_checks(&sys, *d, i, &w);
                out["good"] = json!(c.good());
                out["checks"] = json!({
                    "stable": c.stable,
                    "lengths": c.lengths,
                    "power": c.power,
                    "braid_identity": c.braid_identity,
                });
                if c.good() {
                    let m = maximality_with_tolerance(&sys, *d, i, &w, BRUTE_FORCE_BOUND, cli.tolerance)?;
                    out["maximal"] = json!(m.brute_force.unwrap_or(m.eigen_criterion));
                    out["eigenspace_dim"] = json!(m.eigenspace_dim);
                    out["coset_rank"] = json!(m.coset_rank);
                }
            } else {
                out["good"] = json!(false);
            }
            Ok(pretty(&out))
        }
        Command::Slide { r#type, word, d, i } => {
            let sys = system(r#type)?;
            let a = Artin::new(&sys);
            let i = subset(&sys, i)?;
            let (c, obj) = slide_to_good(&sys, i, &braid(&a, word)?, *d, &sys.phi)?;
            Ok(pretty(&json!({
                "conjugator": a.word_string(&c),
                "source": obj.source.labels(),
                "word": a.word_string(&obj.braid),
                "length": obj.braid.length(),
            })))
        }
        Command::Good { r#type, d, count, w, i, representatives } => {
            let sys = system(r#type)?;
            if let Some(w) = w {
                let d = d.ok_or_else(|| Failure::Usage("--w needs --d".into()))?;
                let i = subset(&sys, i)?;
                let w = sys.element(&parse_word(w, sys.rank())?)?;
                let c = periodic::certify(&sys, d, i, &w)?;
                let sec = relative_section(&sys, &c, Limits::default().centralizer_cap)?;
                return Ok(pretty(&json!({
                    "type": sys.name,
                    "d": d,
                    "I": c.i.labels(),
                    "w": sys.element_string(&c.w),
                    "good": c.checks.good(),
                    "maximal": c.checks.maximal,
                    "zeta_rank": c.zeta_rank,
                    "relative_order": sec.order.to_string(),
                    "mismatch": sec.mismatch,
                })));
            }
            check_size(&sys, cli.allow_huge)?;
            let ds: Vec<u32> = match d {
                Some(d) => vec![*d],
                None => admissible_ds(&sys),
            };
            Ok(pretty(&good_tables(&sys, &ds, *count, *representatives)?))
        }
        Command::Restrict { r#type, n, d } => {
            let sys = system(r#type)?;
            let res = restriction_of_scalars(&sys, *n, *d, &Limits::default())?;
            Ok(pretty(&json!({
                "type": res.system.name,
                "m": res.m,
                "d": d,
                "blocks": res.blocks.iter().map(|b| sys.element_string(b)).collect::<Vec<_>>(),
                "I": res.cert.i.labels(),
                "good": res.cert.checks.good(),
                "maximal": res.cert.checks.maximal,
            })))
        }
        Command::PosetCheck { r#type, word, bound } => {
            let sys = system(r#type)?;
            let a = Artin::new(&sys);
            let p = verify::decomposition_poset(&a, &braid(&a, word)?, *bound)?;
            let t = verify::check_simply_connected_evidence(&p);
            Ok(pretty(&json!({
                "elements": p.elements.len(),
                "relations": p.relations.len(),
                "connected": t.connected,
                "h1_rank": t.h1_rank,
            })))
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if !(cli.tolerance > 0.0 && cli.tolerance < 1e-2) {
        return Outcome { code: 2, stdout: String::new(), stderr: "error: --tolerance must lie in (0, 0.01)\n".into() };
    }
    match execute(&cli) {
        Ok(text) => match &cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
                Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
            },
            None => Outcome { code: 0, stdout: text, stderr: String::new() },
        },
        Err(Failure::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Domain(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

/// Runs with the process arguments and writes the streams.
pub fn main_with_args() -> i32 {
    let o = run(std::env::args_os());
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    o.code
}
